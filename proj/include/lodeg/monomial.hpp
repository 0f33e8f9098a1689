#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace lodeg {

/// Upper bound on the number of variables of any polynomial ring.
inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector. Entries past the ring's variable count stay zero, so
/// monomials of one ring compare and hash consistently.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const noexcept { return degree_; }
  // bit i is set iff variable i occurs (variables >= 32 never occur)
  std::uint32_t support() const noexcept { return support_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e);

  // Throws std::overflow_error when an exponent leaves the 16-bit range.
  Monomial operator*(const Monomial& o) const;

  bool divides(const Monomial& o) const noexcept {
    if (degree_ > o.degree_ || (support_ & ~o.support_) != 0) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] > o.exps_[i]) return false;
    }
    return true;
  }
  // Precondition: divides(o).
  Monomial quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const noexcept { return (support_ & o.support_) == 0; }

  bool operator==(const Monomial& o) const noexcept {
    return degree_ == o.degree_ && exps_ == o.exps_;
  }

  std::size_t hash() const noexcept;

private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Global monomial orders: grevlex, lex, and the elimination order
/// block(k) (lex between the first k variables and the rest, grevlex within).
class MonomialOrder {
public:
  enum class Kind { Grevlex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder block(std::size_t k) { return MonomialOrder(Kind::Block, k); }

  Kind kind() const noexcept { return kind_; }
  std::size_t block_size() const noexcept { return block_; }

  // Three-way comparison of a and b in a ring with nvars variables:
  // negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept;

  bool operator==(const MonomialOrder& o) const noexcept {
    return kind_ == o.kind_ && block_ == o.block_;
  }

  std::string name() const;

private:
  MonomialOrder(Kind k, std::size_t block) : kind_(k), block_(block) {}

  Kind kind_;
  std::size_t block_;
};

}  // namespace lodeg
