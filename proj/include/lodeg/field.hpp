#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "lodeg/errors.hpp"

namespace lodeg {

/// Exact rational numbers backed by GMP.
class RationalField {
public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_integer(long long v) const { return Element(static_cast<long>(v)); }
  Element from_rational(const mpq_class& q) const { return q; }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  // Sign used when printing: negative numbers print with a leading '-'.
  bool is_negative(const Element& a) const { return sgn(a) < 0; }
  std::string to_string(const Element& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const { return true; }
};

/// Residues modulo an odd prime p < 2^32, stored reduced in [0, p).
class PrimeField {
public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Element>(r);
  }
  Element from_rational(const mpq_class& q) const;

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  bool is_negative(Element) const { return false; }
  std::string to_string(Element a) const { return std::to_string(a); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Primes used for all Groebner-based counting unless configured otherwise.
inline constexpr std::uint64_t kDefaultPrimes[2] = {2147483647ULL, 2147483629ULL};

/// Throws InputError unless p is an odd prime with 2^30 < p < 2^32.
void validate_working_prime(std::uint64_t p);

}  // namespace lodeg
