#include "lodeg/monomial.hpp"

#include <algorithm>

namespace lodeg {

namespace {

constexpr unsigned kMaxExponent = 0xFFFF;

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw std::length_error("too many variables: " + std::to_string(exponents.size()));
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw std::length_error("variable index out of range");
  if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
  if (e > 0) {
    support_ |= (1U << i);
  } else {
    support_ &= ~(1U << i);
  }
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = static_cast<unsigned>(exps_[i]) + o.exps_[i];
    if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + o.degree_;
  r.support_ = support_ | o.support_;
  return r;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(o.exps_[i] - exps_[i]);
    if (r.exps_[i] != 0) r.support_ |= (1U << i);
  }
  r.degree_ = o.degree_ - degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::max(exps_[i], o.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  r.support_ = support_ | o.support_;
  return r;
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the exponent words
  std::uint64_t h = 14695981039346656037ULL;
  for (std::uint16_t e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b,
                           std::size_t nvars) const noexcept {
  switch (kind_) {
    case Kind::Grevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = nvars; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
    case Kind::Lex: {
      for (std::size_t i = 0; i < nvars; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    }
    case Kind::Block: {
      std::size_t k = std::min(block_, nvars);
      int c = grevlex_range(a, b, 0, k);
      if (c != 0) return c;
      return grevlex_range(a, b, k, nvars);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Block:
      return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace lodeg
