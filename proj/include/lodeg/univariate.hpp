#pragma once

#include <cstdint>
#include <vector>

#include "lodeg/field.hpp"

namespace lodeg {

/// Dense univariate polynomial over a prime field, coefficients by
/// increasing degree. The zero polynomial is the empty vector.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<std::uint64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::uint64_t> c_;
};

UPoly upoly_mul(const UPoly& a, const UPoly& b, const PrimeField& f);
UPoly upoly_derivative(const UPoly& a, const PrimeField& f);
UPoly upoly_monic(const UPoly& a, const PrimeField& f);
// quotient and remainder of a by nonzero b
void upoly_divmod(const UPoly& a, const UPoly& b, const PrimeField& f, UPoly& q, UPoly& r);
UPoly upoly_gcd(UPoly a, UPoly b, const PrimeField& f);  // monic
UPoly upoly_lcm(const UPoly& a, const UPoly& b, const PrimeField& f);  // monic
/// Number of distinct roots in the algebraic closure (degree < p assumed).
int upoly_squarefree_degree(const UPoly& a, const PrimeField& f);

}  // namespace lodeg
