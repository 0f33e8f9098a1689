#include "lodeg/univariate.hpp"

#include <stdexcept>

namespace lodeg {

UPoly upoly_mul(const UPoly& a, const UPoly& b, const PrimeField& f) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<std::uint64_t> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return UPoly(std::move(out));
}

UPoly upoly_derivative(const UPoly& a, const PrimeField& f) {
  if (a.degree() < 1) return UPoly();
  std::vector<std::uint64_t> out(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    out[i - 1] = f.mul(a.coeffs()[i], f.from_integer(static_cast<long long>(i)));
  }
  return UPoly(std::move(out));
}

UPoly upoly_monic(const UPoly& a, const PrimeField& f) {
  if (a.is_zero()) return a;
  std::uint64_t inv = f.inv(a.coeffs().back());
  std::vector<std::uint64_t> out = a.coeffs();
  for (auto& c : out) c = f.mul(c, inv);
  return UPoly(std::move(out));
}

void upoly_divmod(const UPoly& a, const UPoly& b, const PrimeField& f, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<std::uint64_t> rem = a.coeffs();
  const int db = b.degree();
  const std::uint64_t lead_inv = f.inv(b.coeffs().back());
  std::vector<std::uint64_t> quo(rem.size() > static_cast<std::size_t>(db) ? rem.size() - db : 0, 0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    std::uint64_t c = f.mul(rem[k], lead_inv);
    if (c == 0) continue;
    quo[k - db] = c;
    for (int j = 0; j <= db; ++j) rem[k - db + j] = f.sub(rem[k - db + j], f.mul(c, b.coeffs()[j]));
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly upoly_gcd(UPoly a, UPoly b, const PrimeField& f) {
  while (!b.is_zero()) {
    UPoly q, r;
    upoly_divmod(a, b, f, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return upoly_monic(a, f);
}

UPoly upoly_lcm(const UPoly& a, const UPoly& b, const PrimeField& f) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  UPoly g = upoly_gcd(a, b, f);
  UPoly q, r;
  upoly_divmod(upoly_mul(a, b, f), g, f, q, r);
  return upoly_monic(q, f);
}

int upoly_squarefree_degree(const UPoly& a, const PrimeField& f) {
  if (a.degree() <= 0) return 0;
  UPoly g = upoly_gcd(a, upoly_derivative(a, f), f);
  return a.degree() - g.degree();
}

}  // namespace lodeg
