#include "lodeg/polynomial.hpp"

namespace lodeg {

PPoly reduce_mod(const QPoly& p, const PrimeField& field) {
  std::vector<Term<PrimeField>> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({field.from_rational(t.coeff), t.mono});
  return PPoly::from_terms(field, p.nvars(), p.order(), std::move(terms));
}

}  // namespace lodeg
