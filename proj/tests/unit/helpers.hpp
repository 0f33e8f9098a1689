#pragma once

#include <string>
#include <vector>

#include "lodeg/parse.hpp"
#include "lodeg/polynomial.hpp"

namespace testing_helpers {

inline std::vector<std::string> names(std::initializer_list<const char*> xs) {
  return std::vector<std::string>(xs.begin(), xs.end());
}

inline lodeg::PPoly pp(const std::string& text, const std::vector<std::string>& vars,
                       const lodeg::PrimeField& f,
                       lodeg::MonomialOrder order = lodeg::MonomialOrder::grevlex()) {
  return lodeg::parse_polynomial(text, vars, f, order);
}

inline lodeg::QPoly qp(const std::string& text, const std::vector<std::string>& vars) {
  return lodeg::parse_polynomial(text, vars, lodeg::RationalField{});
}

}  // namespace testing_helpers
