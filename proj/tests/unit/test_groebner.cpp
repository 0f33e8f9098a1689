#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "lodeg/errors.hpp"
#include "lodeg/groebner.hpp"
#include "lodeg/univariate.hpp"

using namespace lodeg;
using testing_helpers::names;
using testing_helpers::pp;

namespace {

const PrimeField F(2147483647);

Ideal ideal_of(std::initializer_list<const char*> gens, const std::vector<std::string>& v) {
  std::vector<PPoly> out;
  for (const char* g : gens) out.push_back(pp(g, v, F));
  return Ideal(F, v.size(), std::move(out));
}

// Buchberger's criterion checked directly: all S-polynomials reduce to zero.
bool satisfies_criterion(const GroebnerBasis& gb) {
  const auto& b = gb.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      Monomial l = b[i].leading_monomial().lcm(b[j].leading_monomial());
      PPoly s = b[i].mul_term(F.inv(b[i].leading_coefficient()), b[i].leading_monomial().quotient_of(l)) -
                b[j].mul_term(F.inv(b[j].leading_coefficient()), b[j].leading_monomial().quotient_of(l));
      if (!normal_form(s, gb).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("twisted cubic basis") {
  auto v = names({"x", "y", "z"});
  Ideal I = ideal_of({"y - x^2", "z - x^3"}, v);
  GroebnerBasis gb = buchberger(I, MonomialOrder::grevlex());
  CHECK(satisfies_criterion(gb));
  for (const auto& g : I.generators()) CHECK(gb.contains(g));
  CHECK(gb.contains(pp("x*z - y^2", v, F)));
  CHECK_FALSE(gb.contains(pp("x - y", v, F)));
  CHECK(krull_dimension(gb) == 1);
  for (const auto& g : gb.basis()) CHECK(g.leading_coefficient() == 1);
}

TEST_CASE("reduced basis does not depend on the generating set") {
  auto v = names({"x", "y", "z"});
  std::mt19937_64 rng(11);
  Ideal I = ideal_of({"x^2 + y*z - 1", "x*y - z^2", "y^3 - x + z"}, v);
  GroebnerBasis gb = buchberger(I, MonomialOrder::grevlex());
  CHECK(satisfies_criterion(gb));
  for (int trial = 0; trial < 5; ++trial) {
    // invertible combinations of the generators plus a redundant member
    const auto& g = I.generators();
    std::vector<PPoly> mixed;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t c = 1 + rng() % 1000;
      mixed.push_back(g[i] + g[(i + 1) % g.size()].scaled(c));
    }
    mixed.push_back(g[0] * g[1]);
    // combinations (a+cb, b+c'c, c+c''a) are invertible for generic c's
    GroebnerBasis other = buchberger(Ideal(F, 3, mixed), MonomialOrder::grevlex());
    CHECK(other == gb);
  }
  GroebnerBasis lex = buchberger(I, MonomialOrder::lex());
  CHECK(satisfies_criterion(lex));
  for (const auto& g : I.generators()) CHECK(lex.contains(g));
}

TEST_CASE("unit and zero ideals") {
  auto v = names({"x", "y"});
  CHECK(buchberger(ideal_of({"x*y - 1", "x"}, v), MonomialOrder::grevlex()).is_unit());
  CHECK(is_unit_ideal(ideal_of({"x^2 + 1", "x^2 + 2"}, v)));
  CHECK(krull_dimension(ideal_of({"x - 1", "x - 2"}, v)) == -1);
  CHECK(krull_dimension(Ideal(F, 2)) == 2);
  CHECK(krull_dimension(ideal_of({"x*y"}, v)) == 1);
  CHECK(krull_dimension(ideal_of({"x*y", "x*(x - 1)"}, v)) == 1);
  CHECK(krull_dimension(ideal_of({"x^2", "y^3 - x"}, v)) == 0);
}

TEST_CASE("elimination recovers the implicit equations") {
  auto v = names({"t", "x", "y", "z"});
  Ideal param = ideal_of({"x - t", "y - t^2", "z - t^3"}, v);
  Ideal implicit = eliminate(param, 1);
  for (const auto& g : implicit.generators()) CHECK_FALSE(g.uses_variable(0));
  CHECK(same_ideal(implicit, ideal_of({"y - x^2", "z - x*y", "x*z - y^2"}, v)));
}

TEST_CASE("saturation and intersection") {
  auto v = names({"x", "y", "z"});
  CHECK(same_ideal(saturate(ideal_of({"x*y", "x*z"}, v), pp("x", v, F)), ideal_of({"y", "z"}, v)));
  CHECK(same_ideal(intersect(ideal_of({"x"}, v), ideal_of({"y"}, v)), ideal_of({"x*y"}, v)));
  CHECK(same_ideal(intersect(ideal_of({"x", "y"}, v), ideal_of({"z"}, v)), ideal_of({"x*z", "y*z"}, v)));
  Ideal I = ideal_of({"x*y^2", "x^2*y"}, v);
  Ideal J = ideal_of({"x", "y"}, v);
  CHECK(same_ideal(saturate_by_ideal(I, J, Seed{5}), ideal_of({"x*y"}, v)));
  CHECK(same_ideal(saturate_by_ideal(I, Ideal::unit(F, 3), Seed{5}), I));
  // saturating by a nonzerodivisor changes nothing
  CHECK(same_ideal(saturate(ideal_of({"x^2 - y"}, v), pp("z + 1", v, F)), ideal_of({"x^2 - y"}, v)));
}

TEST_CASE("quotient basis") {
  auto v = names({"x", "y"});
  GroebnerBasis gb = buchberger(ideal_of({"x^2 - 1", "y^3"}, v), MonomialOrder::grevlex());
  QuotientBasis qb = quotient_basis(gb);
  CHECK(qb.size() == 6);
  CHECK(qb.monomials.front().is_one());
  CHECK_THROWS_AS(quotient_basis(buchberger(ideal_of({"x*y"}, v), MonomialOrder::grevlex())),
                  NotZeroDimensional);
  CHECK(quotient_basis(buchberger(ideal_of({"x", "x - 1"}, v), MonomialOrder::grevlex())).size() == 0);
}

TEST_CASE("point counts of small systems") {
  auto v = names({"x", "y"});
  PointCount circle_line = count_points(ideal_of({"x^2 + y^2 - 1", "x - y"}, v), Seed{1});
  CHECK(circle_line.points == 2);
  PointCount tangent = count_points(ideal_of({"x^2 + y^2 - 1", "x - 1"}, v), Seed{1});
  CHECK(tangent.points == 1);
  CHECK(tangent.quotient_dimension == 2);
  // Bezout for two generic conics
  CHECK(count_points(ideal_of({"x^2 + 3*x*y - y + 2", "y^2 - 5*x*y + x - 7"}, v), Seed{2}).points == 4);
  CHECK(count_points(ideal_of({"x - 1", "x - 2"}, v), Seed{3}).points == 0);
}

TEST_CASE("point counts of univariate products match the distinct roots") {
  auto v = names({"x", "y"});
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int factors = 1 + static_cast<int>(rng() % 6);
    std::set<std::uint64_t> roots;
    PPoly prod = PPoly::constant(F, 2, 1);
    for (int k = 0; k < factors; ++k) {
      std::uint64_t r = rng() % 4;  // small range so repeated roots occur
      roots.insert(r);
      prod = prod * (PPoly::variable(F, 2, 0) - PPoly::constant(F, 2, r));
    }
    PPoly line = PPoly::variable(F, 2, 1) - PPoly::variable(F, 2, 0).scaled(3);
    PointCount pc = count_points(Ideal(F, 2, {prod, line}), Seed{static_cast<std::uint64_t>(trial)});
    CHECK(pc.points == roots.size());
    CHECK(pc.quotient_dimension == static_cast<std::size_t>(factors));
  }
}

TEST_CASE("small characteristic is refused") {
  PrimeField f3(3);
  auto v = names({"x"});
  Ideal I(f3, 1, {pp("x^4 + x + 1", v, f3)});
  CHECK_THROWS_AS(count_points(I, Seed{1}), CharacteristicHazard);
}

TEST_CASE("budget is enforced") {
  auto v = names({"a", "b", "c", "d", "e"});
  // cyclic-5 takes far longer than a microsecond
  Ideal I = ideal_of({"a + b + c + d + e", "a*b + b*c + c*d + d*e + e*a",
                      "a*b*c + b*c*d + c*d*e + d*e*a + e*a*b",
                      "a*b*c*d + b*c*d*e + c*d*e*a + d*e*a*b + e*a*b*c", "a*b*c*d*e - 1"},
                     v);
  CHECK_THROWS_AS(buchberger(I, MonomialOrder::grevlex(), Budget::seconds(1e-6)), BudgetExceeded);
}

TEST_CASE("cyclic-5 has 70 solutions") {
  auto v = names({"a", "b", "c", "d", "e"});
  Ideal I = ideal_of({"a + b + c + d + e", "a*b + b*c + c*d + d*e + e*a",
                      "a*b*c + b*c*d + c*d*e + d*e*a + e*a*b",
                      "a*b*c*d + b*c*d*e + c*d*e*a + d*e*a*b + e*a*b*c", "a*b*c*d*e - 1"},
                     v);
  GroebnerBasis gb = buchberger(I, MonomialOrder::grevlex());
  CHECK(satisfies_criterion(gb));
  PointCount pc = count_points(gb, Seed{9});
  CHECK(pc.points == 70);
  CHECK(pc.quotient_dimension == 70);
}

TEST_CASE("univariate helpers") {
  // (x-1)^2 (x-2)
  UPoly a({F.from_integer(-2), 5, F.from_integer(-4), 1});
  CHECK(upoly_squarefree_degree(a, F) == 2);
  UPoly b({F.from_integer(-1), 1});
  CHECK(upoly_gcd(a, b, F).degree() == 1);
  CHECK(upoly_lcm(a, b, F).degree() == 3);
  UPoly q, r;
  upoly_divmod(a, b, F, q, r);
  CHECK(r.is_zero());
  CHECK(upoly_mul(q, b, F).coeffs() == a.coeffs());
}

}  // TEST_SUITE
