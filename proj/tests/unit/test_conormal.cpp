#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "lodeg/conormal.hpp"
#include "lodeg/errors.hpp"

using namespace lodeg;
using testing_helpers::names;
using testing_helpers::pp;
using testing_helpers::qp;

namespace {

const PrimeField F(2147483647);

VarietySpec spec_of(const std::vector<std::string>& vars, std::initializer_list<const char*> gens) {
  VarietySpec s;
  s.variables = vars;
  for (const char* g : gens) s.generators.push_back(qp(g, vars));
  return s;
}

ModVariety mod(const VarietySpec& s) { return reduce_variety(s, F); }

Ideal ideal_in(std::size_t nvars, const std::vector<std::string>& vars, std::initializer_list<const char*> gens) {
  std::vector<PPoly> out;
  for (const char* g : gens) out.push_back(pp(g, vars, F));
  return Ideal(F, nvars, std::move(out));
}

// each term's degree in the variables [lo, hi)
bool homogeneous_in(const PPoly& p, std::size_t lo, std::size_t hi) {
  int deg = -1;
  for (const auto& t : p.terms()) {
    int d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += static_cast<int>(t.mono[i]);
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

// sum over permutations of a 3x3 matrix of symbols, written out by hand
const char* kDet3 = "a*e*i + b*f*g + c*d*h - c*e*g - b*d*i - a*f*h";

}  // namespace

TEST_SUITE("conormal") {

TEST_CASE("codimension") {
  auto v = names({"x", "y", "z"});
  CHECK(codimension(spec_of(v, {"x^2 + y^2 + z^2 - 100"})) == 1);
  CHECK(codimension(spec_of(v, {"x^2 + y^2 + z^2 - 1", "y - x^2"})) == 2);
  CHECK(codimension(spec_of(v, {"x", "y"})) == 2);
  CHECK_THROWS_AS(codimension(spec_of(v, {"x", "x - 1"})), InputError);
  CHECK_THROWS_AS(codimension(spec_of(v, {"0"})), InputError);
}

TEST_CASE("minors of a symbolic matrix") {
  auto v = names({"a", "b", "c", "d", "e", "f", "g", "h", "i"});
  PolyMatrix m(3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m[r].push_back(PPoly::variable(F, 9, 3 * r + c));
  }
  auto full = minors(m, 3);
  REQUIRE(full.size() == 1);
  CHECK(full.front() == pp(kDet3, v, F));
  CHECK(minors(m, 2).size() == 9);
  CHECK(minors(m, 1).size() == 9);
  CHECK(minors(m, 4).empty());
}

TEST_CASE("affine conormal of linear spaces and points") {
  auto v = names({"x1", "x2", "x3"});
  auto xu = names({"x1", "x2", "x3", "u1", "u2", "u3"});
  ConormalIdeal plane = affine_conormal_ideal(mod(spec_of(v, {"x3"})), Seed{1});
  CHECK(plane.variables == xu);
  CHECK(same_ideal(plane.ideal, ideal_in(6, xu, {"x3", "u1", "u2"})));
  ConormalIdeal origin = affine_conormal_ideal(mod(spec_of(v, {"x1", "x2", "x3"})), Seed{1});
  CHECK(same_ideal(origin.ideal, ideal_in(6, xu, {"x1", "x2", "x3"})));
}

TEST_CASE("affine conormal of the sphere vanishes exactly on normal pairs") {
  auto v = names({"x1", "x2", "x3"});
  ConormalIdeal c = affine_conormal_ideal(mod(spec_of(v, {"x1^2 + x2^2 + x3^2 - 100"})), Seed{2});
  CHECK(krull_dimension(c.ideal) == 3);
  GroebnerBasis gb = buchberger(c.ideal, MonomialOrder::grevlex());
  // rational points of the sphere from the parametrization by lines through (0,0,10)
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    mpq_class s(static_cast<long>(rng() % 50) - 25, 1 + static_cast<long>(rng() % 9));
    mpq_class t(static_cast<long>(rng() % 50) - 25, 1 + static_cast<long>(rng() % 9));
    mpq_class den = 1 + s * s + t * t;
    std::vector<mpq_class> x{20 * s / den, 20 * t / den, 10 * (s * s + t * t - 1) / den};
    mpq_class lambda(static_cast<long>(1 + rng() % 100), 7);
    std::vector<std::uint64_t> normal, skew;
    for (const auto& xi : x) normal.push_back(F.from_rational(xi));
    skew = normal;
    for (const auto& xi : x) {
      normal.push_back(F.from_rational(lambda * xi));
      skew.push_back(F.from_rational(lambda * xi + 1));
    }
    bool vanishes = true, skew_vanishes = true;
    for (const auto& g : gb.basis()) {
      vanishes = vanishes && g.evaluate(normal) == 0;
      skew_vanishes = skew_vanishes && g.evaluate(skew) == 0;
    }
    CHECK(vanishes);
    CHECK_FALSE(skew_vanishes);
  }
}

TEST_CASE("multiplier and minors constructions agree on hypersurfaces") {
  auto v = names({"x1", "x2", "x3"});
  for (const char* f : {"x1^2 + x2^2 + x3^2 - 100", "1 + x1 + x2^2 + x3^3", "x1*x2 - x3^2 + x1"}) {
    ModVariety x = mod(spec_of(v, {f}));
    ConormalIdeal a = affine_conormal_ideal(x, Seed{3}, {}, ConormalRoute::Minors);
    ConormalIdeal b = affine_conormal_ideal(x, Seed{3}, {}, ConormalRoute::Multiplier);
    CHECK(same_ideal(a.ideal, b.ideal));
  }
}

TEST_CASE("non-reduced generators are rejected") {
  auto v = names({"x1", "x2", "x3"});
  CHECK_THROWS_AS(affine_conormal_ideal(mod(spec_of(v, {"x1^2"})), Seed{1}), DimensionMismatch);
}

TEST_CASE("conormal of a cone is bihomogeneous") {
  auto v = names({"x1", "x2", "x3"});
  ConormalIdeal c = affine_conormal_ideal(mod(spec_of(v, {"x1*x2 - x3^2"})), Seed{4});
  GroebnerBasis gb = buchberger(c.ideal, MonomialOrder::grevlex());
  for (const auto& g : gb.basis()) {
    CHECK(homogeneous_in(g, 0, 3));
    CHECK(homogeneous_in(g, 3, 6));
  }
}

TEST_CASE("projective conormal of a hyperplane") {
  auto v = names({"x1", "x2", "x3"});
  ConormalIdeal c = projective_conormal_ideal(mod(spec_of(v, {"x1"})), Seed{1});
  auto py = names({"p0", "p1", "p2", "p3", "y0", "y1", "y2", "y3"});
  CHECK(c.variables == py);
  CHECK(same_ideal(c.ideal, ideal_in(8, py, {"p1", "y0", "y2", "y3"})));
}

TEST_CASE("projective closure of the curve") {
  auto v = names({"x", "y", "z"});
  auto pv = names({"u", "x", "y", "z"});
  ModVariety x = mod(spec_of(v, {"x^2 + y^2 + z^2 - 1", "y - x^2"}));
  Ideal closure(F, 4, projective_closure(x));
  CHECK(same_ideal(closure, ideal_in(4, pv, {"x^2 + y^2 + z^2 - u^2", "y*u - x^2"})));
  CHECK_NOTHROW(projective_conormal_ideal(x, Seed{1}));
}

TEST_CASE("projective conormal of the binomial hypersurface projects into its dual") {
  auto v = names({"x1", "x2", "x3", "x4"});
  ConormalIdeal c = projective_conormal_ideal(mod(spec_of(v, {"x1^2*x2 - x3*x4"})), Seed{5});
  Ideal dual = eliminate(c.ideal, 5);
  auto py = names({"p0", "p1", "p2", "p3", "p4", "y0", "y1", "y2", "y3", "y4"});
  PPoly binomial = pp("y1^2*y2 + 4*y0*y3*y4", py, F);
  CHECK(buchberger(dual, MonomialOrder::grevlex()).contains(binomial));
  CHECK_FALSE(dual.is_zero());
}

TEST_CASE("slices") {
  auto v = names({"x1", "x2", "x3"});
  ModVariety sphere = mod(spec_of(v, {"x1^2 + x2^2 + x3^2 - 100"}));
  SlicedVariety circle = slice(sphere, {pp("x3 - 6", v, F)});
  CHECK(circle.variety.variables == names({"x1", "x2"}));
  CHECK(circle.variety.dimension == 1);
  CHECK(circle.variety.generators.front() == pp("x1^2 + x2^2 - 64", names({"x1", "x2"}), F));
  CHECK(circle.map.images[2] == PPoly::constant(F, 2, 6));

  ModVariety same = slice_variety(sphere, 0, Seed{1});
  CHECK(same.generators == sphere.generators);

  auto w = names({"x", "y", "z"});
  ModVariety curve = mod(spec_of(w, {"x^2 + y^2 + z^2 - 1", "y - x^2"}));
  ModVariety pts = slice_variety(curve, 1, Seed{9});
  CHECK(pts.dimension == 0);
  CHECK(count_points(pts.ideal(), Seed{1}).points == 4);

  CHECK_THROWS_AS(slice(sphere, {pp("x3 - 6", v, F), pp("2*x3 - 12", v, F)}), DegenerateSlice);
  CHECK_THROWS_AS(slice(sphere, {pp("x3 - 6", v, F), pp("x3 - 7", v, F)}), DegenerateSlice);
}

TEST_CASE("affine forms are solved by pivot substitution") {
  auto v = names({"x1", "x2", "x3"});
  AffineParametrization m = solve_affine_forms({pp("x1 + 2*x2 + 3*x3 - 4", v, F)}, 3, F);
  CHECK(m.free == std::vector<std::size_t>{0, 1});
  // x3 is the pivot: x3 = (4 - x1 - 2*x2)/3
  std::vector<std::uint64_t> s{5, 7};
  std::uint64_t x3 = m.images[2].evaluate(s);
  CHECK(F.add(F.add(5, F.mul(2, 7)), F.mul(3, x3)) == 4);
  CHECK(m.pullback({1, 0, 0}) == std::vector<std::uint64_t>{1, 0});
}

TEST_CASE("both critical-system routes count the same points") {
  std::mt19937_64 rng(31);
  auto v = names({"x1", "x2", "x3"});
  for (const char* f : {"x1^2 + x2^2 + x3^2 - 100", "1 + x1 + x2^2 + x3^3", "x1*x2*x3 - x1 + 2*x2^2 - 3"}) {
    ModVariety x = mod(spec_of(v, {f}));
    for (std::size_t i = 0; i <= 2; ++i) {
      Seed s{rng()};
      CriticalSystem sys{x.generators, x.codim(),
                         solve_affine_forms(random_affine_forms(s, "x", i, 3, F), 3, F),
                         CovectorConstraint::on(random_affine_forms(s, "u", 3 - i, 3, F))};
      CHECK(count_critical(sys, s, {}, ConormalRoute::Multiplier) ==
            count_critical(sys, s, {}, ConormalRoute::Minors));
    }
  }
}

}  // TEST_SUITE
