#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "lodeg/cli.hpp"
#include "lodeg/errors.hpp"
#include "lodeg/invariants.hpp"

using namespace lodeg;
using testing_helpers::names;
using testing_helpers::qp;

namespace {

VarietySpec golden(const std::string& name) {
  return cli::load_variety_file(std::string(LODEG_DATA_DIR) + "/" + name + ".json").spec;
}

VarietySpec spec_of(const std::vector<std::string>& vars, std::initializer_list<const char*> gens) {
  VarietySpec s;
  s.variables = vars;
  for (const char* g : gens) s.generators.push_back(qp(g, vars));
  return s;
}

DegreeVector vec(DegreeVector::Kind kind, std::vector<long long> values) {
  DegreeVector v;
  v.kind = kind;
  v.d = static_cast<int>(values.size()) - 1;
  v.n = values.size();
  v.values = std::move(values);
  return v;
}

using Coeffs = std::vector<long long>;

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Coefficients of sum_i c_i (s + shift)^i, by repeated multiplication.
Coeffs substitute(const Coeffs& c, long long shift) {
  Coeffs out(c.size(), 0), power{1};
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t k = 0; k < power.size(); ++k) out[k] += c[i] * power[k];
    power = mul(power, {shift, 1});
  }
  return out;
}

// b(t) = sum_j (-1)^{d-j} a_j (1+t)^j, so sum_j (-1)^{d-j} a_j s^j = b(s-1).
Coeffs oracle_forward(const Coeffs& a) {
  const std::size_t d = a.size() - 1;
  Coeffs signed_a(a);
  for (std::size_t j = 0; j <= d; ++j) signed_a[j] *= ((d - j) % 2 ? -1 : 1);
  return substitute(signed_a, 1);
}

Coeffs oracle_inverse(const Coeffs& b) {
  Coeffs out = substitute(b, -1);
  const std::size_t d = b.size() - 1;
  for (std::size_t j = 0; j <= d; ++j) out[j] *= ((d - j) % 2 ? -1 : 1);
  return out;
}

const RunConfig kCfg;

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("chern-mather transform on known vectors") {
  using K = DegreeVector::Kind;
  CHECK(chern_mather_from_bidegrees(vec(K::Bidegree, {2, 2, 2})).values == Coeffs{2, 2, 2});
  CHECK(chern_mather_from_bidegrees(vec(K::Bidegree, {1, 4, 5, 3})).values == Coeffs{1, 3, 4, 3});
  CHECK(chern_mather_from_bidegrees(vec(K::Bidegree, {6, 4})).values == Coeffs{-2, 4});
  CHECK(bidegrees_from_chern_mather(vec(K::ChernMather, {-2, 4})).values == Coeffs{6, 4});
  CHECK(chern_mather_from_bidegrees(vec(K::Bidegree, {1, 4, 5, 3})).kind == K::ChernMather);
}

TEST_CASE("transform matches a polynomial expansion and round-trips") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t len = 1 + rng() % 9;
    Coeffs b(len);
    for (auto& x : b) x = static_cast<long long>(rng() % 2001) - 1000;
    DegreeVector bv = vec(DegreeVector::Kind::Bidegree, b);
    DegreeVector a = chern_mather_from_bidegrees(bv);
    CHECK(a.values == oracle_inverse(b));
    CHECK(oracle_forward(a.values) == b);
    CHECK(bidegrees_from_chern_mather(a).values == b);
  }
}

TEST_CASE("alternating sum") {
  CHECK(alternating_sum(vec(DegreeVector::Kind::Bidegree, {1, 4, 5, 3})) == 1);
  CHECK(alternating_sum(vec(DegreeVector::Kind::Bidegree, {0, 6, 3})) == -3);
}

TEST_CASE("sphere") {
  VarietySpec s = golden("sphere");
  CHECK(bidegrees(s, kCfg).values == Coeffs{2, 2, 2});
  CHECK(sectional_lo_degrees(s, kCfg).values == Coeffs{2, 2, 2});
  CHECK(polar_degrees(s, kCfg).values == Coeffs{2, 2, 2});
  CHECK(lo_degree(s, kCfg) == 2);
  CHECK(degree(s, kCfg) == 2);
  CHECK_FALSE(dual_contains_hyperplane_at_infinity(s, kCfg));
  Overrides over;
  over.covector = std::vector<mpq_class>{10, 5, 17};
  CHECK(lo_degree(s, kCfg, over) == 2);
  CHECK_THROWS_AS(euler_obstruction_at_cone_point(s, kCfg), NotACone);
}

TEST_CASE("curve") {
  VarietySpec s = golden("curve");
  DegreeVector b = bidegrees(s, kCfg);
  CHECK(b.values == Coeffs{6, 4});
  CHECK(b.d == 1);
  CHECK(polar_degrees(s, kCfg).values == Coeffs{8, 4});
  CHECK(dual_contains_hyperplane_at_infinity(s, kCfg));
  VerificationReport r = verify_polar_relation(s, kCfg);
  CHECK(r.pass);
  CHECK(verify_theorem_bs(s, kCfg).pass);
}

TEST_CASE("binomial hypersurface") {
  VarietySpec s = golden("binomial");
  DegreeVector b = bidegrees(s, kCfg);
  CHECK(b.values == Coeffs{1, 4, 5, 3});
  CHECK(polar_degrees(s, kCfg).values == Coeffs{3, 6, 6, 3});
  CHECK(dual_contains_hyperplane_at_infinity(s, kCfg));
  CHECK(chern_mather_from_bidegrees(b).values == Coeffs{1, 3, 4, 3});
}

TEST_CASE("cubic surface") {
  VarietySpec s = golden("cubic");
  CHECK(bidegrees(s, kCfg).values == Coeffs{2, 4, 3});
  CHECK(sectional_lo_degrees(s, kCfg).values == Coeffs{2, 4, 3});
  CHECK(degree(s, kCfg) == 3);
}

TEST_CASE("linear spaces") {
  auto v = names({"x1", "x2", "x3"});
  VarietySpec plane = spec_of(v, {"x3"});
  CHECK(bidegrees(plane, kCfg).values == Coeffs{0, 0, 1});
  EulerObstruction e = euler_obstruction_at_cone_point(plane, kCfg);
  CHECK(e.value == 1);
  VarietySpec point = spec_of(v, {"x1 - 1", "x2 + 2", "x3"});
  CHECK(lo_degree(point, kCfg) == 1);
  CHECK(degree(point, kCfg) == 1);
}

TEST_CASE("euler obstruction of cones over smooth plane curves") {
  // the vertex of a cone over a smooth plane curve of degree k has Eu = 2k - k^2
  auto v = names({"x1", "x2", "x3"});
  CHECK(euler_obstruction_at_cone_point(spec_of(v, {"x1*x2 - x3^2"}), kCfg).value == 0);
  CHECK(euler_obstruction_at_cone_point(spec_of(v, {"x1^3 + x2^3 + x3^3"}), kCfg).value == -3);
}

TEST_CASE("critical correspondence") {
  Overrides over;
  over.covector = std::vector<mpq_class>{10, 5, 17};
  over.slice = std::vector<QPoly>{qp("x3 - 6", names({"x1", "x2", "x3"}))};
  CorrespondenceReport sphere = critical_correspondence(golden("sphere"), 1, kCfg, over);
  CHECK(sphere.count_critical == 2);
  CHECK(sphere.count_conormal == 2);
  CHECK(sphere.expected == 2);
  CHECK(sphere.generic);

  CorrespondenceReport cubic = critical_correspondence(golden("cubic"), 1, kCfg, over);
  CHECK(cubic.count_conormal == 1);
  CHECK(cubic.expected == 4);
  CHECK_FALSE(cubic.generic);

  for (std::size_t i = 0; i <= 2; ++i) {
    CorrespondenceReport r = critical_correspondence(golden("cubic"), i, kCfg);
    CHECK(r.generic);
    CHECK(r.count_critical == r.expected);
  }
}

TEST_CASE("comparison reports") {
  using K = DegreeVector::Kind;
  DegreeVector b = vec(K::Bidegree, {6, 4});
  CHECK(compare_sectional(b, vec(K::Sectional, {6, 4})).pass);
  CHECK_FALSE(compare_sectional(b, vec(K::Sectional, {6, 5})).pass);
  CHECK(compare_polar(b, vec(K::Polar, {8, 4}), true).pass);
  CHECK_FALSE(compare_polar(b, vec(K::Polar, {8, 4}), false).pass);
  CHECK(compare_polar(vec(K::Bidegree, {2, 2, 2}), vec(K::Polar, {2, 2, 2}), false).pass);
  CHECK_FALSE(compare_polar(vec(K::Bidegree, {2, 2, 2}), vec(K::Polar, {2, 2, 2}), true).pass);
  // containment without the strict inequality at the first nonzero polar degree
  CHECK_FALSE(compare_polar(b, vec(K::Polar, {6, 5}), true).pass);
}

TEST_CASE("sectional degrees equal bidegrees on random hypersurfaces") {
  std::mt19937_64 rng(2024);
  auto v = names({"x1", "x2", "x3"});
  for (int trial = 0; trial < 3; ++trial) {
    std::string f = "1";
    for (int k = 0; k < 5; ++k) {
      long c = static_cast<long>(rng() % 9) - 4;
      if (c == 0) c = 1;
      int e1 = rng() % 3, e2 = rng() % 3, e3 = rng() % 2;
      f += " + " + std::to_string(c) + "*x1^" + std::to_string(e1) + "*x2^" + std::to_string(e2) + "*x3^" +
           std::to_string(e3);
    }
    f += " + x1^3 + x2^2*x3 + x3^3";
    VarietySpec s = spec_of(v, {});
    s.generators.push_back(qp(f, v));
    CAPTURE(f);
    VerificationReport r = verify_theorem_bs(s, kCfg);
    CHECK(r.pass);
  }
}

TEST_CASE("results do not depend on the prime") {
  VarietySpec s = golden("curve");
  RunConfig other;
  other.policy.primes = {2147483587, 2147483579};
  other.seed = Seed{99};
  CHECK(bidegrees(s, other) == bidegrees(s, kCfg));
  CHECK(polar_degrees(s, other) == polar_degrees(s, kCfg));
}

}  // TEST_SUITE
