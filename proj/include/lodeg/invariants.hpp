#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lodeg/budget.hpp"
#include "lodeg/conormal.hpp"
#include "lodeg/genericity.hpp"
#include "lodeg/variety.hpp"

namespace lodeg {

struct RunConfig {
  Seed seed{0x5EED};
  AgreementPolicy policy;
  Budget budget = Budget::seconds(120);
};

struct DegreeVector {
  enum class Kind { Bidegree, Sectional, Polar, ChernMather };
  Kind kind = Kind::Bidegree;
  std::vector<long long> values;  // index i; for Polar index i holds delta_{i+1}
  int d = 0;
  std::size_t n = 0;

  bool operator==(const DegreeVector&) const = default;
};

std::string kind_name(DegreeVector::Kind kind);

/// Explicit choices reproducing a hand-worked example instead of random ones.
struct Overrides {
  std::optional<std::vector<mpq_class>> covector;  // u in C^n
  std::optional<std::vector<QPoly>> slice;         // affine forms cutting out L
};

/// Number of critical points of a generic (or the given) linear function on X_reg.
long long lo_degree(const VarietySpec& spec, const RunConfig& cfg, const Overrides& over = {});

/// b_0..b_d: conormal points over i random hyperplanes in x and n-i in u.
DegreeVector bidegrees(const VarietySpec& spec, const RunConfig& cfg);

/// s_i = LO degree of X cut by i random affine hyperplanes.
DegreeVector sectional_lo_degrees(const VarietySpec& spec, const RunConfig& cfg);

/// delta_1..delta_{d+1} of the projective closure.
DegreeVector polar_degrees(const VarietySpec& spec, const RunConfig& cfg);

/// deg X: points of X cut by d random affine hyperplanes.
long long degree(const VarietySpec& spec, const RunConfig& cfg);

/// Whether the dual of the projective closure contains the hyperplane at
/// infinity p_0 = 0.
bool dual_contains_hyperplane_at_infinity(const VarietySpec& spec, const RunConfig& cfg);

/// Inverts b_i = sum_{j>=i} (-1)^{d-j} C(j,i) a_j by back-substitution.
DegreeVector chern_mather_from_bidegrees(const DegreeVector& b);
/// Forward direction of the same transform.
DegreeVector bidegrees_from_chern_mather(const DegreeVector& a);

struct EulerObstruction {
  long long value = 0;
  DegreeVector bidegrees;
};

/// Alternating sum of the bidegrees; throws NotACone for inhomogeneous input.
EulerObstruction euler_obstruction_at_cone_point(const VarietySpec& spec, const RunConfig& cfg);
long long alternating_sum(const DegreeVector& b);

struct CorrespondenceReport {
  std::size_t i = 0;
  std::uint64_t seed = 0;
  long long count_critical = 0;  // critical points of h_u on (X cap L)_reg
  long long count_conormal = 0;  // points of the conormal variety in L x L_u^perp
  long long expected = 0;        // b_i
  bool generic = false;
};

/// Compares critical points on a slice with conormal points over the slice.
/// With an explicit slice, i is its number of forms.
CorrespondenceReport critical_correspondence(const VarietySpec& spec, std::size_t i, const RunConfig& cfg,
                                             const Overrides& over = {});

struct VerificationReport {
  std::string identity;
  bool pass = false;
  std::vector<long long> left;
  std::vector<long long> right;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes;
  std::string detail;
};

/// s_i = b_i for all i.
VerificationReport verify_theorem_bs(const VarietySpec& spec, const RunConfig& cfg);

/// (b_i = delta_{i+1} for all i) XOR (H_inf in the dual), plus b_{e-1} < delta_e
/// when the dual contains H_inf, with e the codimension of the dual.
VerificationReport verify_polar_relation(const VarietySpec& spec, const RunConfig& cfg);

/// The two checks above on precomputed values.
VerificationReport compare_sectional(const DegreeVector& b, const DegreeVector& s);
VerificationReport compare_polar(const DegreeVector& b, const DegreeVector& delta, bool contains_infinity);

}  // namespace lodeg
