#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lodeg/budget.hpp"
#include "lodeg/genericity.hpp"
#include "lodeg/groebner.hpp"
#include "lodeg/variety.hpp"

namespace lodeg {

using PolyMatrix = std::vector<std::vector<PPoly>>;

/// All k x k minors of a matrix (rows x cols), by Laplace expansion with
/// memoized sub-determinants. Zero minors are dropped.
std::vector<PPoly> minors(const PolyMatrix& m, std::size_t k);

/// Jacobian of the polynomials composed with `images` (chain rule applied by
/// differentiating first and substituting afterwards).
PolyMatrix jacobian(const std::vector<PPoly>& polys, const std::vector<PPoly>& images);

enum class ConormalRoute { Minors, Multiplier };

struct ConormalIdeal {
  enum class Flavor { Affine, Projective } flavor;
  std::vector<std::string> variables;  // (x, u) or (p_0..p_n, y_0..y_n)
  Ideal ideal;
};

/// Closure of the conormal bundle over X_reg in C^n x C^n. The minors route
/// saturates by the c x c Jacobian minors; the multiplier route (hypersurfaces
/// only) eliminates lambda from (f, u - lambda grad f). Throws
/// DimensionMismatch unless the result has dimension n.
ConormalIdeal affine_conormal_ideal(const ModVariety& x, Seed seed, const Budget& budget = {},
                                    ConormalRoute route = ConormalRoute::Minors);

/// Generators of I(closure of X) in p_0..p_n: a homogenized grevlex basis.
std::vector<PPoly> projective_closure(const ModVariety& x, const Budget& budget = {});

/// Conormal variety of the projective closure in P^n x P^n (bi-affine cone).
/// Throws DimensionMismatch unless the cone has dimension n + 1.
ConormalIdeal projective_conormal_ideal(const ModVariety& x, Seed seed, const Budget& budget = {});

/// Constraint on the covector: either a fixed vector or affine forms in the
/// covector coordinates.
struct CovectorConstraint {
  std::optional<std::vector<std::uint64_t>> fixed;
  std::vector<PPoly> forms;

  static CovectorConstraint at(std::vector<std::uint64_t> u) { return {std::move(u), {}}; }
  static CovectorConstraint on(std::vector<PPoly> f) { return {std::nullopt, std::move(f)}; }
};

/// Pairs (x, u) of the conormal variety with x on an affine subspace and u
/// subject to a covector constraint. `equations` generate I(X) in N variables
/// and X has codimension `codim`.
struct CriticalSystem {
  std::vector<PPoly> equations;
  std::size_t codim = 0;
  AffineParametrization points;
  CovectorConstraint covector;
};

/// Zero-dimensional ideal whose solutions correspond to the pairs. The
/// multiplier route writes u as a combination of gradients of codim random
/// combinations of the equations; the minors route imposes the rank condition
/// on [u; Jac]. Both exclude the rank-deficient locus with t*h - 1.
Ideal critical_ideal(const CriticalSystem& system, Seed seed,
                     ConormalRoute route = ConormalRoute::Multiplier);

long long count_critical(const CriticalSystem& system, Seed seed, const Budget& budget = {},
                         ConormalRoute route = ConormalRoute::Multiplier);

}  // namespace lodeg
