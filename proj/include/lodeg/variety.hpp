#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lodeg/budget.hpp"
#include "lodeg/genericity.hpp"
#include "lodeg/groebner.hpp"
#include "lodeg/polynomial.hpp"

namespace lodeg {

/// Affine variety X in C^n given by rational generators of I(X).
struct VarietySpec {
  std::vector<std::string> variables;
  std::vector<QPoly> generators;
  bool assumed_irreducible = true;

  std::size_t n() const noexcept { return variables.size(); }
  bool homogeneous() const;
};

/// A variety reduced modulo a working prime, with its dimension.
struct ModVariety {
  PrimeField field;
  std::vector<std::string> variables;
  std::vector<PPoly> generators;
  int dimension = 0;

  std::size_t n() const noexcept { return variables.size(); }
  std::size_t codim() const noexcept { return n() - static_cast<std::size_t>(dimension); }
  Ideal ideal() const { return Ideal(field, n(), generators); }
};

/// Reduces the generators mod p and checks 0 <= dim X <= n-1. Throws
/// InputError for the unit ideal, the zero ideal, or X = C^n.
ModVariety reduce_variety(const VarietySpec& spec, const PrimeField& field, const Budget& budget = {});

/// n - dim X, computed modulo the first default prime.
int codimension(const VarietySpec& spec, const Budget& budget = {});

/// Parametrization x = images(s) of an affine subspace cut out by affine
/// forms, obtained by solving each form for a pivot variable (the largest
/// index with a nonzero coefficient) and substituting.
struct AffineParametrization {
  std::vector<PPoly> images;      // one per ambient variable, in free.size() variables
  std::vector<std::size_t> free;  // ambient indices of the surviving variables

  std::size_t ambient() const noexcept { return images.size(); }
  std::size_t dim() const noexcept { return free.size(); }
  /// Linear part: coefficient of s_k in images[j].
  std::uint64_t direction(std::size_t j, std::size_t k) const;
  /// Pullback of a covector on the ambient space to the subspace coordinates.
  std::vector<std::uint64_t> pullback(const std::vector<std::uint64_t>& covector) const;
};

/// Throws DegenerateSlice when the forms are dependent or inconsistent.
AffineParametrization solve_affine_forms(const std::vector<PPoly>& forms, std::size_t nvars,
                                         const PrimeField& field);

std::vector<PPoly> random_affine_forms(Seed seed, std::string_view label, std::size_t count,
                                       std::size_t nvars, const PrimeField& field);

struct SlicedVariety {
  ModVariety variety;  // lives in the free variables of `map`
  AffineParametrization map;
};

/// X intersected with the given affine forms. Throws DegenerateSlice unless
/// the dimension drops by exactly the number of forms.
SlicedVariety slice(const ModVariety& x, const std::vector<PPoly>& forms, const Budget& budget = {});

/// X intersected with i seeded random affine hyperplanes; a degenerate draw is
/// retried with fresh forms a bounded number of times.
SlicedVariety slice(const ModVariety& x, std::size_t i, Seed seed, const Budget& budget = {});

inline ModVariety slice_variety(const ModVariety& x, std::size_t i, Seed seed, const Budget& budget = {}) {
  return slice(x, i, seed, budget).variety;
}

}  // namespace lodeg
