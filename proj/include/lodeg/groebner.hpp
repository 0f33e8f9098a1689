#pragma once

#include <cstddef>
#include <vector>

#include "lodeg/budget.hpp"
#include "lodeg/genericity.hpp"
#include "lodeg/polynomial.hpp"

namespace lodeg {

/// Ideal over a prime field, given by generators sharing one ring.
/// Zero generators are dropped; an empty generator list is the zero ideal.
class Ideal {
public:
  Ideal(PrimeField field, std::size_t nvars, std::vector<PPoly> generators = {});

  static Ideal unit(const PrimeField& field, std::size_t nvars);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<PPoly>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  Ideal with(const PPoly& extra) const;
  Ideal with(const std::vector<PPoly>& extra) const;

private:
  PrimeField field_;
  std::size_t nvars_;
  std::vector<PPoly> gens_;
};

/// Reduced Groebner basis: monic, inter-reduced, sorted by increasing
/// leading monomial. The zero ideal has an empty basis, the unit ideal {1}.
class GroebnerBasis {
public:
  GroebnerBasis(PrimeField field, std::size_t nvars, MonomialOrder order,
                std::vector<PPoly> basis);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<PPoly>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }

  bool is_unit() const noexcept { return basis_.size() == 1 && basis_.front().is_constant(); }
  bool contains(const PPoly& p) const;
  Ideal ideal() const { return Ideal(field_, nvars_, basis_); }

  bool operator==(const GroebnerBasis& o) const;

private:
  PrimeField field_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<PPoly> basis_;
};

/// Buchberger's algorithm with Gebauer-Moeller pair elimination and the
/// normal selection strategy. Throws BudgetExceeded past the allowance.
GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order, const Budget& budget = {});

/// Fully reduced remainder of p modulo the basis.
PPoly normal_form(const PPoly& p, const GroebnerBasis& gb);

/// Dimension of the leading-term ideal; -1 for the unit ideal.
int krull_dimension(const GroebnerBasis& gb);
int krull_dimension(const Ideal& ideal, const Budget& budget = {});

/// Intersection with the subring of the variables after the first `first_k`.
/// Generators stay in the original ring (the eliminated variables are unused).
Ideal eliminate(const Ideal& ideal, std::size_t first_k, const Budget& budget = {});

/// (I : g^inf) through an auxiliary variable t with t*g - 1.
Ideal saturate(const Ideal& ideal, const PPoly& g, const Budget& budget = {});

/// (I : J^inf). A seeded random combination of J's generators is tried with
/// two seeds; on disagreement the intersection of the per-generator
/// saturations is returned.
Ideal saturate_by_ideal(const Ideal& ideal, const Ideal& by, Seed seed, const Budget& budget = {});

Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget = {});

bool is_unit_ideal(const Ideal& ideal, const Budget& budget = {});

/// Equality of ideals via reduced grevlex bases.
bool same_ideal(const Ideal& a, const Ideal& b, const Budget& budget = {});

struct QuotientBasis {
  std::vector<Monomial> monomials;  // increasing in the basis' order
  std::size_t size() const noexcept { return monomials.size(); }
};

/// Standard monomials. Throws NotZeroDimensional for positive-dimensional
/// ideals; the unit ideal yields an empty basis.
QuotientBasis quotient_basis(const GroebnerBasis& gb);

struct PointCount {
  std::size_t points = 0;              // distinct points over the algebraic closure
  std::size_t quotient_dimension = 0;  // points counted with multiplicity
};

/// Distinct solutions of a zero-dimensional ideal, read off as the degree of
/// the squarefree part of the minimal polynomial of a random multiplication
/// operator. Two separating forms derived from `seed` must agree.
PointCount count_points(const GroebnerBasis& gb, Seed seed);
PointCount count_points(const Ideal& ideal, Seed seed, const Budget& budget = {});

}  // namespace lodeg
