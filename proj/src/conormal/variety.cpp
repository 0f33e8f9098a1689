#include "lodeg/variety.hpp"

#include <algorithm>

#include "lodeg/errors.hpp"

namespace lodeg {

namespace {

constexpr int kSliceAttempts = 4;

}  // namespace

bool VarietySpec::homogeneous() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const QPoly& g) { return g.is_homogeneous(); });
}

ModVariety reduce_variety(const VarietySpec& spec, const PrimeField& field, const Budget& budget) {
  const std::size_t n = spec.n();
  if (n == 0) throw InputError("variety has no variables");
  ModVariety out{field, spec.variables, {}, 0};
  for (const auto& g : spec.generators) {
    if (g.nvars() != n) throw InputError("generator lives in the wrong ring");
    PPoly r = reduce_mod(g, field);
    if (!r.is_zero()) out.generators.push_back(r);
  }
  if (out.generators.empty()) throw InputError("the generators define all of the ambient space");
  int d = krull_dimension(out.ideal(), budget);
  if (d < 0) throw InputError("the generators generate the unit ideal (X is empty)");
  if (d >= static_cast<int>(n)) throw InputError("X is the whole ambient space");
  out.dimension = d;
  return out;
}

int codimension(const VarietySpec& spec, const Budget& budget) {
  ModVariety x = reduce_variety(spec, PrimeField(kDefaultPrimes[0]), budget);
  return static_cast<int>(x.codim());
}

std::uint64_t AffineParametrization::direction(std::size_t j, std::size_t k) const {
  return images.at(j).coefficient(Monomial::variable(k));
}

std::vector<std::uint64_t> AffineParametrization::pullback(const std::vector<std::uint64_t>& covector) const {
  if (covector.size() != ambient()) throw std::invalid_argument("pullback: covector has wrong length");
  const PrimeField& f = images.front().field();
  std::vector<std::uint64_t> out(dim(), 0);
  for (std::size_t k = 0; k < dim(); ++k) {
    for (std::size_t j = 0; j < ambient(); ++j) out[k] = f.add(out[k], f.mul(covector[j], direction(j, k)));
  }
  return out;
}

AffineParametrization solve_affine_forms(const std::vector<PPoly>& forms, std::size_t nvars,
                                         const PrimeField& field) {
  std::vector<PPoly> images;
  for (std::size_t j = 0; j < nvars; ++j) images.push_back(PPoly::variable(field, nvars, j));
  std::vector<bool> eliminated(nvars, false);
  for (const auto& form : forms) {
    if (form.total_degree() > 1) throw std::invalid_argument("slice forms must be affine-linear");
    PPoly l = form.compose(images);
    std::size_t pivot = nvars;
    for (std::size_t j = nvars; j-- > 0;) {
      if (!eliminated[j] && l.coefficient(Monomial::variable(j)) != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot == nvars) throw DegenerateSlice("slice forms are dependent or inconsistent");
    std::uint64_t c = l.coefficient(Monomial::variable(pivot));
    PPoly xp = PPoly::variable(field, nvars, pivot);
    // x_pivot = x_pivot - l / c
    PPoly expr = xp - l.scaled(field.inv(c));
    std::vector<PPoly> subst;
    for (std::size_t j = 0; j < nvars; ++j) {
      subst.push_back(j == pivot ? expr : PPoly::variable(field, nvars, j));
    }
    for (auto& im : images) im = im.compose(subst);
    eliminated[pivot] = true;
  }
  AffineParametrization out;
  std::vector<std::size_t> map(nvars, nvars);
  for (std::size_t j = 0; j < nvars; ++j) {
    if (!eliminated[j]) {
      map[j] = out.free.size();
      out.free.push_back(j);
    }
  }
  for (auto& im : images) out.images.push_back(im.rename(map, out.free.size()));
  return out;
}

std::vector<PPoly> random_affine_forms(Seed seed, std::string_view label, std::size_t count,
                                       std::size_t nvars, const PrimeField& field) {
  std::vector<PPoly> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_affine_form(derive_seed(seed, label, k), nvars, field));
  return out;
}

SlicedVariety slice(const ModVariety& x, const std::vector<PPoly>& forms, const Budget& budget) {
  AffineParametrization map = solve_affine_forms(forms, x.n(), x.field);
  ModVariety y{x.field, {}, {}, 0};
  for (std::size_t j : map.free) y.variables.push_back(x.variables[j]);
  for (const auto& g : x.generators) {
    PPoly h = g.compose(map.images);
    if (!h.is_zero()) y.generators.push_back(h);
  }
  const int expected = x.dimension - static_cast<int>(forms.size());
  if (expected < 0) throw DegenerateSlice("more slice forms than the dimension of X");
  int d = y.generators.empty() ? static_cast<int>(map.dim()) : krull_dimension(y.ideal(), budget);
  if (d != expected) {
    throw DegenerateSlice("slice has dimension " + std::to_string(d) + ", expected " + std::to_string(expected));
  }
  y.dimension = d;
  return {std::move(y), std::move(map)};
}

SlicedVariety slice(const ModVariety& x, std::size_t i, Seed seed, const Budget& budget) {
  if (i == 0) {
    return slice(x, std::vector<PPoly>{}, budget);
  }
  for (int attempt = 0;; ++attempt) {
    Seed s = derive_seed(seed, "slice-attempt", static_cast<std::uint64_t>(attempt));
    try {
      return slice(x, random_affine_forms(s, "x-slice", i, x.n(), x.field), budget);
    } catch (const DegenerateSlice&) {
      if (attempt + 1 >= kSliceAttempts) throw;
    }
  }
}

}  // namespace lodeg
