#include "lodeg/invariants.hpp"

#include <map>
#include <sstream>

#include "lodeg/errors.hpp"

namespace lodeg {

namespace {

// Reductions of one spec modulo each prime, computed on first use.
class Reductions {
public:
  Reductions(const VarietySpec& spec, const RunConfig& cfg) : spec_(spec), cfg_(cfg) {}

  const ModVariety& at(std::uint64_t prime) {
    auto it = cache_.find(prime);
    if (it == cache_.end()) {
      validate_working_prime(prime);
      it = cache_.emplace(prime, reduce_variety(spec_, PrimeField(prime), cfg_.budget)).first;
    }
    return it->second;
  }

  int dimension() { return at(cfg_.policy.primes.front()).dimension; }
  std::size_t n() const { return spec_.n(); }

  const std::vector<PPoly>& closure(std::uint64_t prime) {
    auto it = closures_.find(prime);
    if (it == closures_.end()) it = closures_.emplace(prime, projective_closure(at(prime), cfg_.budget)).first;
    return it->second;
  }

private:
  const VarietySpec& spec_;
  const RunConfig& cfg_;
  std::map<std::uint64_t, ModVariety> cache_;
  std::map<std::uint64_t, std::vector<PPoly>> closures_;
};

template <class Fn>
long long agree(Reductions& red, const RunConfig& cfg, std::string_view label, std::uint64_t index, Fn fn) {
  SeededCount comp = [&](Seed s, std::uint64_t prime) -> long long { return fn(red.at(prime), s, prime); };
  return agreed_count(comp, cfg.policy, derive_seed(cfg.seed, label, index)).value;
}

AffineParametrization whole_space(std::size_t n, const PrimeField& f) { return solve_affine_forms({}, n, f); }

std::vector<std::uint64_t> reduce_covector(const std::vector<mpq_class>& u, const PrimeField& f) {
  std::vector<std::uint64_t> out;
  for (const auto& c : u) out.push_back(f.from_rational(c));
  return out;
}

std::vector<PPoly> reduce_forms(const std::vector<QPoly>& forms, const PrimeField& f) {
  std::vector<PPoly> out;
  for (const auto& q : forms) out.push_back(reduce_mod(q, f));
  return out;
}

void check_overrides(const VarietySpec& spec, const Overrides& over) {
  if (over.covector && over.covector->size() != spec.n()) {
    throw InputError("covector has " + std::to_string(over.covector->size()) + " entries, expected " +
                     std::to_string(spec.n()));
  }
  if (over.slice) {
    for (const auto& form : *over.slice) {
      if (form.nvars() != spec.n() || form.total_degree() != 1) {
        throw InputError("slice forms must be affine-linear polynomials in the input variables");
      }
    }
  }
}

long long bidegree_at(const ModVariety& x, std::size_t i, Seed s, const Budget& budget) {
  const std::size_t n = x.n();
  AffineParametrization pts = solve_affine_forms(random_affine_forms(s, "x-slice", i, n, x.field), n, x.field);
  CriticalSystem sys{x.generators, x.codim(), std::move(pts),
                     CovectorConstraint::on(random_affine_forms(s, "u-slice", n - i, n, x.field))};
  return count_critical(sys, s, budget);
}

long long lo_degree_mod(const ModVariety& x, Seed s, const std::optional<std::vector<std::uint64_t>>& u,
                        const Budget& budget) {
  std::vector<std::uint64_t> cov = u ? *u : random_covector(derive_seed(s, "covector"), x.n(), x.field);
  CriticalSystem sys{x.generators, x.codim(), whole_space(x.n(), x.field), CovectorConstraint::at(cov)};
  return count_critical(sys, s, budget);
}

// H_inf lies on the dual iff some (p, e_0) is a limit of tangent pairs.
bool contains_infinity_mod(const ModVariety& x, const std::vector<PPoly>& closure, Seed s, const Budget& budget) {
  const std::size_t N = x.n() + 1;
  const PrimeField& f = x.field;
  const std::size_t c = x.codim();
  bool cone = true;
  for (const auto& g : closure) cone = cone && !g.uses_variable(0);
  // every tangent hyperplane of a cone with vertex e_0 passes through e_0
  if (cone) return false;

  std::vector<std::uint64_t> e0(N, 0);
  e0[0] = 1;
  PPoly chart = random_affine_form(derive_seed(s, "chart"), N, f);
  CriticalSystem sys{closure, c, solve_affine_forms({chart}, N, f), CovectorConstraint::at(e0)};
  if (!is_unit_ideal(critical_ideal(sys, s), budget)) return true;

  // no smooth tangency point; conclusive only if the closure is smooth
  std::vector<PPoly> images;
  for (std::size_t j = 0; j < N; ++j) images.push_back(PPoly::variable(f, N, j));
  Ideal sing(f, N, closure);
  sing = sing.with(minors(jacobian(closure, images), c)).with(chart);
  if (is_unit_ideal(sing, budget)) return false;

  ConormalIdeal conormal = projective_conormal_ideal(x, s, budget);
  const std::size_t R = 2 * N;
  std::vector<PPoly> at_e0;
  at_e0.push_back(PPoly::variable(f, R, N) - PPoly::constant(f, R, 1));
  for (std::size_t j = 1; j < N; ++j) at_e0.push_back(PPoly::variable(f, R, N + j));
  return krull_dimension(conormal.ideal.with(at_e0), budget) >= 1;
}

std::string join(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

long long lo_degree(const VarietySpec& spec, const RunConfig& cfg, const Overrides& over) {
  check_overrides(spec, over);
  Reductions red(spec, cfg);
  return agree(red, cfg, "lo-degree", 0, [&](const ModVariety& x, Seed s, std::uint64_t) {
    std::optional<std::vector<std::uint64_t>> u;
    if (over.covector) u = reduce_covector(*over.covector, x.field);
    return lo_degree_mod(x, s, u, cfg.budget);
  });
}

DegreeVector bidegrees(const VarietySpec& spec, const RunConfig& cfg) {
  Reductions red(spec, cfg);
  const int d = red.dimension();
  DegreeVector out{DegreeVector::Kind::Bidegree, {}, d, spec.n()};
  for (int i = 0; i <= d; ++i) {
    out.values.push_back(agree(red, cfg, "bidegree", static_cast<std::uint64_t>(i),
                               [&](const ModVariety& x, Seed s, std::uint64_t) {
                                 return bidegree_at(x, static_cast<std::size_t>(i), s, cfg.budget);
                               }));
  }
  return out;
}

DegreeVector sectional_lo_degrees(const VarietySpec& spec, const RunConfig& cfg) {
  Reductions red(spec, cfg);
  const int d = red.dimension();
  DegreeVector out{DegreeVector::Kind::Sectional, {}, d, spec.n()};
  for (int i = 0; i <= d; ++i) {
    out.values.push_back(agree(red, cfg, "sectional", static_cast<std::uint64_t>(i),
                               [&](const ModVariety& x, Seed s, std::uint64_t) {
                                 ModVariety y = slice_variety(x, static_cast<std::size_t>(i), s, cfg.budget);
                                 return lo_degree_mod(y, s, std::nullopt, cfg.budget);
                               }));
  }
  return out;
}

DegreeVector polar_degrees(const VarietySpec& spec, const RunConfig& cfg) {
  Reductions red(spec, cfg);
  const int d = red.dimension();
  const std::size_t n = spec.n();
  const std::size_t N = n + 1;
  DegreeVector out{DegreeVector::Kind::Polar, {}, d, n};
  for (int i = 0; i <= d; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    out.values.push_back(agree(red, cfg, "polar", ii, [&](const ModVariety& x, Seed s, std::uint64_t prime) {
      const PrimeField& f = x.field;
      AffineParametrization pts = solve_affine_forms(random_affine_forms(s, "p-slice", ii + 1, N, f), N, f);
      CriticalSystem sys{red.closure(prime), x.codim(), std::move(pts),
                         CovectorConstraint::on(random_affine_forms(s, "y-slice", n - ii, N, f))};
      return count_critical(sys, s, cfg.budget);
    }));
  }
  return out;
}

long long degree(const VarietySpec& spec, const RunConfig& cfg) {
  Reductions red(spec, cfg);
  return agree(red, cfg, "degree", 0, [&](const ModVariety& x, Seed s, std::uint64_t) {
    ModVariety y = slice_variety(x, static_cast<std::size_t>(x.dimension), s, cfg.budget);
    return static_cast<long long>(count_points(y.ideal(), derive_seed(s, "count"), cfg.budget).points);
  });
}

bool dual_contains_hyperplane_at_infinity(const VarietySpec& spec, const RunConfig& cfg) {
  Reductions red(spec, cfg);
  return agree(red, cfg, "dual-infinity", 0, [&](const ModVariety& x, Seed s, std::uint64_t prime) {
           return contains_infinity_mod(x, red.closure(prime), s, cfg.budget) ? 1LL : 0LL;
         }) != 0;
}

EulerObstruction euler_obstruction_at_cone_point(const VarietySpec& spec, const RunConfig& cfg) {
  if (!spec.homogeneous()) throw NotACone("every generator must be homogeneous");
  EulerObstruction out;
  out.bidegrees = bidegrees(spec, cfg);
  out.value = alternating_sum(out.bidegrees);
  if (out.value != chern_mather_from_bidegrees(out.bidegrees).values.front()) {
    throw std::logic_error("alternating sum disagrees with the transform");
  }
  return out;
}

CorrespondenceReport critical_correspondence(const VarietySpec& spec, std::size_t i, const RunConfig& cfg,
                                             const Overrides& over) {
  check_overrides(spec, over);
  Reductions red(spec, cfg);
  const int d = red.dimension();
  if (over.slice) i = over.slice->size();
  if (i > static_cast<std::size_t>(d)) {
    throw InputError("slice codimension " + std::to_string(i) + " exceeds dim X = " + std::to_string(d));
  }
  CorrespondenceReport out;
  out.i = i;
  out.seed = cfg.seed.value;

  auto slice_forms = [&](const ModVariety& x, Seed s) {
    return over.slice ? reduce_forms(*over.slice, x.field) : random_affine_forms(s, "x-slice", i, x.n(), x.field);
  };
  auto covector = [&](const ModVariety& x, Seed s) {
    return over.covector ? reduce_covector(*over.covector, x.field)
                         : random_covector(derive_seed(s, "covector"), x.n(), x.field);
  };

  out.count_critical = agree(red, cfg, "correspondence-critical", i, [&](const ModVariety& x, Seed s, std::uint64_t) {
    SlicedVariety sl = slice(x, slice_forms(x, s), cfg.budget);
    return lo_degree_mod(sl.variety, s, sl.map.pullback(covector(x, s)), cfg.budget);
  });

  out.count_conormal = agree(red, cfg, "correspondence-conormal", i, [&](const ModVariety& x, Seed s, std::uint64_t) {
    const PrimeField& f = x.field;
    const std::size_t n = x.n();
    SlicedVariety sl = slice(x, slice_forms(x, s), cfg.budget);
    std::vector<std::uint64_t> u0 = covector(x, s);
    std::vector<std::uint64_t> shift = sl.map.pullback(u0);
    // u - u0 orthogonal to the directions of L
    std::vector<PPoly> forms;
    for (std::size_t k = 0; k < sl.map.dim(); ++k) {
      std::vector<Term<PrimeField>> terms{{f.neg(shift[k]), Monomial()}};
      for (std::size_t j = 0; j < n; ++j) terms.push_back({sl.map.direction(j, k), Monomial::variable(j)});
      forms.push_back(PPoly::from_terms(f, n, MonomialOrder::grevlex(), std::move(terms)));
    }
    CriticalSystem sys{x.generators, x.codim(), std::move(sl.map), CovectorConstraint::on(std::move(forms))};
    return count_critical(sys, s, cfg.budget, ConormalRoute::Minors);
  });

  out.expected = agree(red, cfg, "bidegree", i, [&](const ModVariety& x, Seed s, std::uint64_t) {
    return bidegree_at(x, i, s, cfg.budget);
  });
  out.generic = out.count_critical == out.expected && out.count_conormal == out.expected;
  return out;
}

VerificationReport compare_sectional(const DegreeVector& b, const DegreeVector& s) {
  VerificationReport r;
  r.identity = "sectional_equals_bidegrees";
  r.left = s.values;
  r.right = b.values;
  r.pass = s.values == b.values;
  r.detail = "s = " + join(s.values) + ", b = " + join(b.values);
  return r;
}

VerificationReport compare_polar(const DegreeVector& b, const DegreeVector& delta, bool contains_infinity) {
  VerificationReport r;
  r.identity = "bidegrees_vs_polar_degrees";
  r.left = b.values;
  r.right = delta.values;
  const bool equal = b.values == delta.values;
  r.pass = equal != contains_infinity;
  r.detail = "b = " + join(b.values) + ", delta = " + join(delta.values) +
             ", dual contains H_inf: " + (contains_infinity ? "yes" : "no");
  if (contains_infinity) {
    std::size_t first = 0;
    while (first < delta.values.size() && delta.values[first] == 0) ++first;
    if (first == delta.values.size() || first >= b.values.size()) {
      r.pass = false;
      r.detail += "; no nonzero polar degree";
    } else {
      const bool strict = b.values[first] < delta.values[first];
      r.pass = r.pass && strict;
      r.detail += "; strictness at e = " + std::to_string(first + 1) + ": b_" + std::to_string(first) + " = " +
                  std::to_string(b.values[first]) + (strict ? " < " : " >= ") + "delta_" +
                  std::to_string(first + 1) + " = " + std::to_string(delta.values[first]);
    }
  }
  return r;
}

VerificationReport verify_theorem_bs(const VarietySpec& spec, const RunConfig& cfg) {
  VerificationReport r = compare_sectional(bidegrees(spec, cfg), sectional_lo_degrees(spec, cfg));
  r.seed = cfg.seed.value;
  r.primes = cfg.policy.primes;
  return r;
}

VerificationReport verify_polar_relation(const VarietySpec& spec, const RunConfig& cfg) {
  VerificationReport r = compare_polar(bidegrees(spec, cfg), polar_degrees(spec, cfg),
                                       dual_contains_hyperplane_at_infinity(spec, cfg));
  r.seed = cfg.seed.value;
  r.primes = cfg.policy.primes;
  return r;
}

}  // namespace lodeg
