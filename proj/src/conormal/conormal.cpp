#include "lodeg/conormal.hpp"

#include <unordered_map>

#include "lodeg/errors.hpp"

namespace lodeg {

namespace {

class MinorExpander {
public:
  explicit MinorExpander(const PolyMatrix& m) : m_(m) {}

  PPoly det(std::uint32_t rows, std::uint32_t cols) {
    const PPoly& proto = m_.front().front();
    if (rows == 0) return PPoly::constant(proto.field(), proto.nvars(), 1);
    std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32U) | cols;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::size_t r0 = static_cast<std::size_t>(__builtin_ctz(rows));
    std::uint32_t rest = rows & (rows - 1);
    PPoly acc(proto.field(), proto.nvars());
    bool negate = false;
    for (std::uint32_t c = cols; c != 0; c &= c - 1) {
      std::size_t j = static_cast<std::size_t>(__builtin_ctz(c));
      const PPoly& entry = m_[r0][j];
      if (!entry.is_zero()) {
        PPoly sub = det(rest, cols & ~(1U << j));
        if (!sub.is_zero()) {
          PPoly term = entry * sub;
          acc = negate ? acc - term : acc + term;
        }
      }
      negate = !negate;
    }
    memo_.emplace(key, acc);
    return acc;
  }

private:
  const PolyMatrix& m_;
  std::unordered_map<std::uint64_t, PPoly> memo_;
};

void subsets(std::size_t n, std::size_t k, std::size_t start, std::uint32_t acc,
             std::vector<std::uint32_t>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i) subsets(n, k - 1, i + 1, acc | (1U << i), out);
}

std::vector<PPoly> identity_images(const PrimeField& f, std::size_t n) {
  std::vector<PPoly> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(PPoly::variable(f, n, i));
  return out;
}

PPoly random_combination(const std::vector<PPoly>& polys, Seed seed, const PrimeField& f, std::size_t nvars) {
  PPoly acc(f, nvars);
  if (polys.empty()) return acc;
  auto w = random_weights(seed, polys.size(), f);
  for (std::size_t k = 0; k < polys.size(); ++k) acc = acc + polys[k].scaled(w[k]);
  return acc;
}

std::vector<PPoly> extend_all(const std::vector<PPoly>& polys, std::size_t nvars, std::size_t offset) {
  std::vector<PPoly> out;
  for (const auto& p : polys) out.push_back(p.extend(nvars, offset));
  return out;
}

PolyMatrix extend_matrix(const PolyMatrix& m, std::size_t nvars, std::size_t offset) {
  PolyMatrix out;
  for (const auto& row : m) out.push_back(extend_all(row, nvars, offset));
  return out;
}

void check_ring_size(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw InputError("system needs " + std::to_string(nvars) + " variables; at most " +
                     std::to_string(kMaxVariables) + " are supported");
  }
}

}  // namespace

std::vector<PPoly> minors(const PolyMatrix& m, std::size_t k) {
  if (m.empty() || m.front().empty()) return {};
  const std::size_t rows = m.size(), cols = m.front().size();
  if (k == 0 || k > rows || k > cols) return {};
  if (rows > 32 || cols > 32) throw std::length_error("minors: matrix too large");
  std::vector<std::uint32_t> rsets, csets;
  subsets(rows, k, 0, 0, rsets);
  subsets(cols, k, 0, 0, csets);
  MinorExpander ex(m);
  std::vector<PPoly> out;
  for (auto r : rsets) {
    for (auto c : csets) {
      PPoly d = ex.det(r, c);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

PolyMatrix jacobian(const std::vector<PPoly>& polys, const std::vector<PPoly>& images) {
  PolyMatrix out;
  for (const auto& p : polys) {
    std::vector<PPoly> row;
    for (std::size_t l = 0; l < p.nvars(); ++l) row.push_back(p.differentiate(l).compose(images));
    out.push_back(std::move(row));
  }
  return out;
}

ConormalIdeal affine_conormal_ideal(const ModVariety& x, Seed seed, const Budget& budget, ConormalRoute route) {
  const std::size_t n = x.n();
  const std::size_t c = x.codim();
  const PrimeField& f = x.field;
  ConormalIdeal out{ConormalIdeal::Flavor::Affine, {}, Ideal(f, 2 * n)};
  for (const auto& v : x.variables) out.variables.push_back(v);
  for (std::size_t j = 0; j < n; ++j) out.variables.push_back("u" + std::to_string(j + 1));

  if (route == ConormalRoute::Multiplier) {
    if (x.generators.size() != 1) throw std::invalid_argument("multiplier route needs a single generator");
    check_ring_size(2 * n + 1);
    const std::size_t R = 2 * n + 1;  // lambda, x, u
    const PPoly& g = x.generators.front();
    std::vector<PPoly> gens{g.extend(R, 1)};
    PPoly lambda = PPoly::variable(f, R, 0);
    for (std::size_t j = 0; j < n; ++j) {
      gens.push_back(PPoly::variable(f, R, 1 + n + j) - lambda * g.differentiate(j).extend(R, 1));
    }
    Ideal elim = eliminate(Ideal(f, R, std::move(gens)), 1, budget);
    std::vector<std::size_t> map(R);
    map[0] = R;
    for (std::size_t j = 1; j < R; ++j) map[j] = j - 1;
    std::vector<PPoly> dropped;
    for (const auto& p : elim.generators()) dropped.push_back(p.rename(map, 2 * n));
    out.ideal = Ideal(f, 2 * n, std::move(dropped));
  } else {
    check_ring_size(2 * n);
    const std::size_t R = 2 * n;
    std::vector<PPoly> gens = extend_all(x.generators, R, 0);
    PolyMatrix jac = extend_matrix(jacobian(x.generators, identity_images(f, n)), R, 0);
    PolyMatrix aug;
    std::vector<PPoly> urow;
    for (std::size_t j = 0; j < n; ++j) urow.push_back(PPoly::variable(f, R, n + j));
    aug.push_back(urow);
    aug.insert(aug.end(), jac.begin(), jac.end());
    for (auto& m : minors(aug, c + 1)) gens.push_back(std::move(m));
    std::vector<PPoly> sing = minors(jac, c);
    if (sing.empty()) throw DimensionMismatch("the Jacobian has rank below the codimension everywhere");
    out.ideal = saturate_by_ideal(Ideal(f, R, std::move(gens)), Ideal(f, R, std::move(sing)),
                                  derive_seed(seed, "conormal-saturation"), budget);
  }
  int dim = krull_dimension(out.ideal, budget);
  if (dim != static_cast<int>(n)) {
    throw DimensionMismatch("conormal ideal has dimension " + std::to_string(dim) + ", expected " +
                            std::to_string(n));
  }
  return out;
}

std::vector<PPoly> projective_closure(const ModVariety& x, const Budget& budget) {
  GroebnerBasis gb = buchberger(x.ideal(), MonomialOrder::grevlex(), budget);
  std::vector<PPoly> out;
  for (const auto& g : gb.basis()) out.push_back(g.homogenize(0));
  return out;
}

ConormalIdeal projective_conormal_ideal(const ModVariety& x, Seed seed, const Budget& budget) {
  const std::size_t n = x.n();
  const std::size_t N = n + 1;
  const std::size_t c = x.codim();
  const PrimeField& f = x.field;
  check_ring_size(2 * N);
  const std::size_t R = 2 * N;
  ConormalIdeal out{ConormalIdeal::Flavor::Projective, {}, Ideal(f, R)};
  for (std::size_t j = 0; j < N; ++j) out.variables.push_back("p" + std::to_string(j));
  for (std::size_t j = 0; j < N; ++j) out.variables.push_back("y" + std::to_string(j));

  std::vector<PPoly> closure = projective_closure(x, budget);
  std::vector<PPoly> gens = extend_all(closure, R, 0);
  PolyMatrix jac = extend_matrix(jacobian(closure, identity_images(f, N)), R, 0);
  PolyMatrix aug;
  std::vector<PPoly> yrow;
  for (std::size_t j = 0; j < N; ++j) yrow.push_back(PPoly::variable(f, R, N + j));
  aug.push_back(yrow);
  aug.insert(aug.end(), jac.begin(), jac.end());
  for (auto& m : minors(aug, c + 1)) gens.push_back(std::move(m));
  std::vector<PPoly> sing = minors(jac, c);
  if (sing.empty()) throw DimensionMismatch("the Jacobian has rank below the codimension everywhere");
  Ideal I = saturate_by_ideal(Ideal(f, R, std::move(gens)), Ideal(f, R, std::move(sing)),
                              derive_seed(seed, "conormal-saturation"), budget);
  std::vector<PPoly> irrelevant;
  for (std::size_t j = 0; j < N; ++j) irrelevant.push_back(PPoly::variable(f, R, j));
  out.ideal = saturate_by_ideal(I, Ideal(f, R, std::move(irrelevant)), derive_seed(seed, "irrelevant"), budget);
  int dim = krull_dimension(out.ideal, budget);
  if (dim != static_cast<int>(N)) {
    throw DimensionMismatch("projective conormal cone has dimension " + std::to_string(dim) +
                            ", expected " + std::to_string(N));
  }
  return out;
}

Ideal critical_ideal(const CriticalSystem& sys, Seed seed, ConormalRoute route) {
  const std::size_t k = sys.points.dim();
  const std::size_t N = sys.points.ambient();
  const std::size_t c = sys.codim;
  if (sys.equations.empty()) throw std::invalid_argument("critical system without equations");
  const PrimeField& f = sys.equations.front().field();
  if (sys.covector.fixed && sys.covector.fixed->size() != N) {
    throw std::invalid_argument("covector has the wrong length");
  }

  std::vector<PPoly> restricted;
  for (const auto& g : sys.equations) {
    PPoly r = g.compose(sys.points.images);
    if (!r.is_zero()) restricted.push_back(std::move(r));
  }

  if (route == ConormalRoute::Multiplier) {
    std::vector<PPoly> G;
    if (sys.equations.size() == c) {
      G = sys.equations;
    } else {
      for (std::size_t j = 0; j < c; ++j) {
        G.push_back(random_combination(sys.equations, derive_seed(seed, "combination", j), f, N));
      }
    }
    const bool with_t = c >= 2;
    const std::size_t R = k + c + (with_t ? 1 : 0);
    check_ring_size(R);
    PolyMatrix jac = jacobian(G, sys.points.images);
    std::vector<PPoly> gens = extend_all(restricted, R, 0);
    std::vector<PPoly> v(N, PPoly(f, R));
    for (std::size_t j = 0; j < c; ++j) {
      PPoly lambda = PPoly::variable(f, R, k + j);
      for (std::size_t l = 0; l < N; ++l) v[l] = v[l] + lambda * jac[j][l].extend(R, 0);
    }
    if (sys.covector.fixed) {
      for (std::size_t l = 0; l < N; ++l) v[l] = v[l] - PPoly::constant(f, R, (*sys.covector.fixed)[l]);
      gens.insert(gens.end(), v.begin(), v.end());
    } else {
      for (const auto& form : sys.covector.forms) {
        PPoly e = PPoly::constant(f, R, form.constant_term());
        for (std::size_t l = 0; l < N; ++l) {
          std::uint64_t a = form.coefficient(Monomial::variable(l));
          if (a != 0) e = e + v[l].scaled(a);
        }
        gens.push_back(std::move(e));
      }
    }
    if (with_t) {
      PPoly h = random_combination(minors(jac, c), derive_seed(seed, "minor-weights"), f, k);
      gens.push_back(PPoly::variable(f, R, R - 1) * h.extend(R, 0) - PPoly::constant(f, R, 1));
    }
    return Ideal(f, R, std::move(gens));
  }

  // minors route: x = x(s), u = u(r), rank [u; Jac] <= c away from rank Jac < c
  std::vector<PPoly> uimages;
  std::size_t kr = 0;
  AffineParametrization umap;
  if (!sys.covector.fixed) {
    umap = solve_affine_forms(sys.covector.forms, N, f);
    kr = umap.dim();
  }
  const std::size_t R = k + kr + 1;
  check_ring_size(R);
  if (sys.covector.fixed) {
    for (std::size_t l = 0; l < N; ++l) uimages.push_back(PPoly::constant(f, R, (*sys.covector.fixed)[l]));
  } else {
    uimages = extend_all(umap.images, R, k);
  }
  PolyMatrix jac_s = jacobian(sys.equations, sys.points.images);
  PolyMatrix jac = extend_matrix(jac_s, R, 0);
  std::vector<PPoly> gens = extend_all(restricted, R, 0);
  PolyMatrix aug{uimages};
  aug.insert(aug.end(), jac.begin(), jac.end());
  for (auto& m : minors(aug, c + 1)) gens.push_back(std::move(m));
  PPoly h = random_combination(minors(jac_s, c), derive_seed(seed, "minor-weights"), f, k);
  gens.push_back(PPoly::variable(f, R, R - 1) * h.extend(R, 0) - PPoly::constant(f, R, 1));
  return Ideal(f, R, std::move(gens));
}

long long count_critical(const CriticalSystem& system, Seed seed, const Budget& budget, ConormalRoute route) {
  Ideal I = critical_ideal(system, seed, route);
  return static_cast<long long>(count_points(I, derive_seed(seed, "count"), budget).points);
}

}  // namespace lodeg
