#include "lodeg/groebner.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "lodeg/errors.hpp"
#include "lodeg/univariate.hpp"

namespace lodeg {

namespace {

using PTerm = Term<PrimeField>;
using TermVec = std::vector<PTerm>;

struct Ring {
  const PrimeField& f;
  std::size_t n;
  MonomialOrder order;

  int cmp(const Monomial& a, const Monomial& b) const { return order.compare(a, b, n); }
};

// (f[skip+1..]) - c*m*(g[1..]); the leading terms f[skip] and c*m*g[0] are
// assumed to cancel.
TermVec sub_mul_tail(const TermVec& f, std::size_t skip, std::uint64_t c, const Monomial& m,
                     const TermVec& g, const Ring& R) {
  TermVec out;
  out.reserve(f.size() - skip + g.size());
  std::size_t i = skip + 1, j = 1;
  const std::uint64_t nc = R.f.neg(c);
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    int s = R.cmp(f[i].mono, gm);
    if (s > 0) {
      out.push_back(f[i++]);
    } else if (s < 0) {
      out.push_back({R.f.mul(nc, g[j].coeff), gm});
      ++j;
    } else {
      std::uint64_t v = R.f.add(f[i].coeff, R.f.mul(nc, g[j].coeff));
      if (v != 0) out.push_back({v, f[i].mono});
      ++i;
      ++j;
    }
  }
  while (i < f.size()) out.push_back(f[i++]);
  while (j < g.size()) {
    out.push_back({R.f.mul(nc, g[j].coeff), g[j].mono * m});
    ++j;
  }
  return out;
}

// Pool of monic reducers.
class Reducers {
public:
  void add(const TermVec* p) { polys_.push_back(p); }
  void clear() { polys_.clear(); }

  const TermVec* find(const Monomial& m) const {
    for (const TermVec* p : polys_) {
      if (p->front().mono.divides(m)) return p;
    }
    return nullptr;
  }

private:
  std::vector<const TermVec*> polys_;
};

TermVec reduce_full(TermVec f, const Reducers& reds, const Ring& R, const Deadline* deadline) {
  TermVec out;
  std::size_t pos = 0;
  std::size_t steps = 0;
  while (pos < f.size()) {
    const TermVec* red = reds.find(f[pos].mono);
    if (red == nullptr) {
      out.push_back(f[pos++]);
      continue;
    }
    if (deadline != nullptr && (++steps & 63U) == 0) deadline->check("reduction");
    Monomial q = red->front().mono.quotient_of(f[pos].mono);
    f = sub_mul_tail(f, pos, f[pos].coeff, q, *red, R);
    pos = 0;
  }
  return out;
}

void make_monic(TermVec& p, const Ring& R) {
  if (p.empty() || p.front().coeff == 1) return;
  std::uint64_t inv = R.f.inv(p.front().coeff);
  for (auto& t : p) t.coeff = R.f.mul(t.coeff, inv);
}

TermVec spoly(const TermVec& a, const TermVec& b, const Monomial& lcm, const Ring& R) {
  Monomial ma = a.front().mono.quotient_of(lcm);
  Monomial mb = b.front().mono.quotient_of(lcm);
  TermVec left;
  left.reserve(a.size());
  left.push_back({1, lcm});
  for (std::size_t k = 1; k < a.size(); ++k) left.push_back({a[k].coeff, a[k].mono * ma});
  return sub_mul_tail(left, 0, 1, mb, b, R);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
public:
  Buchberger(const Ring& R, const Deadline& deadline) : R_(R), deadline_(deadline) {}

  // Returns false when the ideal turned out to be the unit ideal.
  bool run(std::vector<TermVec> input) {
    std::sort(input.begin(), input.end(), [this](const TermVec& a, const TermVec& b) {
      return R_.cmp(a.front().mono, b.front().mono) < 0;
    });
    for (auto& f : input) {
      TermVec h = reduce_full(std::move(f), active_reducers(), R_, &deadline_);
      if (h.empty()) continue;
      if (!add(std::move(h))) return false;
    }
    while (!pairs_.empty()) {
      deadline_.check("buchberger");
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        int c = R_.cmp(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && (pairs_[k].i < pairs_[best].i ||
                                 (pairs_[k].i == pairs_[best].i && pairs_[k].j < pairs_[best].j)))) {
          best = k;
        }
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      TermVec s = spoly(polys_[p.i], polys_[p.j], p.lcm, R_);
      TermVec h = reduce_full(std::move(s), active_reducers(), R_, &deadline_);
      if (h.empty()) continue;
      if (!add(std::move(h))) return false;
    }
    return true;
  }

  // Reduced basis, sorted by increasing leading monomial.
  std::vector<TermVec> reduced() {
    std::vector<TermVec> basis;
    for (std::size_t idx : active_) basis.push_back(polys_[idx]);
    std::sort(basis.begin(), basis.end(), [this](const TermVec& a, const TermVec& b) {
      return R_.cmp(a.front().mono, b.front().mono) < 0;
    });
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Reducers others;
      for (std::size_t l = 0; l < basis.size(); ++l) {
        if (l != k) others.add(&basis[l]);
      }
      TermVec tail(basis[k].begin() + 1, basis[k].end());
      TermVec red = reduce_full(std::move(tail), others, R_, &deadline_);
      TermVec full;
      full.reserve(red.size() + 1);
      full.push_back(basis[k].front());
      full.insert(full.end(), red.begin(), red.end());
      basis[k] = std::move(full);
    }
    return basis;
  }

private:
  const Reducers& active_reducers() {
    reducers_.clear();
    for (std::size_t idx : active_) reducers_.add(&polys_[idx]);
    return reducers_;
  }

  // Gebauer-Moeller update with the new polynomial h.
  bool add(TermVec h) {
    make_monic(h, R_);
    if (h.front().mono.is_one()) return false;
    polys_.push_back(std::move(h));
    const std::size_t hi = polys_.size() - 1;
    const Monomial& lh = polys_[hi].front().mono;

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(active_.size());
    for (std::size_t g : active_) {
      const Monomial& lg = polys_[g].front().mono;
      cands.push_back({g, lh.lcm(lg), lh.coprime(lg)});
    }
    std::vector<Cand> kept;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      bool keep = cands[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < cands.size() && keep; ++l) {
          if (cands[l].lcm.divides(cands[k].lcm)) keep = false;
        }
        for (std::size_t l = 0; l < kept.size() && keep; ++l) {
          if (kept[l].lcm.divides(cands[k].lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(cands[k]);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const Pair& p : pairs_) {
      if (lh.divides(p.lcm)) {
        Monomial li = polys_[p.i].front().mono.lcm(lh);
        Monomial lj = polys_[p.j].front().mono.lcm(lh);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      next.push_back(p);
    }
    for (const Cand& c : kept) {
      if (!c.coprime) next.push_back({c.g, hi, c.lcm});
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> still;
    for (std::size_t g : active_) {
      if (!lh.divides(polys_[g].front().mono)) still.push_back(g);
    }
    still.push_back(hi);
    active_ = std::move(still);
    return true;
  }

  const Ring& R_;
  const Deadline& deadline_;
  std::vector<TermVec> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  Reducers reducers_;
};

std::vector<PPoly> to_polys(std::vector<TermVec> vs, const PrimeField& f, std::size_t n,
                            MonomialOrder order) {
  std::vector<PPoly> out;
  out.reserve(vs.size());
  for (auto& v : vs) out.push_back(PPoly::from_sorted_terms(f, n, order, std::move(v)));
  return out;
}

// Minimum hitting set size of the supports (as bitmasks) via branching.
void min_hitting(const std::vector<std::uint32_t>& edges, std::uint32_t chosen, int size, int& best) {
  if (size >= best) return;
  const std::uint32_t* pick = nullptr;
  int pick_pop = 64;
  for (const auto& e : edges) {
    if ((e & chosen) != 0) continue;
    int pop = __builtin_popcount(e);
    if (pop < pick_pop) {
      pick_pop = pop;
      pick = &e;
    }
  }
  if (pick == nullptr) {
    best = size;
    return;
  }
  std::uint32_t e = *pick;
  while (e != 0) {
    std::uint32_t bit = e & (~e + 1);
    min_hitting(edges, chosen | bit, size + 1, best);
    e &= e - 1;
  }
}

Ideal shift_into(const Ideal& I, std::size_t offset, std::size_t nvars) {
  std::vector<PPoly> gens;
  for (const auto& g : I.generators()) gens.push_back(g.extend(nvars, offset));
  return Ideal(I.field(), nvars, std::move(gens));
}

// Keeps generators free of the first k variables and drops those variables.
std::vector<PPoly> strip_leading_variables(const std::vector<PPoly>& polys, std::size_t k,
                                           std::size_t nvars) {
  std::vector<std::size_t> map(nvars);
  for (std::size_t i = 0; i < nvars; ++i) map[i] = i >= k ? i - k : nvars;  // nvars = invalid
  std::vector<PPoly> out;
  for (const auto& p : polys) {
    bool free = true;
    for (std::size_t i = 0; i < k && free; ++i) free = !p.uses_variable(i);
    if (free) out.push_back(p.rename(map, nvars - k));
  }
  return out;
}

}  // namespace

// --- Ideal -----------------------------------------------------------------

Ideal::Ideal(PrimeField field, std::size_t nvars, std::vector<PPoly> generators)
    : field_(std::move(field)), nvars_(nvars) {
  for (auto& g : generators) {
    if (g.nvars() != nvars || !(g.field() == field_)) {
      throw std::invalid_argument("ideal generators must share ring and field");
    }
    if (!g.is_zero()) gens_.push_back(g.with_order(MonomialOrder::grevlex()));
  }
}

Ideal Ideal::unit(const PrimeField& field, std::size_t nvars) {
  return Ideal(field, nvars, {PPoly::constant(field, nvars, 1)});
}

Ideal Ideal::with(const PPoly& extra) const {
  std::vector<PPoly> g = gens_;
  g.push_back(extra);
  return Ideal(field_, nvars_, std::move(g));
}

Ideal Ideal::with(const std::vector<PPoly>& extra) const {
  std::vector<PPoly> g = gens_;
  g.insert(g.end(), extra.begin(), extra.end());
  return Ideal(field_, nvars_, std::move(g));
}

// --- GroebnerBasis ---------------------------------------------------------

GroebnerBasis::GroebnerBasis(PrimeField field, std::size_t nvars, MonomialOrder order,
                             std::vector<PPoly> basis)
    : field_(std::move(field)), nvars_(nvars), order_(order), basis_(std::move(basis)) {}

bool GroebnerBasis::contains(const PPoly& p) const { return normal_form(p, *this).is_zero(); }

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
  if (nvars_ != o.nvars_ || !(order_ == o.order_) || basis_.size() != o.basis_.size()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!(basis_[i] == o.basis_[i])) return false;
  }
  return true;
}

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order, const Budget& budget) {
  const PrimeField& f = ideal.field();
  const std::size_t n = ideal.nvars();
  Ring R{f, n, order};
  if (ideal.is_zero()) return GroebnerBasis(f, n, order, {});
  std::vector<TermVec> input;
  for (const auto& g : ideal.generators()) input.push_back(g.with_order(order).terms());
  Deadline deadline(budget);
  Buchberger engine(R, deadline);
  if (!engine.run(std::move(input))) {
    return GroebnerBasis(f, n, order, {PPoly::constant(f, n, 1, order)});
  }
  return GroebnerBasis(f, n, order, to_polys(engine.reduced(), f, n, order));
}

PPoly normal_form(const PPoly& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars()) throw std::invalid_argument("normal_form: ring mismatch");
  Ring R{gb.field(), gb.nvars(), gb.order()};
  Reducers reds;
  for (const auto& b : gb.basis()) reds.add(&b.terms());
  TermVec r = reduce_full(p.with_order(gb.order()).terms(), reds, R, nullptr);
  return PPoly::from_sorted_terms(gb.field(), gb.nvars(), gb.order(), std::move(r));
}

int krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  std::vector<std::uint32_t> edges;
  for (const auto& b : gb.basis()) edges.push_back(b.leading_monomial().support());
  // only inclusion-minimal supports matter
  std::sort(edges.begin(), edges.end(),
            [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<std::uint32_t> minimal;
  for (auto e : edges) {
    bool dominated = false;
    for (auto m : minimal) {
      if ((m & e) == m) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(e);
  }
  int best = static_cast<int>(gb.nvars()) + 1;
  min_hitting(minimal, 0, 0, best);
  return static_cast<int>(gb.nvars()) - best;
}

int krull_dimension(const Ideal& ideal, const Budget& budget) {
  return krull_dimension(buchberger(ideal, MonomialOrder::grevlex(), budget));
}

Ideal eliminate(const Ideal& ideal, std::size_t first_k, const Budget& budget) {
  const std::size_t n = ideal.nvars();
  if (first_k == 0 || first_k >= n) throw std::invalid_argument("eliminate: need 0 < k < nvars");
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::block(first_k), budget);
  std::vector<PPoly> keep;
  for (const auto& b : gb.basis()) {
    bool free = true;
    for (std::size_t i = 0; i < first_k && free; ++i) free = !b.uses_variable(i);
    if (free) keep.push_back(b);
  }
  return Ideal(ideal.field(), n, std::move(keep));
}

Ideal saturate(const Ideal& ideal, const PPoly& g, const Budget& budget) {
  if (g.is_zero()) throw std::invalid_argument("saturate: g must be nonzero");
  const std::size_t n = ideal.nvars();
  const PrimeField& f = ideal.field();
  if (g.is_constant()) {
    return buchberger(ideal, MonomialOrder::grevlex(), budget).ideal();
  }
  if (n + 1 > kMaxVariables) throw std::length_error("saturate: too many variables");
  Ideal lifted = shift_into(ideal, 1, n + 1);
  PPoly t = PPoly::variable(f, n + 1, 0);
  PPoly rab = t * g.extend(n + 1, 1) - PPoly::constant(f, n + 1, 1);
  GroebnerBasis gb = buchberger(lifted.with(rab), MonomialOrder::block(1), budget);
  return Ideal(f, n, strip_leading_variables(gb.basis(), 1, n + 1));
}

Ideal saturate_by_ideal(const Ideal& ideal, const Ideal& by, Seed seed, const Budget& budget) {
  if (by.is_zero()) throw std::invalid_argument("saturate_by_ideal: J must be nonempty");
  const PrimeField& f = ideal.field();
  GroebnerBasis jb = buchberger(by, MonomialOrder::grevlex(), budget);
  if (jb.is_unit()) return buchberger(ideal, MonomialOrder::grevlex(), budget).ideal();

  auto combination = [&](Seed s) {
    auto w = random_weights(s, by.generators().size(), f);
    PPoly h(f, ideal.nvars());
    for (std::size_t k = 0; k < w.size(); ++k) h = h + by.generators()[k].scaled(w[k]);
    return h;
  };
  PPoly h1 = combination(derive_seed(seed, "saturation", 0));
  PPoly h2 = combination(derive_seed(seed, "saturation", 1));
  if (!h1.is_zero() && !h2.is_zero()) {
    Ideal s1 = saturate(ideal, h1, budget);
    Ideal s2 = saturate(ideal, h2, budget);
    if (same_ideal(s1, s2, budget)) return s1;
  }
  // intersection over generators of the per-generator saturations
  Ideal acc = saturate(ideal, by.generators().front(), budget);
  for (std::size_t k = 1; k < by.generators().size(); ++k) {
    acc = intersect(acc, saturate(ideal, by.generators()[k], budget), budget);
  }
  return buchberger(acc, MonomialOrder::grevlex(), budget).ideal();
}

Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget) {
  const std::size_t n = a.nvars();
  const PrimeField& f = a.field();
  if (b.nvars() != n) throw std::invalid_argument("intersect: ring mismatch");
  if (a.is_zero() || b.is_zero()) return Ideal(f, n);
  PPoly t = PPoly::variable(f, n + 1, 0);
  PPoly one_minus_t = PPoly::constant(f, n + 1, 1) - t;
  std::vector<PPoly> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.extend(n + 1, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.extend(n + 1, 1));
  GroebnerBasis gb = buchberger(Ideal(f, n + 1, std::move(gens)), MonomialOrder::block(1), budget);
  return Ideal(f, n, strip_leading_variables(gb.basis(), 1, n + 1));
}

bool is_unit_ideal(const Ideal& ideal, const Budget& budget) {
  return buchberger(ideal, MonomialOrder::grevlex(), budget).is_unit();
}

bool same_ideal(const Ideal& a, const Ideal& b, const Budget& budget) {
  return buchberger(a, MonomialOrder::grevlex(), budget) ==
         buchberger(b, MonomialOrder::grevlex(), budget);
}

QuotientBasis quotient_basis(const GroebnerBasis& gb) {
  QuotientBasis qb;
  if (gb.is_unit()) return qb;
  const std::size_t n = gb.nvars();
  // zero-dimensional iff every variable has a pure power among the leading monomials
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& b : gb.basis()) {
      if (b.leading_monomial().support() == (1U << i)) {
        found = true;
        break;
      }
    }
    if (!found) throw NotZeroDimensional("ideal is not zero-dimensional");
  }
  auto standard = [&](const Monomial& m) {
    for (const auto& b : gb.basis()) {
      if (b.leading_monomial().divides(m)) return false;
    }
    return true;
  };
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> queue{Monomial()};
  seen.insert(Monomial());
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    qb.monomials.push_back(m);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m * Monomial::variable(i);
      if (seen.count(next) || !standard(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  std::sort(qb.monomials.begin(), qb.monomials.end(), [&](const Monomial& a, const Monomial& b) {
    return gb.order().compare(a, b, n) < 0;
  });
  return qb;
}

namespace {

using Vec = std::vector<std::uint64_t>;

// Minimal polynomial of the vector v under the matrix (given by columns).
UPoly krylov_minpoly(const std::vector<Vec>& columns, const Vec& v, const PrimeField& f) {
  const std::size_t D = columns.size();
  auto apply = [&](const Vec& x) {
    Vec y(D, 0);
    for (std::size_t j = 0; j < D; ++j) {
      if (x[j] == 0) continue;
      const Vec& col = columns[j];
      for (std::size_t i = 0; i < D; ++i) {
        if (col[i] != 0) y[i] = f.add(y[i], f.mul(col[i], x[j]));
      }
    }
    return y;
  };
  // echelon rows: vector part (pivot at pivot index, normalized to 1) and
  // the combination of Krylov vectors producing it
  struct Row {
    std::size_t pivot;
    Vec vec;
    Vec comb;
  };
  std::vector<Row> rows;
  Vec current = v;
  for (std::size_t k = 0; k <= D; ++k) {
    Vec w = current;
    Vec comb(D + 1, 0);
    comb[k] = 1;
    for (const Row& r : rows) {
      std::uint64_t c = w[r.pivot];
      if (c == 0) continue;
      for (std::size_t i = 0; i < D; ++i) {
        if (r.vec[i] != 0) w[i] = f.sub(w[i], f.mul(c, r.vec[i]));
      }
      for (std::size_t i = 0; i <= D; ++i) {
        if (r.comb[i] != 0) comb[i] = f.sub(comb[i], f.mul(c, r.comb[i]));
      }
    }
    std::size_t pivot = D;
    for (std::size_t i = 0; i < D; ++i) {
      if (w[i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == D) return upoly_monic(UPoly(comb), f);
    std::uint64_t inv = f.inv(w[pivot]);
    for (auto& x : w) x = f.mul(x, inv);
    for (auto& x : comb) x = f.mul(x, inv);
    rows.push_back({pivot, std::move(w), std::move(comb)});
    current = apply(current);
  }
  throw std::logic_error("krylov sequence did not terminate");
}

}  // namespace

PointCount count_points(const GroebnerBasis& gb, Seed seed) {
  QuotientBasis qb = quotient_basis(gb);
  const std::size_t D = qb.size();
  PointCount out;
  out.quotient_dimension = D;
  if (D == 0) return out;
  const PrimeField& f = gb.field();
  if (D >= f.characteristic()) {
    throw CharacteristicHazard("quotient dimension " + std::to_string(D) +
                               " reaches the characteristic " + std::to_string(f.characteristic()));
  }
  const std::size_t n = gb.nvars();
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < D; ++i) index.emplace(qb.monomials[i], i);

  std::size_t counts[2] = {0, 0};
  for (int attempt = 0; attempt < 2; ++attempt) {
    Seed s = derive_seed(seed, "separating-form", static_cast<std::uint64_t>(attempt));
    auto weights = random_weights(s, n, f);
    std::vector<Term<PrimeField>> lt;
    for (std::size_t i = 0; i < n; ++i) lt.push_back({weights[i], Monomial::variable(i)});
    PPoly ell = PPoly::from_terms(f, n, gb.order(), std::move(lt));
    std::vector<Vec> columns(D, Vec(D, 0));
    for (std::size_t j = 0; j < D; ++j) {
      PPoly prod = ell.mul_term(1, qb.monomials[j]);
      PPoly nf = normal_form(prod, gb);
      for (const auto& t : nf.terms()) columns[j][index.at(t.mono)] = t.coeff;
    }
    UPoly minpoly;
    for (int v = 0; v < 2; ++v) {
      Vec start = random_weights(derive_seed(s, "krylov", static_cast<std::uint64_t>(v)), D, f);
      UPoly m = krylov_minpoly(columns, start, f);
      minpoly = minpoly.is_zero() ? m : upoly_lcm(minpoly, m, f);
    }
    counts[attempt] = static_cast<std::size_t>(upoly_squarefree_degree(minpoly, f));
  }
  if (counts[0] != counts[1]) {
    throw Instability("separating forms disagree on the point count",
                      {static_cast<long long>(counts[0]), static_cast<long long>(counts[1])});
  }
  out.points = counts[0];
  return out;
}

PointCount count_points(const Ideal& ideal, Seed seed, const Budget& budget) {
  return count_points(buchberger(ideal, MonomialOrder::grevlex(), budget), seed);
}

}  // namespace lodeg
