#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lodeg/field.hpp"
#include "lodeg/monomial.hpp"

namespace lodeg {

template <class F>
struct Term {
  typename F::Element coeff;
  Monomial mono;
};

/// Sparse multivariate polynomial over the field F.
///
/// Terms are kept strictly decreasing in the polynomial's monomial order with
/// no zero coefficients, so structural equality is polynomial equality.
/// Values are immutable once built; every operation returns a new polynomial.
template <class F>
class Polynomial {
public:
  using Field = F;
  using Element = typename F::Element;
  using TermT = Term<F>;

  Polynomial(F field, std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex())
      : field_(std::move(field)), nvars_(nvars), order_(order) {
    if (nvars > kMaxVariables) {
      throw std::length_error("polynomial ring with " + std::to_string(nvars) +
                              " variables exceeds the supported maximum");
    }
  }

  static Polynomial constant(const F& field, std::size_t nvars, const Element& c,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(field, nvars, order);
    if (!field.is_zero(c)) p.terms_.push_back({c, Monomial()});
    return p;
  }

  static Polynomial variable(const F& field, std::size_t nvars, std::size_t index,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    Polynomial p(field, nvars, order);
    p.terms_.push_back({field.one(), Monomial::variable(index)});
    return p;
  }

  // Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(const F& field, std::size_t nvars, MonomialOrder order,
                               std::vector<TermT> terms) {
    Polynomial p(field, nvars, order);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  // Adopts terms already sorted strictly decreasing with nonzero coefficients.
  static Polynomial from_sorted_terms(const F& field, std::size_t nvars, MonomialOrder order,
                                      std::vector<TermT> terms) {
    Polynomial p(field, nvars, order);
    p.terms_ = std::move(terms);
    return p;
  }

  const F& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<TermT>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || terms_.front().mono.is_one(); }

  const TermT& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Element& leading_coefficient() const { return leading_term().coeff; }

  // Total degree; -1 for the zero polynomial.
  int total_degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }

  bool is_homogeneous() const noexcept {
    for (const auto& t : terms_) {
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    }
    return true;
  }

  // Coefficient of the given monomial (zero if absent).
  Element coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.mono == m) return t.coeff;
    }
    return field_.zero();
  }

  Element constant_term() const { return coefficient(Monomial()); }

  bool uses_variable(std::size_t i) const noexcept {
    for (const auto& t : terms_) {
      if (t.mono[i] != 0) return true;
    }
    return false;
  }

  Polynomial with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    return from_terms(field_, nvars_, order, terms_);
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return Polynomial(field_, nvars_, order_);
    std::vector<TermT> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) out.push_back({field_.mul(a.coeff, b.coeff), a.mono * b.mono});
    }
    return from_terms(field_, nvars_, order_, std::move(out));
  }

  Polynomial scaled(const Element& c) const {
    if (field_.is_zero(c)) return Polynomial(field_, nvars_, order_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
  }

  // c * m * this; order is preserved by monomial multiplication.
  Polynomial mul_term(const Element& c, const Monomial& m) const {
    if (field_.is_zero(c)) return Polynomial(field_, nvars_, order_);
    Polynomial r(field_, nvars_, order_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({field_.mul(t.coeff, c), t.mono * m});
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(field_, nvars_, field_.one(), order_);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading_coefficient()));
  }

  /// Formal partial derivative with respect to variable `index`.
  Polynomial differentiate(std::size_t index) const {
    if (index >= nvars_) throw std::out_of_range("differentiate: variable index out of range");
    std::vector<TermT> out;
    for (const auto& t : terms_) {
      unsigned e = t.mono[index];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(index, e - 1);
      Element c = field_.mul(t.coeff, field_.from_integer(e));
      if (!field_.is_zero(c)) out.push_back({c, m});
    }
    return from_terms(field_, nvars_, order_, std::move(out));
  }

  /// Homogenizes with a new variable inserted at `position`; the result lives
  /// in nvars()+1 variables and has every term of degree total_degree().
  Polynomial homogenize(std::size_t position = 0) const {
    if (position > nvars_) throw std::out_of_range("homogenize: bad position");
    Polynomial r(field_, nvars_ + 1, order_);
    int top = total_degree();
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < nvars_; ++i) m.set(i < position ? i : i + 1, t.mono[i]);
      m.set(position, static_cast<unsigned>(top) - t.mono.degree());
      out.push_back({t.coeff, m});
    }
    return from_terms(field_, nvars_ + 1, order_, std::move(out));
  }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluate: point has wrong length");
    Element acc = field_.zero();
    for (const auto& t : terms_) {
      Element v = t.coeff;
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (unsigned k = 0; k < t.mono[i]; ++k) v = field_.mul(v, point[i]);
      }
      acc = field_.add(acc, v);
    }
    return acc;
  }

  /// Substitutes variable i by images[i]; all images share one target ring.
  Polynomial compose(std::span<const Polynomial> images) const {
    if (images.size() != nvars_) throw std::invalid_argument("compose: wrong number of images");
    if (images.empty()) return *this;
    const Polynomial& proto = images.front();
    Polynomial acc(field_, proto.nvars(), proto.order());
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (const auto& t : terms_) {
      Polynomial v = constant(field_, proto.nvars(), t.coeff, proto.order());
      for (std::size_t i = 0; i < nvars_; ++i) {
        unsigned e = t.mono[i];
        if (e == 0) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(field_, proto.nvars(), field_.one(), proto.order()));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        v = v * cache[e];
      }
      acc = acc + v;
    }
    return acc;
  }

  /// Embeds into a ring with `new_nvars` variables, sending variable i to
  /// variable i + offset.
  Polynomial extend(std::size_t new_nvars, std::size_t offset,
                    MonomialOrder order = MonomialOrder::grevlex()) const {
    if (nvars_ + offset > new_nvars) throw std::invalid_argument("extend: target ring too small");
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < nvars_; ++i) m.set(i + offset, t.mono[i]);
      out.push_back({t.coeff, m});
    }
    return from_terms(field_, new_nvars, order, std::move(out));
  }

  /// Re-indexes variables: variable i goes to map[i] in a ring of new_nvars.
  Polynomial rename(std::span<const std::size_t> map, std::size_t new_nvars,
                    MonomialOrder order = MonomialOrder::grevlex()) const {
    if (map.size() != nvars_) throw std::invalid_argument("rename: map has wrong length");
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (t.mono[i] == 0) continue;
        if (map[i] >= new_nvars) throw std::invalid_argument("rename: variable still in use");
        m.set(map[i], m[map[i]] + t.mono[i]);
      }
      out.push_back({t.coeff, m});
    }
    return from_terms(field_, new_nvars, order, std::move(out));
  }

  /// Terms in decreasing order, explicit `*` and `^`, e.g. "x1^2*x2 - x3*x4".
  std::string to_string(std::span<const std::string> names) const {
    if (names.size() < nvars_) throw std::invalid_argument("to_string: not enough names");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      bool negative = field_.is_negative(t.coeff);
      Element mag = negative ? field_.neg(t.coeff) : t.coeff;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (t.mono[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
      }
      if (mono.empty()) {
        out += field_.to_string(mag);
      } else if (field_.is_one(mag)) {
        out += mono;
      } else {
        out += field_.to_string(mag) + "*" + mono;
      }
    }
    return out;
  }

  bool operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
    }
    return true;
  }

private:
  void check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || !(field_ == o.field_)) {
      throw std::invalid_argument("polynomials from different rings");
    }
  }

  bool before(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, nvars_) > 0;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [this](const TermT& a, const TermT& b) { return before(a.mono, b.mono); });
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = field_.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_compatible(o);
    if (!(o.order_ == order_)) return combine(o.with_order(order_), subtract);
    const Polynomial& rhs = o;
    Polynomial r(field_, nvars_, order_);
    r.terms_.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < rhs.terms_.size()) {
      if (j == rhs.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      if (i == terms_.size()) {
        const auto& t = rhs.terms_[j++];
        r.terms_.push_back({subtract ? field_.neg(t.coeff) : t.coeff, t.mono});
        continue;
      }
      int c = order_.compare(terms_[i].mono, rhs.terms_[j].mono, nvars_);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = rhs.terms_[j++];
        r.terms_.push_back({subtract ? field_.neg(t.coeff) : t.coeff, t.mono});
      } else {
        Element s = subtract ? field_.sub(terms_[i].coeff, rhs.terms_[j].coeff)
                             : field_.add(terms_[i].coeff, rhs.terms_[j].coeff);
        if (!field_.is_zero(s)) r.terms_.push_back({s, terms_[i].mono});
        ++i;
        ++j;
      }
    }
    return r;
  }

  F field_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<TermT> terms_;
};

using QPoly = Polynomial<RationalField>;
using PPoly = Polynomial<PrimeField>;

/// Reduces rational coefficients modulo the field's prime.
PPoly reduce_mod(const QPoly& p, const PrimeField& field);

}  // namespace lodeg
