#pragma once

#include <cctype>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "lodeg/errors.hpp"
#include "lodeg/polynomial.hpp"

namespace lodeg {

namespace detail {

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer ('/' integer)? | identifier | '(' expr ')'
template <class F>
class PolynomialParser {
public:
  PolynomialParser(std::string_view text, std::span<const std::string> names, const F& field,
                   MonomialOrder order)
      : text_(text), names_(names), field_(field), order_(order) {}

  Polynomial<F> parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_ + 1);
    Polynomial<F> p = expr();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_ + 1);
    }
    return p;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<F> expr() {
    Polynomial<F> acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> term() {
    Polynomial<F> acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial<F> unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial<F> power() {
    Polynomial<F> base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        throw ParseError("negative exponent", start + 1);
      }
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected exponent", start + 1);
      if (digits.size() > 5) throw ParseError("exponent too large", start + 1);
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial<F> atom() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_ + 1);
    char c = text_[pos_];
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      Polynomial<F> inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_ + 1);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      mpq_class value{mpz_class(num)};
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        std::string den = read_digits();
        if (den.empty()) throw ParseError("expected denominator", pos_ + 1);
        mpz_class d(den);
        if (d == 0) throw ParseError("zero denominator", pos_);
        value = mpq_class(mpz_class(num), d);
        value.canonicalize();
      }
      return Polynomial<F>::constant(field_, names_.size(), field_.from_rational(value), order_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view ident = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == ident) return Polynomial<F>::variable(field_, names_.size(), i, order_);
      }
      throw ParseError("unknown identifier '" + std::string(ident) + "'", start + 1);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start + 1);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::span<const std::string> names_;
  const F& field_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` over the given variables. Literals are integers or
/// fractions `a/b`; `^` takes a non-negative integer exponent.
template <class F>
Polynomial<F> parse_polynomial(std::string_view text, std::span<const std::string> variables,
                               const F& field, MonomialOrder order = MonomialOrder::grevlex()) {
  return detail::PolynomialParser<F>(text, variables, field, order).parse();
}

}  // namespace lodeg
