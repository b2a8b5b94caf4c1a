#pragma once

// Polynomial expression syntax used by the command line.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natlit)?
//   base   := intlit | intlit '/' intlit | 't' | '(' expr ')'
//
// Whitespace is ignored between tokens. Errors carry the byte offset.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "polyabc/error.hpp"
#include "polyabc/exact_field.hpp"
#include "polyabc/polynomial.hpp"

namespace polyabc {

inline constexpr std::size_t kMaxParsedExponent = 4096;

namespace detail {

template <ExactField F>
class PolyParser {
 public:
  PolyParser(std::string_view text, const F& field) : text_(text), field_(field) {}

  Polynomial<F> parse() {
    auto p = expr();
    skip_ws();
    if (pos_ != text_.size()) syntax("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  Polynomial<F> expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    auto acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char op = peek();
      if (op != '+' && op != '-') return acc;
      ++pos_;
      auto rhs = term();
      if (op == '+') acc += rhs; else acc -= rhs;
    }
  }

  Polynomial<F> term() {
    auto acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  Polynomial<F> factor() {
    auto b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) syntax("expected exponent");
    const BigInt e = digits();
    if (e > kMaxParsedExponent) throw Error(ErrorKind::SyntaxError, "exponent too large", std::nullopt, at);
    return pow(b, static_cast<std::uint64_t>(e));
  }

  Polynomial<F> base() {
    skip_ws();
    const char ch = peek();
    if (ch == 't') {
      ++pos_;
      return Polynomial<F>::variable(field_);
    }
    if (ch == '(') {
      ++pos_;
      auto inner = expr();
      skip_ws();
      if (peek() != ')') syntax("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t at = pos_;
      const BigInt num = digits();
      BigInt den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) syntax("expected denominator");
        den = digits();
      }
      try {
        return Polynomial<F>::constant(field_, field_.from_fraction(num, den));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DivisionByZero) throw;
        throw Error(ErrorKind::LiteralOutOfField,
                    "literal denominator vanishes in " + field_.desc().to_string(), std::nullopt, at);
      }
    }
    syntax(ch == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, ch) + "'");
  }

  BigInt digits() {
    BigInt v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void syntax(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, msg + " at offset " + std::to_string(pos_), std::nullopt, pos_);
  }

  std::string_view text_;
  const F& field_;
  std::size_t pos_ = 0;
};

inline std::pair<bool, std::string> sign_and_magnitude(const Rational& x) {
  if (x < 0) return {true, Rational(-x).str()};
  return {false, x.str()};
}

inline std::pair<bool, std::string> sign_and_magnitude(Fp x) { return {false, std::to_string(x.value())}; }

}  // namespace detail

template <ExactField F>
Polynomial<F> parse_poly(std::string_view text, const F& field) {
  return detail::PolyParser<F>(text, field).parse();
}

/// Descending-degree rendering that parse_poly reads back exactly.
/// Prime-field coefficients print as least nonnegative residues.
template <ExactField F>
std::string format_poly(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (F::is_zero(c[i])) continue;
    auto [negative, mag] = detail::sign_and_magnitude(c[i]);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == "1";
    if (i == 0) {
      out += mag;
      continue;
    }
    if (!unit) out += mag + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace polyabc
