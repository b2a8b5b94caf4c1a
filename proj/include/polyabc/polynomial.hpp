#pragma once

// Dense univariate polynomials over an exact field.
//
// coeffs()[i] is the coefficient of t^i. The highest stored coefficient is
// always nonzero; the zero polynomial stores nothing.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "polyabc/error.hpp"
#include "polyabc/exact_field.hpp"

namespace polyabc {

/// Degree with the zero polynomial mapped to nullopt (minus infinity).
using DegreeValue = std::optional<std::size_t>;

template <ExactField F>
class Polynomial {
 public:
  using field_type = F;
  using value_type = typename F::value_type;

  explicit Polynomial(F field) : field_(std::move(field)) {}

  Polynomial(F field, std::vector<value_type> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(const F& field, value_type c) { return Polynomial(field, {std::move(c)}); }

  static Polynomial one(const F& field) { return constant(field, field.one()); }

  static Polynomial monomial(const F& field, value_type c, std::size_t degree) {
    std::vector<value_type> v(degree + 1, field.zero());
    v[degree] = std::move(c);
    return Polynomial(field, std::move(v));
  }

  /// The indeterminate t.
  static Polynomial variable(const F& field) { return monomial(field, field.one(), 1); }

  /// Convenience constructor from small integer coefficients, lowest degree first.
  static Polynomial from_ints(const F& field, std::initializer_list<std::int64_t> ints) {
    std::vector<value_type> v;
    v.reserve(ints.size());
    for (auto n : ints) v.push_back(field.from_int(n));
    return Polynomial(field, std::move(v));
  }

  const F& field() const noexcept { return field_; }
  std::span<const value_type> coeffs() const noexcept { return coeffs_; }

  value_type coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  DegreeValue degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  std::size_t nat_degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  /// Leading coefficient; zero for the zero polynomial.
  value_type leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }

  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == field_.one(); }

  Polynomial operator-() const {
    Polynomial out(field_);
    out.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
    return out;
  }

  Polynomial& operator+=(const Polynomial& q) {
    check_field(q);
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + q.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& q) {
    check_field(q);
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - q.coeffs_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_field(q);
    if (p.is_zero() || q.is_zero()) return Polynomial(p.field_);
    std::vector<value_type> out(p.coeffs_.size() + q.coeffs_.size() - 1, p.field_.zero());
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (F::is_zero(p.coeffs_[i])) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
        out[i + j] = out[i + j] + p.coeffs_[i] * q.coeffs_[j];
      }
    }
    return Polynomial(p.field_, std::move(out));
  }

  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend Polynomial operator*(const value_type& s, const Polynomial& p) { return p.scaled(s); }
  friend Polynomial operator*(const Polynomial& p, const value_type& s) { return p.scaled(s); }

  Polynomial scaled(const value_type& s) const {
    Polynomial out(field_);
    if (F::is_zero(s)) return out;
    out.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.coeffs_.push_back(c * s);
    out.trim();
    return out;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.field_ == q.field_ && p.coeffs_ == q.coeffs_;
  }

  void check_field(const Polynomial& q) const {
    if (!(field_ == q.field_)) {
      fail(ErrorKind::FieldMismatch, field_.desc().to_string() + " vs " + q.field_.desc().to_string());
    }
  }

 private:
  void trim() {
    while (!coeffs_.empty() && F::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  F field_;
  std::vector<value_type> coeffs_;
};

template <ExactField F>
Polynomial<F> pow(Polynomial<F> base, std::uint64_t e) {
  auto acc = Polynomial<F>::one(base.field());
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return acc;
}

template <ExactField F>
struct DivMod {
  Polynomial<F> quotient;
  Polynomial<F> remainder;
};

template <ExactField F>
DivMod<F> divmod(const Polynomial<F>& p, const Polynomial<F>& q) {
  p.check_field(q);
  if (q.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const F& field = p.field();
  if (p.nat_degree() < q.nat_degree() || p.is_zero()) return {Polynomial<F>(field), p};

  const auto lead_inv = field.inv(q.leading());
  const std::size_t dq = q.nat_degree();
  std::vector<typename F::value_type> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<typename F::value_type> quot(p.nat_degree() - dq + 1, field.zero());
  const auto qc = q.coeffs();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const auto factor = rem[k + dq] * lead_inv;
    quot[k] = factor;
    if (F::is_zero(factor)) continue;
    for (std::size_t j = 0; j <= dq; ++j) rem[k + j] = rem[k + j] - factor * qc[j];
  }
  rem.resize(dq);
  return {Polynomial<F>(field, std::move(quot)), Polynomial<F>(field, std::move(rem))};
}

template <ExactField F>
bool divides(const Polynomial<F>& d, const Polynomial<F>& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(p, d).remainder.is_zero();
}

/// p / d, required to be exact.
template <ExactField F>
Polynomial<F> exact_quotient(const Polynomial<F>& p, const Polynomial<F>& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) fail(ErrorKind::DivisibilityFailure, "division is not exact");
  return std::move(q);
}

/// Formal derivative; the integer factor i is taken in the field, so it
/// vanishes whenever the characteristic divides i.
template <ExactField F>
Polynomial<F> derivative(const Polynomial<F>& p) {
  const F& field = p.field();
  if (p.nat_degree() == 0) return Polynomial<F>(field);
  const auto c = p.coeffs();
  std::vector<typename F::value_type> out;
  out.reserve(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    out.push_back(field.from_int(static_cast<std::int64_t>(i)) * c[i]);
  }
  return Polynomial<F>(field, std::move(out));
}

/// Scales a nonzero polynomial to leading coefficient 1; zero stays zero.
template <ExactField F>
Polynomial<F> monic(const Polynomial<F>& p) {
  if (p.is_zero() || p.leading() == p.field().one()) return p;
  return p.scaled(p.field().inv(p.leading()));
}

namespace detail {

using IntPoly = std::vector<BigInt>;

inline void strip_content(IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& c : f) c /= g;
  }
}

// Primitive integer multiple of a rational polynomial.
inline IntPoly primitive_integer_part(std::span<const Rational> c) {
  BigInt l = 1;
  for (const auto& x : c) l = boost::multiprecision::lcm(l, BigInt(denominator(x)));
  IntPoly out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(BigInt(numerator(x)) * (l / denominator(x)));
  strip_content(out);
  return out;
}

// lc(b)^(deg a - deg b + 1) a mod b, in place on a, then made primitive.
inline void primitive_pseudo_remainder(IntPoly& a, const IntPoly& b) {
  const BigInt& lb = b.back();
  while (a.size() >= b.size()) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    strip_content(a);
  }
}

// gcd over Q through primitive remainder sequences in Z[t]; avoids
// normalizing a rational at every coefficient operation.
inline std::vector<Rational> rational_gcd_monic(std::span<const Rational> p, std::span<const Rational> q) {
  IntPoly a = primitive_integer_part(p), b = primitive_integer_part(q);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    primitive_pseudo_remainder(a, b);
    std::swap(a, b);
  }
  if (a.back() < 0) {
    for (auto& x : a) x = -x;
  }
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const auto& x : a) out.emplace_back(x, a.back());
  return out;
}

}  // namespace detail

template <ExactField F>
Polynomial<F> gcd_monic(Polynomial<F> p, Polynomial<F> q) {
  p.check_field(q);
  if (p.is_zero() && q.is_zero()) fail(ErrorKind::BothZero, "gcd of two zero polynomials");
  if constexpr (std::is_same_v<F, RationalField>) {
    if (p.is_zero()) return monic(q);
    if (q.is_zero()) return monic(p);
    return Polynomial<F>(p.field(), detail::rational_gcd_monic(p.coeffs(), q.coeffs()));
  }
  // Keeping remainders monic bounds coefficient growth over Q.
  p = monic(p);
  q = monic(q);
  while (!q.is_zero()) {
    auto r = monic(divmod(p, q).remainder);
    p = std::move(q);
    q = std::move(r);
  }
  return p;
}

template <ExactField F>
bool is_coprime(const Polynomial<F>& p, const Polynomial<F>& q) {
  if (p.is_zero() && q.is_zero()) return false;
  return gcd_monic(p, q).is_one();
}

/// Equality up to a nonzero scalar, i.e. up to a unit of k[t].
template <ExactField F>
bool associated(const Polynomial<F>& p, const Polynomial<F>& q) {
  return monic(p) == monic(q);
}

/// g(t^k).
template <ExactField F>
Polynomial<F> compose_t_pow(const Polynomial<F>& g, std::size_t k) {
  if (k == 0) fail(ErrorKind::PreconditionViolated, "compose_t_pow needs exponent >= 1");
  const F& field = g.field();
  if (g.is_zero()) return g;
  const auto c = g.coeffs();
  std::vector<typename F::value_type> out(k * (c.size() - 1) + 1, field.zero());
  for (std::size_t i = 0; i < c.size(); ++i) out[i * k] = c[i];
  return Polynomial<F>(field, std::move(out));
}

/// Horner evaluation.
template <ExactField F>
typename F::value_type eval(const Polynomial<F>& p, const typename F::value_type& x) {
  const auto c = p.coeffs();
  auto acc = p.field().zero();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

template <ExactField F>
std::size_t max3_degree(const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& c) {
  return std::max(std::max(a.nat_degree(), b.nat_degree()), c.nat_degree());
}

using QPoly = Polynomial<RationalField>;
using FpPoly = Polynomial<PrimeField>;

}  // namespace polyabc
