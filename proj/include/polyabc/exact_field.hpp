#pragma once

// Exact coefficient fields: the rationals and prime fields F_p.
//
// A field is a small policy object (RationalField, PrimeField) exposing its
// element type, constants and characteristic. Elements support the usual
// arithmetic operators; division goes through the field so that a zero divisor
// raises DivisionByZero instead of whatever the backend would do.

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "polyabc/error.hpp"

namespace polyabc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest modulus accepted for a prime field; keeps residue products in 64 bits.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

/// Deterministic trial division.
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

enum class FieldKind { Rationals, PrimeField };

class FieldDesc {
 public:
  static FieldDesc rationals() { return FieldDesc(FieldKind::Rationals, 0); }

  static FieldDesc prime_field(std::uint64_t modulus) {
    if (modulus < 2 || modulus > kMaxModulus) {
      fail(ErrorKind::NotPrime, "modulus " + std::to_string(modulus) +
                                    " outside the supported range [2, 2^31 - 1]");
    }
    if (!is_prime(modulus)) {
      fail(ErrorKind::NotPrime, std::to_string(modulus) + " is composite");
    }
    return FieldDesc(FieldKind::PrimeField, modulus);
  }

  static FieldDesc make(FieldKind kind, std::optional<std::uint64_t> modulus = std::nullopt) {
    if (kind == FieldKind::Rationals) return rationals();
    if (!modulus) fail(ErrorKind::NotPrime, "prime field requires a modulus");
    return prime_field(*modulus);
  }

  /// Parses the command-line spelling `q` or `fp:<prime>`.
  static FieldDesc parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("fp:", 0) == 0 && text.size() > 3) {
      std::uint64_t m = 0;
      for (std::size_t i = 3; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch < '0' || ch > '9' || m > kMaxModulus) {
          fail(ErrorKind::ConfigError, "bad field modulus in '" + text + "'");
        }
        m = m * 10 + static_cast<std::uint64_t>(ch - '0');
      }
      return prime_field(m);
    }
    fail(ErrorKind::ConfigError, "unknown field '" + text + "' (expected q or fp:<prime>)");
  }

  FieldKind kind() const noexcept { return kind_; }
  std::optional<std::uint64_t> modulus() const noexcept {
    if (kind_ == FieldKind::PrimeField) return modulus_;
    return std::nullopt;
  }
  std::uint64_t characteristic() const noexcept { return modulus_; }
  bool is_finite() const noexcept { return kind_ == FieldKind::PrimeField; }

  std::string to_string() const {
    return kind_ == FieldKind::Rationals ? std::string("q") : "fp:" + std::to_string(modulus_);
  }

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;

 private:
  FieldDesc(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::uint64_t modulus_;
};

inline std::uint64_t characteristic(const FieldDesc& fd) { return fd.characteristic(); }

/// Element of F_p; the residue is always reduced into [0, p).
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
    const auto m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    value_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  /// Inverse by the extended Euclidean algorithm.
  Fp inverse() const {
    if (value_ == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in F_" + std::to_string(modulus_));
    std::int64_t r0 = modulus_, r1 = value_;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
      std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    return Fp(s0, modulus_);
  }

  friend Fp operator+(Fp x, Fp y) {
    check_same(x, y);
    std::uint64_t s = std::uint64_t{x.value_} + y.value_;
    if (s >= x.modulus_) s -= x.modulus_;
    return raw(static_cast<std::uint32_t>(s), x.modulus_);
  }
  friend Fp operator-(Fp x, Fp y) {
    check_same(x, y);
    const std::uint32_t d = x.value_ >= y.value_ ? x.value_ - y.value_ : x.value_ + (x.modulus_ - y.value_);
    return raw(d, x.modulus_);
  }
  friend Fp operator*(Fp x, Fp y) {
    check_same(x, y);
    return raw(static_cast<std::uint32_t>(std::uint64_t{x.value_} * y.value_ % x.modulus_), x.modulus_);
  }
  friend Fp operator/(Fp x, Fp y) {
    check_same(x, y);
    return x * y.inverse();
  }
  Fp operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }
  Fp& operator+=(Fp y) { return *this = *this + y; }
  Fp& operator-=(Fp y) { return *this = *this - y; }
  Fp& operator*=(Fp y) { return *this = *this * y; }

  friend bool operator==(Fp x, Fp y) = default;

  friend std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value_; }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t m) {
    Fp out;
    out.value_ = v;
    out.modulus_ = m;
    return out;
  }
  static void check_same(Fp x, Fp y) {
    if (x.modulus_ != y.modulus_) {
      fail(ErrorKind::FieldMismatch, "F_" + std::to_string(x.modulus_) + " vs F_" + std::to_string(y.modulus_));
    }
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 2;
};

class RationalField {
 public:
  using value_type = Rational;

  FieldDesc desc() const { return FieldDesc::rationals(); }
  std::uint64_t characteristic() const noexcept { return 0; }

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t n) const { return Rational(n); }
  Rational from_fraction(const BigInt& num, const BigInt& den) const {
    if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
  }

  static bool is_zero(const Rational& x) { return x == 0; }
  Rational div(const Rational& x, const Rational& y) const {
    if (y == 0) fail(ErrorKind::DivisionByZero, "division by zero in Q");
    return x / y;
  }
  Rational inv(const Rational& x) const { return div(one(), x); }

  static std::string format(const Rational& x) { return x.str(); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

class PrimeField {
 public:
  using value_type = Fp;

  explicit PrimeField(std::uint32_t p) : p_(p) { (void)FieldDesc::prime_field(p); }
  explicit PrimeField(const FieldDesc& fd) {
    if (!fd.is_finite()) fail(ErrorKind::NotFiniteField, "expected a prime field");
    p_ = static_cast<std::uint32_t>(fd.characteristic());
  }

  FieldDesc desc() const { return FieldDesc::prime_field(p_); }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::uint32_t modulus() const noexcept { return p_; }

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(std::int64_t n) const { return Fp(n, p_); }
  Fp from_big(const BigInt& n) const {
    BigInt r = n % p_;
    if (r < 0) r += p_;
    return Fp(static_cast<std::int64_t>(r), p_);
  }
  Fp from_fraction(const BigInt& num, const BigInt& den) const {
    const Fp d = from_big(den);
    if (d.is_zero()) fail(ErrorKind::DivisionByZero, "denominator vanishes in F_" + std::to_string(p_));
    return from_big(num) / d;
  }

  static bool is_zero(Fp x) { return x.is_zero(); }
  Fp div(Fp x, Fp y) const { return x / y; }
  Fp inv(Fp x) const { return x.inverse(); }

  static std::string format(Fp x) { return std::to_string(x.value()); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_ = 2;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& x, std::int64_t n) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(n) } -> std::same_as<typename F::value_type>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.desc() } -> std::same_as<FieldDesc>;
  { F::is_zero(x) } -> std::convertible_to<bool>;
  { f.div(x, x) } -> std::same_as<typename F::value_type>;
  { x + x } -> std::convertible_to<typename F::value_type>;
  { x - x } -> std::convertible_to<typename F::value_type>;
  { x * x } -> std::convertible_to<typename F::value_type>;
  { -x } -> std::convertible_to<typename F::value_type>;
};

enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv };

template <ExactField F>
typename F::value_type field_arithmetic(const F& field, ArithOp op, const typename F::value_type& x,
                                        const std::optional<typename F::value_type>& y = std::nullopt) {
  const auto rhs = [&]() -> const typename F::value_type& {
    if (!y) fail(ErrorKind::PreconditionViolated, "binary field operation needs two operands");
    return *y;
  };
  switch (op) {
    case ArithOp::Add: return x + rhs();
    case ArithOp::Sub: return x - rhs();
    case ArithOp::Mul: return x * rhs();
    case ArithOp::Div: return field.div(x, rhs());
    case ArithOp::Neg: return -x;
    case ArithOp::Inv: return field.inv(x);
  }
  return x;
}

template <ExactField F>
typename F::value_type field_pow(const F& field, typename F::value_type base, std::uint64_t e) {
  auto acc = field.one();
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    base = base * base;
    e >>= 1U;
  }
  return acc;
}

namespace detail {

inline std::optional<BigInt> integer_nth_root(const BigInt& x, unsigned n) {
  if (x < 0) return std::nullopt;
  if (x < 2) return x;
  BigInt lo = 0, hi = 1;
  while (boost::multiprecision::pow(hi, n) <= x) hi <<= 1;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) >> 1;
    if (boost::multiprecision::pow(mid, n) <= x) lo = mid; else hi = mid;
  }
  if (boost::multiprecision::pow(lo, n) == x) return lo;
  return std::nullopt;
}

}  // namespace detail

/// Some r with r^n = x, if one exists in the field.
inline std::optional<Fp> nth_root(const PrimeField& field, Fp x, unsigned n) {
  for (std::uint32_t r = 0; r < field.modulus(); ++r) {
    const Fp cand = field.from_int(r);
    if (field_pow(field, cand, n) == x) return cand;
  }
  return std::nullopt;
}

inline std::optional<Rational> nth_root(const RationalField&, const Rational& x, unsigned n) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  const bool negative = num < 0;
  if (negative && n % 2 == 0) return std::nullopt;
  const auto rn = detail::integer_nth_root(negative ? BigInt(-num) : num, n);
  const auto rd = detail::integer_nth_root(den, n);
  if (!rn || !rd) return std::nullopt;
  return Rational(negative ? BigInt(-*rn) : *rn, *rd);
}

}  // namespace polyabc
