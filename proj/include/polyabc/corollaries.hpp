#pragma once

// Consequences of the polynomial abc theorem, as executable checkers:
// Fermat-Catalan (and FLT) with the characteristic-p descent, Davenport's
// bound and its coprime any-characteristic form, the UFD lemma on associated
// powers, and non-parametrizability of y^2 = x^3 + 1 by rational functions.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "polyabc/abc.hpp"
#include "polyabc/error.hpp"
#include "polyabc/polynomial.hpp"
#include "polyabc/radical.hpp"

namespace polyabc {

using DegreeTriple = std::array<std::size_t, 3>;

template <ExactField F>
struct CatalanParams {
  std::uint64_t p = 1, q = 1, r = 1;
  typename F::value_type u, v, w;
};

enum class ConstancyKind { AllConstant, HypothesisFailed, TheoremViolated };

inline std::string_view to_string(ConstancyKind k) {
  switch (k) {
    case ConstancyKind::AllConstant: return "AllConstant";
    case ConstancyKind::HypothesisFailed: return "HypothesisFailed";
    case ConstancyKind::TheoremViolated: return "TheoremViolated";
  }
  return "Unknown";
}

struct ConstancyReport {
  ConstancyKind kind = ConstancyKind::AllConstant;
  DegreeTriple degrees{};
  std::vector<DegreeTriple> descent_trace;
};

template <ExactField F>
void validate_catalan_params(const F& field, const CatalanParams<F>& params) {
  if (params.p == 0) precondition_failed("hp", "p must be positive");
  if (params.q == 0) precondition_failed("hq", "q must be positive");
  if (params.r == 0) precondition_failed("hr", "r must be positive");
  const auto [p, q, r] = std::tuple{params.p, params.q, params.r};
  if (!(q * r + r * p + p * q <= p * q * r)) precondition_failed("hineq", "qr + rp + pq > pqr");
  const std::uint64_t ch = field.characteristic();
  if (ch != 0) {
    if (p % ch == 0) precondition_failed("chp", "characteristic divides p");
    if (q % ch == 0) precondition_failed("chq", "characteristic divides q");
    if (r % ch == 0) precondition_failed("chr", "characteristic divides r");
  }
  if (F::is_zero(params.u)) precondition_failed("hu", "u = 0");
  if (F::is_zero(params.v)) precondition_failed("hv", "v = 0");
  if (F::is_zero(params.w)) precondition_failed("hw", "w = 0");
}

/// Replays the degree chain that rules out the inequality branch for a
/// Fermat-Catalan solution with deg a, b, c = (da, db, dc):
///   pqr m < pqr deg rad(abc) <= pqr (da + db + dc)
///         = qr (p da) + rp (q db) + pq (r dc) <= (qr + rp + pq) m <= pqr m.
/// Every step is checked in integers; reaching the end means m < m, which
/// is raised as InternalInconsistency. This never returns.
template <ExactField F>
[[noreturn]] void refute_inequality_verdict(const CatalanParams<F>& params, const DegreeTriple& degs,
                                            const MsVerdict& verdict) {
  const auto [p, q, r] = std::tuple{params.p, params.q, params.r};
  const std::uint64_t m = verdict.max3_degree;
  const std::uint64_t rad = verdict.radical_degree;
  const std::uint64_t sum = degs[0] + degs[1] + degs[2];
  const std::uint64_t pqr = p * q * r;
  const std::uint64_t weighted = q * r * (p * degs[0]) + r * p * (q * degs[1]) + p * q * (r * degs[2]);
  const bool steps = verdict.kind == VerdictKind::InequalityHolds && m < rad && rad <= sum &&
                     pqr * sum == weighted && p * degs[0] <= m && q * degs[1] <= m && r * degs[2] <= m &&
                     weighted <= (q * r + r * p + p * q) * m && (q * r + r * p + p * q) * m <= pqr * m;
  if (steps) {
    fail(ErrorKind::InternalInconsistency,
         "degree chain gives pqr*m < pqr*m with m = " + std::to_string(m) + " for an inequality verdict");
  }
  fail(ErrorKind::InternalInconsistency, "inequality verdict inconsistent with the Fermat-Catalan degree chain");
}

template <ExactField F>
void check_catalan_instance(const CatalanParams<F>& params, const Polynomial<F>& a, const Polynomial<F>& b,
                            const Polynomial<F>& c) {
  const F& field = a.field();
  a.check_field(b);
  a.check_field(c);
  validate_catalan_params(field, params);
  if (a.is_zero()) precondition_failed("ha", "a = 0");
  if (b.is_zero()) precondition_failed("hb", "b = 0");
  if (c.is_zero()) precondition_failed("hc", "c = 0");
  if (!is_coprime(a, b)) precondition_failed("hab", "a and b are not coprime");
  const auto sum = pow(a, params.p) * params.u + pow(b, params.q) * params.v + pow(c, params.r) * params.w;
  if (!sum.is_zero()) precondition_failed("heq", "u a^p + v b^q + w c^r != 0");
}

/// True iff a' = b' = c' = 0, by running the abc engine on
/// (u a^p, v b^q, w c^r). The inequality branch is impossible and is
/// refuted arithmetically if it ever shows up.
template <ExactField F>
bool flt_catalan_deriv_check(const CatalanParams<F>& params, const Polynomial<F>& a, const Polynomial<F>& b,
                             const Polynomial<F>& c) {
  check_catalan_instance(params, a, b, c);
  const auto verdict = mason_stothers_verdict(pow(a, params.p) * params.u, pow(b, params.q) * params.v,
                                              pow(c, params.r) * params.w);
  switch (verdict.kind) {
    case VerdictKind::DerivativesVanish:
      // (a^p)' = p a^(p-1) a' and p != 0 in the field.
      if (!derivative(a).is_zero() || !derivative(b).is_zero() || !derivative(c).is_zero()) {
        fail(ErrorKind::InternalInconsistency, "powers have zero derivative but a base does not");
      }
      return true;
    case VerdictKind::InequalityHolds:
      refute_inequality_verdict(params, DegreeTriple{a.nat_degree(), b.nat_degree(), c.nat_degree()}, verdict);
    default:
      return false;
  }
}

/// All-constant conclusion. In characteristic l > 0 the triple is replaced
/// by its l-th roots while derivatives vanish and degrees are positive; each
/// step is recorded in the descent trace.
template <ExactField F>
ConstancyReport flt_catalan_check(const CatalanParams<F>& params, const Polynomial<F>& a, const Polynomial<F>& b,
                                  const Polynomial<F>& c) {
  const std::uint64_t ell = a.field().characteristic();
  ConstancyReport report;
  std::array<Polynomial<F>, 3> cur{a, b, c};
  for (;;) {
    const DegreeTriple degs{cur[0].nat_degree(), cur[1].nat_degree(), cur[2].nat_degree()};
    report.degrees = degs;
    if (!flt_catalan_deriv_check(params, cur[0], cur[1], cur[2])) {
      report.kind = ConstancyKind::TheoremViolated;
      return report;
    }
    if (degs[0] == 0 && degs[1] == 0 && degs[2] == 0) {
      report.kind = ConstancyKind::AllConstant;
      return report;
    }
    if (ell == 0) fail(ErrorKind::InternalInconsistency, "zero derivatives in characteristic 0 but nonconstant");
    report.descent_trace.push_back(degs);
    for (auto& f : cur) f = pth_root(f);
    for (std::size_t i = 0; i < 3; ++i) {
      if (cur[i].nat_degree() * ell != degs[i]) fail(ErrorKind::InternalInconsistency, "descent step off by degree");
    }
  }
}

template <ExactField F>
ConstancyReport flt_check(std::uint64_t n, const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& c) {
  if (n < 3) precondition_failed("hn", "exponent must be at least 3");
  const F& field = a.field();
  const CatalanParams<F> params{n, n, n, field.one(), field.one(), -field.one()};
  if (field.characteristic() != 0 && n % field.characteristic() == 0) {
    precondition_failed("chn", "characteristic divides n");
  }
  return flt_catalan_check(params, a, b, c);
}

struct DavenportResult {
  std::size_t lhs = 0;  // deg f + 2
  std::size_t rhs = 0;  // 2 deg(f^3 - g^2)
  bool holds = false;
};

/// The raw inequality deg f + 2 <= 2 deg(f^3 - g^2), no hypotheses checked.
template <ExactField F>
DavenportResult davenport_degrees(const Polynomial<F>& f, const Polynomial<F>& g) {
  const auto h = pow(f, 3) - pow(g, 2);
  DavenportResult out{f.nat_degree() + 2, 2 * h.nat_degree(), false};
  out.holds = out.lhs <= out.rhs;
  return out;
}

namespace detail {

// Adds the two inequalities 3 deg f + 1 <= S and 2 deg g + 1 <= S with
// S = deg f + deg g + deg h, after checking each.
inline DavenportResult sum_davenport_inequalities(std::size_t df, std::size_t dg, std::size_t dh) {
  const std::size_t s = df + dg + dh;
  if (!(3 * df + 1 <= s) || !(2 * dg + 1 <= s)) {
    fail(ErrorKind::InternalInconsistency, "a Davenport summand inequality fails");
  }
  DavenportResult out{df + 2, 2 * dh, df + 2 <= 2 * dh};
  if (!out.holds) fail(ErrorKind::InternalInconsistency, "summed inequality fails");
  return out;
}

}  // namespace detail

/// deg f + 2 <= 2 deg(f^3 - g^2) in characteristic 0, derived from the
/// non-coprime variant applied to (-f^3, g^2, f^3 - g^2).
template <ExactField F>
DavenportResult davenport_check(const Polynomial<F>& f, const Polynomial<F>& g) {
  f.check_field(g);
  if (f.field().characteristic() != 0) precondition_failed("char0", "Davenport needs characteristic 0");
  if (f.nat_degree() == 0) precondition_failed("ha", "f must be nonconstant");
  if (g.nat_degree() == 0) precondition_failed("hb", "g must be nonconstant");
  const auto f3 = pow(f, 3);
  const auto g2 = pow(g, 2);
  const auto h = f3 - g2;
  if (h.is_zero()) fail(ErrorKind::CubeEqualsSquare, "f^3 = g^2");

  const auto v = ms_noncoprime_verdict_char0(-f3, g2, h);
  if (v.kind != VerdictKind::InequalityHolds) {
    fail(ErrorKind::InternalInconsistency, "non-coprime variant failed on a Davenport triple");
  }
  // max(3 deg f, 2 deg g) <= max3 < deg rad(f^3) + deg rad(g^2) + deg h <= deg f + deg g + deg h
  const std::size_t df = f.nat_degree(), dg = g.nat_degree(), dh = h.nat_degree();
  if (!(radical(f3).nat_degree() <= df && radical(g2).nat_degree() <= dg &&
        std::max(3 * df, 2 * dg) <= v.max3_degree && v.max3_degree + 1 <= v.radical_degree &&
        v.radical_degree <= df + dg + dh)) {
    fail(ErrorKind::InternalInconsistency, "Davenport degree chain fails");
  }
  return detail::sum_davenport_inequalities(df, dg, dh);
}

/// Same inequality in any characteristic for coprime f, g with nonzero
/// derivatives, via the coprime theorem on (-f^3, g^2, f^3 - g^2).
template <ExactField F>
DavenportResult davenport_prime_check(const Polynomial<F>& f, const Polynomial<F>& g) {
  f.check_field(g);
  if (derivative(f).is_zero()) precondition_failed("haderiv", "f' = 0");
  if (derivative(g).is_zero()) precondition_failed("hbderiv", "g' = 0");
  if (!is_coprime(f, g)) precondition_failed("hab", "f and g are not coprime");
  const auto f3 = pow(f, 3);
  const auto g2 = pow(g, 2);
  const auto h = f3 - g2;
  if (h.is_zero()) fail(ErrorKind::InternalInconsistency, "coprime f, g with f' != 0 gave f^3 = g^2");
  const auto v = mason_stothers_verdict(-f3, g2, h);
  if (v.kind != VerdictKind::InequalityHolds) {
    fail(ErrorKind::InternalInconsistency, "abc engine did not give the inequality on a Davenport triple");
  }
  const std::size_t df = f.nat_degree(), dg = g.nat_degree(), dh = h.nat_degree();
  if (!(std::max(3 * df, 2 * dg) <= v.max3_degree && v.radical_degree <= df + dg + dh)) {
    fail(ErrorKind::InternalInconsistency, "Davenport degree chain fails");
  }
  return detail::sum_davenport_inequalities(df, dg, dh);
}

namespace detail {

// x n + y m = gcd(n, m) over the integers.
inline std::pair<std::int64_t, std::int64_t> bezout(std::int64_t n, std::int64_t m) {
  std::int64_t r0 = n, r1 = m, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(x0, x1) = std::pair{x1, x0 - q * x1};
    std::tie(y0, y1) = std::pair{y1, y0 - q * y1};
  }
  return {x0, y0};
}

}  // namespace detail

/// Given a^m associated to b^n with gcd(m, n) = 1, returns monic c with
/// a ~ c^n and b ~ c^m. With x n + y m = 1, c = a^x b^y as an exact
/// quotient; no factorization involved.
template <ExactField F>
Polynomial<F> associated_pow_witness(const Polynomial<F>& a, const Polynomial<F>& b, std::uint64_t m,
                                     std::uint64_t n) {
  a.check_field(b);
  if (a.is_zero()) precondition_failed("ha", "a = 0");
  if (b.is_zero()) precondition_failed("hb", "b = 0");
  if (m == 0) precondition_failed("hm", "m = 0");
  if (n == 0) precondition_failed("hn", "n = 0");
  if (std::gcd(m, n) != 1) fail(ErrorKind::ExponentsNotCoprime, "gcd(m, n) != 1");
  if (!associated(pow(a, m), pow(b, n))) fail(ErrorKind::NotAssociated, "a^m and b^n are not associated");

  const auto [x, y] = detail::bezout(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m));
  const F& field = a.field();
  auto numer = Polynomial<F>::one(field);
  auto denom = Polynomial<F>::one(field);
  (x >= 0 ? numer : denom) *= pow(a, static_cast<std::uint64_t>(x >= 0 ? x : -x));
  (y >= 0 ? numer : denom) *= pow(b, static_cast<std::uint64_t>(y >= 0 ? y : -y));
  auto c = monic(exact_quotient(numer, denom));
  if (!associated(a, pow(c, n)) || !associated(b, pow(c, m))) {
    fail(ErrorKind::InternalInconsistency, "witness does not satisfy both associations");
  }
  return c;
}

/// Rational function num/den kept in lowest terms with monic denominator.
template <ExactField F>
class RatFunc {
 public:
  explicit RatFunc(Polynomial<F> num) : num_(std::move(num)), den_(Polynomial<F>::one(num_.field())) {}

  RatFunc(Polynomial<F> num, Polynomial<F> den) : num_(std::move(num)), den_(std::move(den)) {
    num_.check_field(den_);
    if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    canonicalize();
  }

  const Polynomial<F>& num() const noexcept { return num_; }
  const Polynomial<F>& den() const noexcept { return den_; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y) {
    if (y.num_.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero rational function");
    return RatFunc(x.num_ * y.den_, x.den_ * y.num_);
  }
  friend bool operator==(const RatFunc& x, const RatFunc& y) { return x.num_ == y.num_ && x.den_ == y.den_; }

 private:
  void canonicalize() {
    const auto g = gcd_monic(num_, den_);
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
    const auto lead_inv = den_.field().inv(den_.leading());
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
  }

  Polynomial<F> num_;
  Polynomial<F> den_;
};

template <ExactField F>
RatFunc<F> pow(const RatFunc<F>& x, std::uint64_t e) {
  return RatFunc<F>(pow(x.num(), e), pow(x.den(), e));
}

/// y^2 = x^3 + 1 over k(t) with char k not dividing 6 forces x, y constant.
/// With x = m/M, y = n/N the identity n^2 M^3 = (m^3 + M^3) N^2 gives
/// N^2 ~ M^3, hence M = alpha e^2, N = beta e^3, and
///   beta^2 m^3 + alpha^3 beta^2 e^6 - alpha^3 n^2 = 0
/// is a Fermat-Catalan instance with exponents (3, 6, 2) on (m, e, n).
template <ExactField F>
ConstancyReport elliptic_parametrization_check(const RatFunc<F>& x, const RatFunc<F>& y) {
  const F& field = x.num().field();
  x.num().check_field(y.num());
  const std::uint64_t ch = field.characteristic();
  if (ch == 2 || ch == 3) precondition_failed("chk", "characteristic divides 6");

  const auto& m = x.num();
  const auto& bigm = x.den();
  const auto& n = y.num();
  const auto& bign = y.den();
  const auto m3 = pow(bigm, 3);
  const auto n2 = pow(bign, 2);
  if (!(pow(n, 2) * m3 == (pow(m, 3) + m3) * n2)) precondition_failed("eqn", "y^2 != x^3 + 1");

  if (!divides(n2, m3) || !divides(m3, n2)) {
    fail(ErrorKind::InternalInconsistency, "N^2 and M^3 do not divide each other");
  }
  const auto e = associated_pow_witness(bigm, bign, 3, 2);
  const auto e2 = pow(e, 2), e3 = pow(e, 3);
  const auto alpha = bigm.leading();
  const auto beta = bign.leading();
  if (!(bigm == e2 * alpha) || !(bign == e3 * beta)) {
    fail(ErrorKind::InternalInconsistency, "denominators are not alpha e^2, beta e^3");
  }

  // x = 0 or y = 0 gives a zero entry; the equation then pins the other
  // coordinate to a root of unity, so both are constant.
  if (m.is_zero() || n.is_zero()) {
    if (!x.is_constant() || !y.is_constant()) fail(ErrorKind::InternalInconsistency, "zero coordinate but nonconstant");
    return ConstancyReport{ConstancyKind::AllConstant, {m.nat_degree(), e.nat_degree(), n.nat_degree()}, {}};
  }

  const auto alpha3 = alpha * alpha * alpha;
  const auto beta2 = beta * beta;
  const CatalanParams<F> params{3, 6, 2, beta2, alpha3 * beta2, -alpha3};
  return flt_catalan_check(params, m, e, n);
}

}  // namespace polyabc
