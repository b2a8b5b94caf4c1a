#pragma once

// Wronskians and the Mason-Stothers verdict engine.
//
// For nonzero pairwise coprime a + b + c = 0 either a' = b' = c' = 0 or
//   max(deg a, deg b, deg c) + 1 <= deg rad(abc).
// The engine computes the radical degree directly and re-derives the bound
// from W = W(a,b) = W(b,c) = W(c,a): each a/rad(a) divides W, hence so does
// abc/rad(abc), and deg W < deg a + deg b. If the two routes disagree the
// engine throws rather than return a verdict.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "polyabc/error.hpp"
#include "polyabc/polynomial.hpp"
#include "polyabc/radical.hpp"

namespace polyabc {

enum class VerdictKind { DerivativesVanish, AllConstant, InequalityHolds, Violation };

inline std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::DerivativesVanish: return "DerivativesVanish";
    case VerdictKind::AllConstant: return "AllConstant";
    case VerdictKind::InequalityHolds: return "InequalityHolds";
    case VerdictKind::Violation: return "Violation";
  }
  return "Unknown";
}

/// `radical_degree` is the right-hand side of whichever bound was checked:
/// deg rad(abc) for the coprime theorem, deg rad(a) + deg rad(b) + deg c for
/// the non-coprime variant. margin = radical_degree - max3_degree - 1.
struct MsVerdict {
  VerdictKind kind;
  std::size_t max3_degree = 0;
  std::size_t radical_degree = 0;
  std::optional<std::int64_t> margin;
  std::optional<std::size_t> wronskian_degree;

  bool is_tight() const { return kind == VerdictKind::InequalityHolds && margin == 0; }
};

template <ExactField F>
Polynomial<F> wronskian(const Polynomial<F>& a, const Polynomial<F>& b) {
  a.check_field(b);
  return a * derivative(b) - derivative(a) * b;
}

template <ExactField F>
bool wronskian_degree_bound_holds(const Polynomial<F>& a, const Polynomial<F>& b) {
  const auto w = wronskian(a, b);
  if (w.is_zero()) fail(ErrorKind::ZeroWronskian, "W(a, b) = 0");
  return w.nat_degree() < a.nat_degree() + b.nat_degree();
}

/// The common value W(a,b) = W(b,c) = W(c,a) of a zero-sum triple.
template <ExactField F>
Polynomial<F> wronskian_common(const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& c) {
  if (!(a + b + c).is_zero()) fail(ErrorKind::NotZeroSum, "a + b + c != 0");
  auto wab = wronskian(a, b);
  if (!(wronskian(b, c) == wab) || !(wronskian(c, a) == wab)) {
    fail(ErrorKind::InternalInconsistency, "Wronskians of a zero-sum triple differ");
  }
  return wab;
}

/// One rotation of the degree argument: abc/rad(abc) divides w, so
/// deg c + 1 <= deg rad(abc). Returns deg rad(abc).
template <ExactField F>
std::size_t ms_subcall_bound(const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& c,
                             const Polynomial<F>& w) {
  if (w.is_zero()) fail(ErrorKind::ZeroWronskian, "subcall needs W != 0");
  if (a.is_zero() || b.is_zero() || c.is_zero()) precondition_failed("nonzero", "a, b, c must be nonzero");
  if (!is_coprime(a, b)) precondition_failed("hab", "a and b are not coprime");
  if (!is_coprime(b, c)) precondition_failed("hbc", "b and c are not coprime");
  if (!is_coprime(c, a)) precondition_failed("hca", "c and a are not coprime");

  // Pairwise coprime, so rad(abc) = rad(a) rad(b) rad(c).
  const auto abc = a * b * c;
  const auto rad = radical(a) * radical(b) * radical(c);
  const auto dr = exact_quotient(abc, rad);
  if (!divides(dr, w)) fail(ErrorKind::DivisibilityFailure, "abc/rad(abc) does not divide W");
  // deg(abc) - deg rad(abc) <= deg W < deg a + deg b.
  if (!(dr.nat_degree() <= w.nat_degree() && w.nat_degree() < a.nat_degree() + b.nat_degree())) {
    fail(ErrorKind::DivisibilityFailure, "degree chain through W fails");
  }
  const std::size_t rad_deg = rad.nat_degree();
  if (!(c.nat_degree() + 1 <= rad_deg)) {
    fail(ErrorKind::InternalInconsistency, "deg c + 1 > deg rad(abc) after divisibility held");
  }
  return rad_deg;
}

template <ExactField F>
MsVerdict mason_stothers_verdict(const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& c) {
  a.check_field(b);
  a.check_field(c);
  if (a.is_zero()) precondition_failed("ha", "a = 0");
  if (b.is_zero()) precondition_failed("hb", "b = 0");
  if (c.is_zero()) precondition_failed("hc", "c = 0");
  if (!(a + b + c).is_zero()) precondition_failed("hsum", "a + b + c != 0");
  if (!is_coprime(a, b)) precondition_failed("hab", "a and b are not coprime");

  MsVerdict v{};
  v.max3_degree = max3_degree(a, b, c);
  v.radical_degree = radical(a * b * c).nat_degree();
  const std::int64_t margin = static_cast<std::int64_t>(v.radical_degree) -
                              static_cast<std::int64_t>(v.max3_degree) - 1;

  const auto w = wronskian_common(a, b, c);
  const bool all_vanish = derivative(a).is_zero() && derivative(b).is_zero() && derivative(c).is_zero();
  if (w.is_zero()) {
    // a b' = a' b with gcd(a, b) = 1 forces a | a', so a' = 0; likewise b, c.
    if (!all_vanish) fail(ErrorKind::InternalInconsistency, "W = 0 but some derivative is nonzero");
    v.kind = VerdictKind::DerivativesVanish;
    return v;
  }
  if (all_vanish) fail(ErrorKind::InternalInconsistency, "all derivatives vanish but W != 0");
  v.wronskian_degree = w.nat_degree();
  v.margin = margin;

  bool pipeline_ok = true;
  try {
    const auto r1 = ms_subcall_bound(a, b, c, w);
    const auto r2 = ms_subcall_bound(b, c, a, w);
    const auto r3 = ms_subcall_bound(c, a, b, w);
    if (r1 != v.radical_degree || r2 != v.radical_degree || r3 != v.radical_degree) {
      fail(ErrorKind::DivisibilityFailure, "radical degrees disagree between routes");
    }
  } catch (const Error&) {
    if (margin >= 0) throw;
    pipeline_ok = false;
  }
  if (margin < 0) {
    if (pipeline_ok) fail(ErrorKind::DivisibilityFailure, "pipeline accepted a violating triple");
    v.kind = VerdictKind::Violation;
  } else {
    v.kind = VerdictKind::InequalityHolds;
  }
  return v;
}

/// max3 versus deg rad(a) + deg rad(b) + deg c in any characteristic, by
/// direct degree arithmetic. AllConstant when all three are constants.
template <ExactField F>
MsVerdict noncoprime_degree_verdict(const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& c) {
  a.check_field(b);
  a.check_field(c);
  if (a.is_zero() || b.is_zero() || c.is_zero()) precondition_failed("nonzero", "a, b, c must be nonzero");
  if (!(a + b + c).is_zero()) precondition_failed("hsum", "a + b + c != 0");
  MsVerdict v{};
  v.max3_degree = max3_degree(a, b, c);
  v.radical_degree = radical(a).nat_degree() + radical(b).nat_degree() + c.nat_degree();
  if (a.nat_degree() == 0 && b.nat_degree() == 0 && c.nat_degree() == 0) {
    v.kind = VerdictKind::AllConstant;
    return v;
  }
  v.margin = static_cast<std::int64_t>(v.radical_degree) - static_cast<std::int64_t>(v.max3_degree) - 1;
  v.kind = *v.margin >= 0 ? VerdictKind::InequalityHolds : VerdictKind::Violation;
  return v;
}

/// Non-coprime variant in characteristic 0. Besides the direct degree
/// arithmetic, divides out d = gcd(a, b), runs the coprime engine on the
/// reduced triple and re-checks every step of the degree chain back up.
template <ExactField F>
MsVerdict ms_noncoprime_verdict_char0(const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& c) {
  if (a.field().characteristic() != 0) {
    fail(ErrorKind::WrongCharacteristic, "non-coprime variant needs characteristic 0");
  }
  auto v = noncoprime_degree_verdict(a, b, c);
  if (v.kind == VerdictKind::AllConstant) return v;

  const auto d = gcd_monic(a, b);
  const auto a0 = exact_quotient(a, d);
  const auto b0 = exact_quotient(b, d);
  const auto c0 = exact_quotient(c, d);
  const auto reduced = mason_stothers_verdict(a0, b0, c0);
  const std::size_t dd = d.nat_degree();
  bool chain_ok = true;
  if (reduced.kind == VerdictKind::DerivativesVanish) {
    // Characteristic 0: a0, b0, c0 constant, so everything is a multiple of d.
    chain_ok = a0.is_constant() && b0.is_constant() && c0.is_constant() && dd >= 1 &&
               radical(d).nat_degree() >= 1 && v.max3_degree == dd;
  } else if (reduced.kind == VerdictKind::InequalityHolds) {
    const std::size_t r_a0 = radical(a0).nat_degree();
    const std::size_t r_b0 = radical(b0).nat_degree();
    const std::size_t r_c0 = radical(c0).nat_degree();
    chain_ok = v.max3_degree == reduced.max3_degree + dd &&
               reduced.max3_degree + 1 <= r_a0 + r_b0 + r_c0 &&
               r_a0 <= radical(a).nat_degree() && r_b0 <= radical(b).nat_degree() &&
               r_c0 <= c0.nat_degree() && c0.nat_degree() + dd == c.nat_degree();
  } else {
    chain_ok = false;
  }
  if (chain_ok != (v.kind == VerdictKind::InequalityHolds)) {
    fail(ErrorKind::DivisibilityFailure, "gcd reduction and direct degree arithmetic disagree");
  }
  return v;
}

}  // namespace polyabc
