#include <gtest/gtest.h>

#include <numeric>

#include "polyabc/corollaries.hpp"
#include "support.hpp"

using namespace polyabc;
using test::fp;
using test::kind_of;
using test::q;

namespace {

std::optional<std::string> failed_hypothesis(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PreconditionViolated) return e.hypothesis();
  }
  return std::nullopt;
}

CatalanParams<RationalField> q_params(std::uint64_t p, std::uint64_t qq, std::uint64_t r, int u, int v, int w) {
  return {p, qq, r, Rational(u), Rational(v), Rational(w)};
}

CatalanParams<PrimeField> fp_params(std::uint32_t ch, std::uint64_t p, std::uint64_t qq, std::uint64_t r, int u,
                                    int v, int w) {
  const PrimeField f(ch);
  return {p, qq, r, f.from_int(u), f.from_int(v), f.from_int(w)};
}

}  // namespace

TEST(FltCatalan, WorkedExamples) {
  EXPECT_TRUE(flt_catalan_deriv_check(q_params(3, 3, 3, 1, 1, -2), q("1"), q("1"), q("1")));
  const auto rep = flt_catalan_check(q_params(3, 3, 3, 1, 1, -2), q("1"), q("1"), q("1"));
  EXPECT_EQ(rep.kind, ConstancyKind::AllConstant);
  EXPECT_TRUE(rep.descent_trace.empty());
  EXPECT_EQ(rep.degrees, (DegreeTriple{0, 0, 0}));

  const auto rep5 = flt_catalan_check(fp_params(5, 3, 3, 3, 1, 1, -2), fp(5, "1"), fp(5, "1"), fp(5, "1"));
  EXPECT_EQ(rep5.kind, ConstancyKind::AllConstant);

  EXPECT_EQ(failed_hypothesis([] {
              flt_catalan_check(fp_params(3, 3, 4, 5, 1, 1, 1), fp(3, "1"), fp(3, "1"), fp(3, "1"));
            }),
            "chp");
  // (2, 3, 7) satisfies the exponent condition but t, 1, 1 is no solution.
  EXPECT_EQ(failed_hypothesis([] {
              flt_catalan_check(fp_params(5, 2, 3, 7, 1, 1, 1), fp(5, "t"), fp(5, "1"), fp(5, "1"));
            }),
            "heq");
}

TEST(FltCatalan, ParameterValidation) {
  EXPECT_EQ(failed_hypothesis([] { flt_catalan_check(q_params(2, 2, 2, 1, 1, -2), q("1"), q("1"), q("1")); }),
            "hineq");
  EXPECT_EQ(failed_hypothesis([] { flt_catalan_check(q_params(0, 3, 3, 1, 1, -2), q("1"), q("1"), q("1")); }),
            "hp");
  EXPECT_EQ(failed_hypothesis([] { flt_catalan_check(q_params(3, 3, 3, 0, 1, -1), q("1"), q("1"), q("1")); }),
            "hu");
  EXPECT_EQ(failed_hypothesis([] { flt_catalan_check(q_params(3, 3, 3, 1, 1, -1), q("0"), q("1"), q("1")); }),
            "ha");
  EXPECT_EQ(failed_hypothesis([] { flt_catalan_check(q_params(3, 3, 3, 1, -1, 0), q("t"), q("t"), q("1")); }),
            "hw");
  EXPECT_EQ(failed_hypothesis([] { flt_catalan_check(q_params(3, 3, 3, 1, -1, 1), q("t"), q("t"), q("1")); }),
            "hab");
}

TEST(FltCatalan, NonconstantTriplesAreNeverSolutions) {
  // Coprime pairs (a, b) with a^3 + b^3 = c^3 for some c: the FLT search
  // hands every such pair to the checker, which must agree that all are
  // constant. Random ones over Q are also rejected as non-solutions.
  auto rng = test::rng_for(30);
  const RationalField qf;
  for (int i = 0; i < 200; ++i) {
    const auto a = random_nonzero_poly(qf, rng, 3);
    const auto b = random_nonzero_poly(qf, rng, 3);
    const auto c = random_nonzero_poly(qf, rng, 3);
    if (!is_coprime(a, b)) continue;
    const bool solution = (pow(a, 3) + pow(b, 3) - pow(c, 3)).is_zero();
    if (solution) {
      EXPECT_EQ(flt_check(3, a, b, c).kind, ConstancyKind::AllConstant);
    } else {
      EXPECT_EQ(failed_hypothesis([&] { flt_check(3, a, b, c); }), "heq");
    }
  }
}

TEST(Flt, WorkedExamples) {
  EXPECT_EQ(failed_hypothesis([] { flt_check(3, q("1"), q("0"), q("1")); }), "hb");
  EXPECT_EQ(failed_hypothesis([] { flt_check(3, fp(7, "2"), fp(7, "3"), fp(7, "0")); }), "hc");
  // 2 is not a cube mod 7, so (1, 1, c) never solves the equation.
  const PrimeField f7(7);
  for (int c = 1; c < 7; ++c) {
    EXPECT_EQ(failed_hypothesis([&] { flt_check(3, fp(7, "1"), fp(7, "1"), FpPoly(f7, {f7.from_int(c)})); }), "heq");
  }
  const auto rep = flt_check(3, fp(5, "1"), fp(5, "1"), fp(5, "3"));
  EXPECT_EQ(rep.kind, ConstancyKind::AllConstant);
  EXPECT_TRUE(rep.descent_trace.empty());
  EXPECT_EQ(failed_hypothesis([] { flt_check(3, fp(3, "1"), fp(3, "1"), fp(3, "2")); }), "chn");
  EXPECT_EQ(failed_hypothesis([] { flt_check(2, q("3"), q("4"), q("5")); }), "hn");
}

TEST(FltCatalan, InjectedInequalityVerdictIsRefuted) {
  const auto params = q_params(3, 3, 3, 1, 1, -1);
  // Every degree triple with a verdict claiming max3 < deg rad must hit the
  // contradiction, whatever numbers are injected.
  for (std::size_t da = 0; da <= 4; ++da) {
    for (std::size_t db = 0; db <= 4; ++db) {
      for (std::size_t dc = 0; dc <= 4; ++dc) {
        const std::size_t m = 3 * std::max({da, db, dc});
        for (std::size_t rad = m + 1; rad <= m + 3; ++rad) {
          MsVerdict v = bare_verdict(VerdictKind::InequalityHolds);
          v.max3_degree = m;
          v.radical_degree = rad;
          v.margin = static_cast<std::int64_t>(rad) - static_cast<std::int64_t>(m) - 1;
          EXPECT_EQ(kind_of([&] { refute_inequality_verdict(params, DegreeTriple{da, db, dc}, v); }),
                    ErrorKind::InternalInconsistency);
        }
      }
    }
  }
}

TEST(Davenport, WorkedExamples) {
  auto r = davenport_check(q("t^2"), q("t^3 + 1"));
  EXPECT_EQ(r.lhs, 4U);
  EXPECT_EQ(r.rhs, 6U);
  EXPECT_TRUE(r.holds);
  r = davenport_check(q("t^2 + 2"), q("t^3"));
  EXPECT_EQ(r.lhs, 4U);
  EXPECT_EQ(r.rhs, 8U);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(kind_of([] { davenport_check(q("t^2"), q("t^3")); }), ErrorKind::CubeEqualsSquare);
  EXPECT_EQ(failed_hypothesis([] { davenport_check(fp(5, "t^2"), fp(5, "t^3 + 1")); }), "char0");
  EXPECT_EQ(failed_hypothesis([] { davenport_check(q("3"), q("t")); }), "ha");
}

TEST(Davenport, SeededRandomPairsOverQ) {
  auto rng = test::rng_for(31);
  const RationalField qf;
  int checked = 0;
  while (checked < 1000) {
    const auto f = random_poly_exact(qf, rng, static_cast<std::size_t>(1 + rng() % 6));
    const auto g = random_poly_exact(qf, rng, static_cast<std::size_t>(1 + rng() % 6));
    if ((pow(f, 3) - pow(g, 2)).is_zero()) continue;
    ++checked;
    const auto r = davenport_check(f, g);
    const auto raw = davenport_degrees(f, g);
    ASSERT_EQ(r.lhs, raw.lhs);
    ASSERT_EQ(r.rhs, raw.rhs);
    ASSERT_TRUE(r.holds) << format_poly(f) << " , " << format_poly(g);
  }
}

TEST(Davenport, TightPair) {
  // f^3 - g^2 = 3t^2 + 8, so deg f + 2 = 2 deg(f^3 - g^2) = 4.
  const auto r = davenport_check(q("t^2 + 2"), q("t^3 + 3*t"));
  EXPECT_EQ(r.lhs, 4U);
  EXPECT_EQ(r.rhs, 4U);
  EXPECT_TRUE(r.holds);
}

TEST(DavenportPrime, WorkedExamples) {
  EXPECT_EQ(failed_hypothesis([] { davenport_prime_check(fp(2, "t^4"), fp(2, "t^6 + t")); }), "haderiv");
  const auto raw = davenport_degrees(fp(2, "t^4"), fp(2, "t^6 + t"));
  EXPECT_EQ(raw.lhs, 6U);
  EXPECT_EQ(raw.rhs, 4U);
  EXPECT_FALSE(raw.holds);
  EXPECT_EQ(pow(fp(2, "t^4"), 3) - pow(fp(2, "t^6 + t"), 2), fp(2, "t^2"));

  const auto r = davenport_prime_check(q("t^2 + 2"), q("t^3"));
  EXPECT_EQ(r.lhs, 4U);
  EXPECT_EQ(r.rhs, 8U);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(failed_hypothesis([] { davenport_prime_check(q("t^2 + t"), q("t^3 + t")); }), "hab");
  EXPECT_EQ(failed_hypothesis([] { davenport_prime_check(fp(3, "t^2 + 1"), fp(3, "t^3 + 1")); }), "hbderiv");
}

TEST(DavenportPrime, HoldsOnCoprimePairsEveryCharacteristic) {
  auto rng = test::rng_for(33);
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    const PrimeField field(p);
    int checked = 0;
    while (checked < 200) {
      const auto f = random_nonzero_poly(field, rng, 5);
      const auto g = random_nonzero_poly(field, rng, 5);
      if (derivative(f).is_zero() || derivative(g).is_zero() || !is_coprime(f, g)) continue;
      ++checked;
      const auto r = davenport_prime_check(f, g);
      ASSERT_TRUE(r.holds);
      ASSERT_EQ(r.lhs, f.nat_degree() + 2);
    }
  }
}

TEST(AssociatedPow, WorkedExamples) {
  EXPECT_EQ(associated_pow_witness(q("t^2"), q("t^3"), 3, 2), q("t"));
  EXPECT_EQ(associated_pow_witness(q("2*(t+1)^2"), q("(t+1)^3"), 3, 2), q("t + 1"));
  EXPECT_EQ(kind_of([] { associated_pow_witness(q("t"), q("t"), 2, 3); }), ErrorKind::NotAssociated);
  EXPECT_EQ(kind_of([] { associated_pow_witness(q("t^2"), q("t^2"), 2, 2); }), ErrorKind::ExponentsNotCoprime);
  EXPECT_EQ(associated_pow_witness(q("5"), q("7"), 3, 2), q("1"));
}

template <class F>
void associated_battery(const F& field, std::mt19937_64& rng, int count) {
  const std::array<std::pair<std::uint64_t, std::uint64_t>, 9> exps{
      {{1, 1}, {1, 2}, {2, 3}, {3, 2}, {2, 5}, {5, 3}, {3, 4}, {4, 5}, {5, 1}}};
  for (int i = 0; i < count; ++i) {
    const auto c = random_nonzero_poly(field, rng, 3);
    const auto [m, n] = exps[rng() % exps.size()];
    ASSERT_EQ(std::gcd(m, n), 1U);
    const auto a = pow(c, n) * detail::random_nonzero_coeff(field, rng);
    const auto b = pow(c, m) * detail::random_nonzero_coeff(field, rng);
    const auto w = associated_pow_witness(a, b, m, n);
    ASSERT_EQ(monic(pow(w, n)), monic(a));
    ASSERT_EQ(monic(pow(w, m)), monic(b));
    ASSERT_EQ(w, monic(c));
  }
}

TEST(AssociatedPow, ConstructedInstances) {
  auto rng = test::rng_for(34);
  associated_battery(RationalField{}, rng, 200);
  for (std::uint32_t p : {2U, 3U, 5U}) associated_battery(PrimeField(p), rng, 100);
}

TEST(RatFunc, CanonicalForm) {
  const RatFunc<RationalField> x(q("2*t^2 - 2"), q("3*t + 3"));
  EXPECT_EQ(x.num(), q("2/3*t - 2/3"));
  EXPECT_EQ(x.den(), q("1"));
  const RatFunc<RationalField> y(q("t"), q("-2*t^2"));
  EXPECT_EQ(y.num(), q("-1/2"));
  EXPECT_EQ(y.den(), q("t"));
  EXPECT_EQ(kind_of([] { RatFunc<RationalField>(q("1"), q("0")); }), ErrorKind::DivisionByZero);
  const RatFunc<RationalField> zero(q("0"), q("t^2 + 1"));
  EXPECT_EQ(zero.den(), q("1"));
}

template <class F>
void check_canonical(const RatFunc<F>& x) {
  ASSERT_TRUE(is_coprime(x.num(), x.den()));
  ASSERT_EQ(x.den().leading(), x.den().field().one());
}

template <class F>
void ratfunc_battery(const F& field, std::mt19937_64& rng) {
  for (int i = 0; i < 300; ++i) {
    const RatFunc<F> x(random_poly(field, rng, 4), random_nonzero_poly(field, rng, 4));
    const RatFunc<F> y(random_poly(field, rng, 4), random_nonzero_poly(field, rng, 4));
    check_canonical(x);
    check_canonical(y);
    check_canonical(x + y);
    check_canonical(x - y);
    check_canonical(x * y);
    check_canonical(pow(x, 3));
    if (!y.num().is_zero()) {
      check_canonical(x / y);
      ASSERT_EQ((x / y) * y, x);
    }
    ASSERT_EQ((x + y) - y, x);
    ASSERT_EQ(x * (y + y), x * y + x * y);
  }
}

TEST(RatFunc, CanonicalAfterArithmetic) {
  auto rng = test::rng_for(35);
  ratfunc_battery(RationalField{}, rng);
  for (std::uint32_t p : {2U, 5U}) ratfunc_battery(PrimeField(p), rng);
}

TEST(Elliptic, WorkedExamples) {
  using R = RatFunc<RationalField>;
  auto rep = elliptic_parametrization_check(R(q("2")), R(q("3")));
  EXPECT_EQ(rep.kind, ConstancyKind::AllConstant);
  EXPECT_EQ(elliptic_parametrization_check(R(q("0")), R(q("1"))).kind, ConstancyKind::AllConstant);
  EXPECT_EQ(elliptic_parametrization_check(R(q("-1")), R(q("0"))).kind, ConstancyKind::AllConstant);
  EXPECT_EQ(failed_hypothesis([] { elliptic_parametrization_check(R(q("t")), R(q("t + 1"))); }), "eqn");
  using R5 = RatFunc<PrimeField>;
  EXPECT_EQ(failed_hypothesis([] { elliptic_parametrization_check(R5(fp(3, "1")), R5(fp(3, "1"))); }), "chk");
  // Over F_7: 2^3 + 1 = 9 = 3^2.
  EXPECT_EQ(elliptic_parametrization_check(R5(fp(7, "2")), R5(fp(7, "3"))).kind, ConstancyKind::AllConstant);
}

TEST(Elliptic, ConstantRationalPoints) {
  // (x, y) = (a/b, c/d) constants over Q: 2^3 + 1 = 3^2 and (-1, 0), (0, +-1).
  using R = RatFunc<RationalField>;
  for (const auto& [x, y] : std::vector<std::pair<const char*, const char*>>{
           {"2", "-3"}, {"0", "-1"}, {"-1", "0"}, {"2", "3"}}) {
    EXPECT_EQ(elliptic_parametrization_check(R(q(x)), R(q(y))).kind, ConstancyKind::AllConstant) << x << "," << y;
  }
}

TEST(Elliptic, CubicPlusOneIsNotASquare) {
  // t^3 + 1 = (t + 1)(t^2 - t + 1) has odd multiplicities, so no y in Q(t)
  // squares to it.
  const auto d = squarefree_decompose(q("t^3 + 1"));
  bool odd = false;
  for (const auto& part : d.parts) odd = odd || part.multiplicity % 2 == 1;
  EXPECT_TRUE(odd);

  using R = RatFunc<PrimeField>;
  const PrimeField f5(5);
  const auto nums = enumerate_polys(f5.desc(), 2);
  const auto dens = enumerate_polys(f5.desc(), 1);
  int rejected = 0;
  for (const auto& n : nums) {
    for (const auto& den : dens) {
      const R y(n, den);
      EXPECT_EQ(failed_hypothesis([&] { elliptic_parametrization_check(R(fp(5, "t")), y); }), "eqn");
      ++rejected;
    }
  }
  EXPECT_EQ(rejected, static_cast<int>(nums.size() * dens.size()));
}

TEST(Elliptic, RandomCandidatesRejected) {
  using R = RatFunc<RationalField>;
  const RationalField qf;
  auto rng = test::rng_for(36);
  for (int i = 0; i < 200; ++i) {
    const R x(random_poly_exact(qf, rng, 1 + rng() % 3), random_nonzero_poly(qf, rng, 2));
    const R y(random_poly(qf, rng, 3), random_nonzero_poly(qf, rng, 2));
    if (x.is_constant()) continue;
    EXPECT_EQ(failed_hypothesis([&] { elliptic_parametrization_check(x, y); }), "eqn");
  }
}
