#include <gtest/gtest.h>

#include "polyabc/exact_field.hpp"
#include "support.hpp"

using namespace polyabc;
using test::kind_of;

TEST(FieldDesc, MakeValidatesPrimality) {
  const auto f5 = FieldDesc::make(FieldKind::PrimeField, 5);
  EXPECT_TRUE(f5.is_finite());
  EXPECT_EQ(f5.modulus(), 5U);
  EXPECT_EQ(kind_of([] { FieldDesc::make(FieldKind::PrimeField, 6); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { FieldDesc::make(FieldKind::PrimeField, 1); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { FieldDesc::make(FieldKind::PrimeField, kMaxModulus + 2); }), ErrorKind::NotPrime);
  const auto q = FieldDesc::make(FieldKind::Rationals);
  EXPECT_FALSE(q.is_finite());
  EXPECT_EQ(characteristic(q), 0U);
}

TEST(FieldDesc, Characteristic) {
  EXPECT_EQ(characteristic(FieldDesc::rationals()), 0U);
  EXPECT_EQ(characteristic(FieldDesc::prime_field(7)), 7U);
  EXPECT_EQ(characteristic(FieldDesc::prime_field(2)), 2U);
  EXPECT_EQ(characteristic(FieldDesc::prime_field(kMaxModulus)), kMaxModulus);
}

TEST(FieldDesc, ParseSpelling) {
  EXPECT_EQ(FieldDesc::parse("q"), FieldDesc::rationals());
  EXPECT_EQ(FieldDesc::parse("fp:5"), FieldDesc::prime_field(5));
  EXPECT_EQ(kind_of([] { FieldDesc::parse("fp:"); }), ErrorKind::ConfigError);
  EXPECT_EQ(kind_of([] { FieldDesc::parse("gf:5"); }), ErrorKind::ConfigError);
  EXPECT_EQ(kind_of([] { FieldDesc::parse("fp:9"); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { FieldDesc::parse("fp:99999999999999999999"); }), ErrorKind::ConfigError);
}

TEST(IsPrime, AgreesWithSieve) {
  std::vector<bool> composite(2000, false);
  for (std::size_t i = 2; i < composite.size(); ++i) {
    if (composite[i]) continue;
    for (std::size_t j = i * i; j < composite.size(); j += i) composite[j] = true;
  }
  for (std::uint64_t n = 2; n < composite.size(); ++n) EXPECT_EQ(is_prime(n), !composite[n]) << n;
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
}

TEST(FieldArithmetic, WorkedExamples) {
  const RationalField q;
  EXPECT_EQ(field_arithmetic(q, ArithOp::Add, Rational(1, 2), Rational(1, 3)), Rational(5, 6));
  const PrimeField f5(5);
  EXPECT_EQ(field_arithmetic(f5, ArithOp::Inv, f5.from_int(2)).value(), 3U);
  EXPECT_EQ(kind_of([&] { field_arithmetic(f5, ArithOp::Div, f5.one(), f5.zero()); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(kind_of([&] { field_arithmetic(q, ArithOp::Inv, q.zero()); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(field_arithmetic(f5, ArithOp::Neg, f5.from_int(2)).value(), 3U);
  EXPECT_EQ(field_arithmetic(f5, ArithOp::Sub, f5.from_int(1), f5.from_int(3)).value(), 3U);
}

TEST(FieldArithmetic, MixedModuliRejected) {
  const PrimeField f5(5), f7(7);
  EXPECT_EQ(kind_of([&] { (void)(f5.one() + f7.one()); }), ErrorKind::FieldMismatch);
}

TEST(FieldArithmetic, InverseExhaustiveSmallPrimes) {
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 13U}) {
    const PrimeField f(p);
    for (std::uint32_t x = 1; x < p; ++x) {
      const Fp e = f.from_int(x);
      EXPECT_EQ(e.inverse() * e, f.one()) << "p=" << p << " x=" << x;
      // Fermat: x^(p-2) is the inverse; independent of the extended Euclid path.
      EXPECT_EQ(field_pow(f, e, p - 2), e.inverse());
    }
  }
}

TEST(FieldArithmetic, LargeModulusNoOverflow) {
  const PrimeField f(static_cast<std::uint32_t>(kMaxModulus));
  const Fp a = f.from_int(kMaxModulus - 1);  // -1
  EXPECT_EQ(a * a, f.one());
  EXPECT_EQ(a + a, f.from_int(-2));
  EXPECT_EQ(a.inverse(), a);
}

template <class F>
void check_axioms(const F& field, std::mt19937_64& rng) {
  auto draw = [&] {
    if constexpr (std::is_same_v<F, RationalField>) {
      const auto num = static_cast<std::int64_t>(rng() % 2001) - 1000;
      const auto den = static_cast<std::int64_t>(rng() % 999) + 1;
      return field.from_fraction(num, den);
    } else {
      return field.from_int(static_cast<std::int64_t>(rng() % field.modulus()));
    }
  };
  for (int i = 0; i < 1000; ++i) {
    const auto x = draw(), y = draw(), z = draw();
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x - x, field.zero());
    if (!F::is_zero(y)) {
      ASSERT_EQ(field.div(x, y) * y, x);
    }
    if constexpr (std::is_same_v<F, RationalField>) {
      const Rational s = x * y + z;
      ASSERT_EQ(boost::multiprecision::gcd(numerator(s), denominator(s)) == 1 || numerator(s) == 0, true);
      ASSERT_GT(denominator(s), 0);
    } else {
      ASSERT_LT((x * y + z).value(), field.modulus());
    }
  }
}

TEST(FieldArithmetic, RandomAxiomsPerField) {
  auto rng = test::rng_for(1);
  check_axioms(RationalField{}, rng);
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 65521U}) check_axioms(PrimeField(p), rng);
}

TEST(FieldArithmetic, RationalCanonicalForm) {
  const RationalField q;
  const Rational x = q.from_fraction(6, -4);
  EXPECT_EQ(numerator(x), -3);
  EXPECT_EQ(denominator(x), 2);
}

TEST(NthRoot, PrimeAndRational) {
  const PrimeField f7(7);
  EXPECT_FALSE(nth_root(f7, f7.from_int(2), 3).has_value());  // cubes mod 7 are {0, 1, 6}
  EXPECT_TRUE(nth_root(f7, f7.from_int(6), 3).has_value());
  const PrimeField f5(5);
  const auto r = nth_root(f5, f5.from_int(2), 3);
  ASSERT_TRUE(r);
  EXPECT_EQ(field_pow(f5, *r, 3), f5.from_int(2));
  const RationalField q;
  EXPECT_EQ(nth_root(q, Rational(-8, 27), 3), Rational(-2, 3));
  EXPECT_FALSE(nth_root(q, Rational(2), 2).has_value());
  EXPECT_FALSE(nth_root(q, Rational(-4), 2).has_value());
}
