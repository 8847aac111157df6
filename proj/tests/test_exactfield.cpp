#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "a1deg/function_field.hpp"
#include "a1deg/scalar.hpp"
#include "test_support.hpp"

using namespace a1deg;
using a1deg::testing::hilbert_oracle;

namespace {

using Q = Scalar<Rationals>;
using Fp = Scalar<PrimeField>;
using FpT = Scalar<RationalFunctionsFp>;

Q q(long n, long d = 1) { return Q(Rationals{}, mpq_class(n, d)); }


}  // namespace

TEST(ExactField, RationalArithmetic) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ(q(1, 2) / q(-1, 4), q(-2));
  EXPECT_THROW(q(1) / q(0), Error);
}

TEST(ExactField, PrimeFieldArithmetic) {
  PrimeField f7(7);
  EXPECT_EQ(Fp(f7, 3) * Fp(f7, 5), Fp(f7, 1));
  EXPECT_EQ(Fp(f7, 2) - Fp(f7, 5), Fp(f7, 4));
  EXPECT_EQ(Fp::from_int(f7, -1), Fp(f7, 6));
}

TEST(ExactField, FieldMismatchIsRejected) {
  try {
    (void)(Fp(PrimeField(7), 1) + Fp(PrimeField(5), 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
}

TEST(ExactField, CharacteristicTwoRejected) {
  EXPECT_THROW(PrimeField(2), Error);
  EXPECT_THROW(PrimeField(9), Error);
}

TEST(ExactField, FunctionFieldInversePair) {
  RationalFunctionsFp k{PrimeField(5)};
  auto t = k.parameter();
  auto t1 = k.add(t, k.one());
  FpT a(k, k.div(t, t1)), b(k, k.div(t1, t));
  EXPECT_EQ(a * b, FpT(k, k.one()));
  EXPECT_EQ(k.format(a.value()), "t/(t+1)");
}

TEST(ExactField, FunctionFieldCanonicalForm) {
  RationalFunctionsQ k{Rationals{}};
  auto t = k.parameter();
  // (t^2 - 1)/(2t - 2) reduces to (t + 1)/2 with a monic (constant) denominator.
  auto num = k.sub(k.mul(t, t), k.one());
  auto den = k.sub(k.mul(k.from_int(2), t), k.from_int(2));
  auto r = k.div(num, den);
  EXPECT_EQ(r.den.size(), 1u);
  EXPECT_TRUE(k.equal(r, k.div(k.add(t, k.one()), k.from_int(2))));
}

TEST(ExactField, SquaresModSeven) {
  PrimeField f7(7);
  std::set<std::uint64_t> squares;
  for (std::uint64_t x = 1; x < 7; ++x) squares.insert(x * x % 7);
  for (std::uint64_t a = 1; a < 7; ++a) {
    auto w = is_square(Fp(f7, a));
    EXPECT_EQ(w.has_value(), squares.count(a) == 1) << a;
    if (w) {
      EXPECT_EQ(*w * *w, Fp(f7, a));
    }
  }
  EXPECT_EQ(is_square(Fp(f7, 2))->value(), 3u);
}

TEST(ExactField, SquareTests) {
  EXPECT_FALSE(is_square(q(-4)));
  EXPECT_EQ(*is_square(q(9, 4)), q(3, 2));
  EXPECT_THROW(is_square(q(0)), Error);
  RationalFunctionsFp k{PrimeField(5)};
  EXPECT_FALSE(is_square(FpT(k, k.parameter())));
  auto t2 = k.add(k.parameter(), k.one());
  EXPECT_TRUE(is_square(FpT(k, k.mul(t2, t2))));
  // Leading coefficient 2 is a nonsquare in F5.
  EXPECT_FALSE(is_square(FpT(k, k.from_int(2))));
}

TEST(ExactField, RandomSquaresHaveWitnesses) {
  std::mt19937_64 rng(11);
  PrimeField f(1000003);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int i = 0; i < 10000; ++i) {
    long n = dist(rng), d = dist(rng);
    if (n == 0 || d == 0) continue;
    Q a = q(n, d);
    auto w = is_square(a * a);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(*w * *w, a * a);
    Fp b(f, f.from_int(n));
    auto wb = is_square(b * b);
    ASSERT_TRUE(wb.has_value());
    EXPECT_EQ(*wb * *wb, b * b);
  }
}

TEST(ExactField, FieldAxiomsSpotCheck) {
  std::mt19937_64 rng(5);
  RationalFunctionsFp k{PrimeField(7)};
  std::uniform_int_distribution<long> c(0, 6);
  auto rnd = [&] {
    univariate::Poly<PrimeField> n{static_cast<std::uint64_t>(c(rng)), static_cast<std::uint64_t>(c(rng))};
    univariate::Poly<PrimeField> d{static_cast<std::uint64_t>(c(rng)), 1};
    return k.make(n, d);
  };
  for (int i = 0; i < 300; ++i) {
    auto a = rnd(), b = rnd(), d = rnd();
    EXPECT_TRUE(k.equal(k.mul(k.add(a, b), d), k.add(k.mul(a, d), k.mul(b, d))));
    EXPECT_TRUE(k.equal(k.mul(k.mul(a, b), d), k.mul(a, k.mul(b, d))));
    if (!k.is_zero(a)) {
      EXPECT_TRUE(k.is_one(k.mul(a, k.inv(a))));
    }
  }
}

TEST(ExactField, SignatureSign) {
  EXPECT_EQ(signature_sign(q(-3, 7)), -1);
  EXPECT_EQ(signature_sign(q(5)), 1);
  RationalFunctionsQ k{Rationals{}};
  auto t = k.parameter();
  auto v = k.div(k.add(k.mul(k.from_int(-2), t), k.from_int(9)), t);
  EXPECT_EQ(signature_sign(Scalar<RationalFunctionsQ>(k, v)), -1);
  // Oracle: exact evaluation at a large t.
  mpq_class big(1000000);
  EXPECT_LT((-2 * big + 9) / big, 0);
  EXPECT_THROW(signature_sign(Fp(PrimeField(7), 3)), Error);
}

TEST(ExactField, SquareClassRepresentatives) {
  Rationals qq;
  EXPECT_EQ(qq.square_class(mpq_class(12)), 3);
  EXPECT_EQ(qq.square_class(mpq_class(-8, 9)), -2);
  EXPECT_EQ(qq.square_class(mpq_class(1, 2)), 2);
  RationalFunctionsFp k{PrimeField(5)};
  auto t = k.parameter();
  // t^3 (t+1)^2 * 4 has square class t.
  auto t1 = k.add(t, k.one());
  auto v = k.mul(k.from_int(4), k.mul(k.mul(t, k.mul(t, t)), k.mul(t1, t1)));
  EXPECT_TRUE(k.equal(k.square_class(v), t));
  // 2 t^2 has square class 2 (nonsquare in F5).
  EXPECT_TRUE(k.equal(k.square_class(k.mul(k.from_int(2), k.mul(t, t))), k.from_int(2)));
  // t^5 + ... : odd kernel across a p-th power, t^10 is a square.
  auto t5 = k.mul(t, k.mul(k.mul(t, t), k.mul(t, t)));
  EXPECT_TRUE(k.equal(k.square_class(k.mul(t5, t5)), k.one()));
  EXPECT_TRUE(k.equal(k.square_class(t5), t));
}

TEST(ExactField, HilbertSymbolMatchesBruteForce) {
  const std::vector<long> units = {-15, -14, -10, -7, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10, 14, 15};
  for (long p : {0L, 2L, 3L, 5L, 7L}) {
    for (long a : units)
      for (long b : units)
        EXPECT_EQ(integer::hilbert_symbol(a, b, p), hilbert_oracle(a, b, p)) << a << "," << b << " at " << p;
  }
}

TEST(ExactField, HilbertReciprocity) {
  for (long a : {-6, -3, 2, 5, 10, 21, -35})
    for (long b : {-7, -2, 3, 6, 11, -15}) {
      std::set<long> places = {0, 2};
      for (long x : {a, b}) {
        auto divisors = integer::prime_divisors(x);
        ASSERT_TRUE(divisors.has_value());
        for (const auto& p : *divisors) places.insert(p.get_si());
      }
      int prod = 1;
      for (long p : places) prod *= integer::hilbert_symbol(a, b, p);
      EXPECT_EQ(prod, 1) << a << "," << b;
    }
}

TEST(ExactField, FactorizationWithinEffort) {
  mpz_class p, q;
  mpz_nextprime(p.get_mpz_t(), mpz_class("1000000000000000000000000").get_mpz_t());
  mpz_nextprime(q.get_mpz_t(), mpz_class("3000000000000000000000000").get_mpz_t());
  auto full = integer::factorization(12 * p);
  EXPECT_TRUE(full.complete());
  EXPECT_EQ(full.primes[2], 2u);
  EXPECT_EQ(full.primes[p], 1u);

  // Two 25-digit primes are out of reach for a tiny effort bound.
  const mpz_class n = 45 * p * q;
  auto partial = integer::factorization(n, 1000);
  EXPECT_FALSE(partial.complete());
  EXPECT_EQ(partial.cofactor, p * q);
  EXPECT_EQ(partial.primes[3], 2u);
  EXPECT_EQ(partial.primes[5], 1u);
  // With the default bound, Pollard-Brent also fails here; the square class
  // keeps the cofactor and remains a valid representative.
  auto s = integer::squarefree_part(-n * 49);
  EXPECT_TRUE(mpz_perfect_square_p(mpz_class(s * -n * 49).get_mpz_t()));
  EXPECT_FALSE(integer::prime_divisors(n).has_value());
}
