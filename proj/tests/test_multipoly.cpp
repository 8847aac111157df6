#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace a1deg;
using namespace a1deg::testing;

TEST(MultiPoly, Arithmetic) {
  auto R = make_ring(Rationals{}, {"x1", "x2"});
  auto x1 = Poly<Rationals>::variable(R, 0), x2 = Poly<Rationals>::variable(R, 1);
  auto s = (x1 + x2) * (x1 + x2);
  EXPECT_EQ(s, x1 * x1 + x1 * x2 + x1 * x2 + x2 * x2);
  EXPECT_EQ(s.to_string(), "x1^2 + 2*x1*x2 + x2^2");
  auto one = Poly<Rationals>::constant(R, 1L);
  EXPECT_EQ(((x1 - one) * (x1 + one)).to_string(), "x1^2 - 1");
}

TEST(MultiPoly, FrobeniusOverF3) {
  auto R = make_ring(PrimeField(3), {"x"});
  auto x = Poly<PrimeField>::variable(R, 0);
  auto one = Poly<PrimeField>::constant(R, 1L);
  EXPECT_EQ((x + one).pow(3), x.pow(3) + one);
}

TEST(MultiPoly, RingMismatch) {
  auto R = make_ring(Rationals{}, {"x"});
  auto S = make_ring(Rationals{}, {"y"});
  try {
    (void)(Poly<Rationals>::variable(R, 0) + Poly<Rationals>::variable(S, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingMismatch);
  }
}

TEST(MultiPoly, SubstituteIntoDoubledRing) {
  auto R = make_ring(Rationals{}, {"x1", "x2"});
  auto D = make_ring(Rationals{}, {"X1", "X2", "Y1", "Y2"});
  auto f = Poly<Rationals>::variable(R, 0) * Poly<Rationals>::variable(R, 1);
  auto X = [&](std::size_t i) { return Poly<Rationals>::variable(D, i); };
  EXPECT_EQ(substitute(f, std::vector{X(2), X(1)}, D).to_string(), "X2*Y1");
  auto g = Poly<Rationals>::variable(R, 0) + Poly<Rationals>::variable(R, 1);
  EXPECT_EQ(substitute(g, std::vector{X(0), X(3)}, D), X(0) + X(3));
  EXPECT_EQ(substitute(f, std::vector{Poly<Rationals>::variable(R, 0), Poly<Rationals>::variable(R, 1)}, R), f);
  try {
    (void)substitute(f, std::map<std::string, Poly<Rationals>>{{"x1", X(0)}}, D);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingAssignment);
  }
}

TEST(MultiPoly, ExactDivide) {
  auto R = make_ring(Rationals{}, {"X", "Y"});
  auto X = Poly<Rationals>::variable(R, 0), Y = Poly<Rationals>::variable(R, 1);
  EXPECT_EQ(exact_divide(X * X - Y * Y, X - Y), X + Y);
  EXPECT_EQ(exact_divide(X.pow(3) - Y.pow(3), X - Y), X * X + X * Y + Y * Y);
  EXPECT_TRUE(exact_divide(Poly<Rationals>(R), X - Y).is_zero());
  try {
    (void)exact_divide(X * X + Y, X - Y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InexactDivision);
  }
}

TEST(MultiPoly, MonomialOrders) {
  Monomial a{2, 0, 0}, b{0, 1, 1}, c{1, 1, 0};
  auto grevlex = MonomialOrder::degrevlex();
  EXPECT_GT(grevlex.compare(a, b), 0);
  EXPECT_GT(grevlex.compare(c, b), 0);
  auto lex = MonomialOrder::lex();
  EXPECT_GT(lex.compare(Monomial{1, 0, 0}, Monomial{0, 5, 5}), 0);
  auto elim = MonomialOrder::elimination(1);
  EXPECT_GT(elim.compare(Monomial{0, 0, 1}, Monomial{5, 5, 0}), 0);
}

TEST(MultiPoly, RandomRingLaws) {
  auto R = make_ring(PrimeField(7), {"x", "y", "z"});
  auto D = make_ring(PrimeField(7), {"a", "b"});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(R, rng, 3, 4), g = random_poly(R, rng, 3, 4), h = random_poly(R, rng, 2, 4);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    if (!g.is_zero()) {
      EXPECT_EQ(exact_divide(f * g, g), f);
    }
    std::vector<Poly<PrimeField>> images = {random_poly(D, rng, 2, 3), random_poly(D, rng, 2, 3),
                                            random_poly(D, rng, 1, 3)};
    EXPECT_EQ(substitute(f * g, images, D), substitute(f, images, D) * substitute(g, images, D));
  }
}
