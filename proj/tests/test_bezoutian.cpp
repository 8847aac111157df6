#include <gtest/gtest.h>

#include "a1deg/bezoutian.hpp"
#include "a1deg/gw.hpp"
#include "test_support.hpp"

using namespace a1deg;
using namespace a1deg::testing;

namespace {

using PQ = Poly<Rationals>;

template <ExactField K>
std::vector<Poly<K>> vars(const RingPtr<K>& R) {
  std::vector<Poly<K>> v;
  for (std::size_t i = 0; i < R->arity(); ++i) v.push_back(Poly<K>::variable(R, i));
  return v;
}

std::string str(const Matrix<Rationals>& m) { return m.to_string(); }

}  // namespace

TEST(Bezoutian, DeltaMatrixHyperbolicExample) {
  auto R = make_ring(Rationals{}, {"x1", "x2"});
  auto x = vars(R);
  auto d = delta_matrix<Rationals>({x[0] * x[1], x[0] + x[1]});
  EXPECT_EQ(d.at(0, 0).to_string(), "X2");
  EXPECT_EQ(d.at(0, 1).to_string(), "Y1");
  EXPECT_EQ(d.at(1, 0).to_string(), "1");
  EXPECT_EQ(d.at(1, 1).to_string(), "1");
}

TEST(Bezoutian, DeltaMatrixDiagonalExample) {
  auto R = make_ring(Rationals{}, {"x1", "x2", "x3"});
  auto x = vars(R);
  auto d = delta_matrix<Rationals>({x[0] * x[0], x[1] * x[1], x[2] * x[2]});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) {
        auto expect = "X" + std::to_string(i + 1) + " + Y" + std::to_string(i + 1);
        EXPECT_EQ(d.at(i, j).to_string(), expect);
      } else {
        EXPECT_TRUE(d.at(i, j).is_zero());
      }
    }
  auto R1 = make_ring(Rationals{}, {"x"});
  EXPECT_EQ(delta_matrix<Rationals>({PQ::variable(R1, 0)}).at(0, 0).to_string(), "1");
}

TEST(Bezoutian, TelescopingIdentity) {
  auto R = make_ring(PrimeField(7), {"x", "y", "z"});
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly<PrimeField>> f;
    for (int i = 0; i < 3; ++i) f.push_back(random_poly(R, rng, 3, 5));
    auto d = delta_matrix(f);
    for (std::size_t i = 0; i < 3; ++i) {
      Poly<PrimeField> sum(d.ring);
      for (std::size_t j = 0; j < 3; ++j)
        sum += d.at(i, j) * (Poly<PrimeField>::variable(d.ring, j) - Poly<PrimeField>::variable(d.ring, 3 + j));
      EXPECT_EQ(sum, detail::to_side(f[i], d.ring, 0) - detail::to_side(f[i], d.ring, 1));
    }
  }
}

TEST(Bezoutian, ReducedBezoutianExamples) {
  auto R = make_ring(Rationals{}, {"x1", "x2"});
  auto x = vars(R);
  EXPECT_EQ(bezoutian<Rationals>({x[0] * x[1], x[0] + x[1]}).to_string(), "X2 + Y2");
  auto R1 = make_ring(Rationals{}, {"x"});
  auto y = PQ::variable(R1, 0);
  EXPECT_EQ(bezoutian<Rationals>({y * y}).to_string(), "X1 + Y1");
}

TEST(Bezoutian, InseparableExampleOverFunctionField) {
  for (std::uint64_t p : {3u, 5u}) {
    RationalFunctionsFp k{PrimeField(p)};
    auto R = make_ring(k, {"x1", "x2"});
    auto x = vars(R);
    auto t = Poly<RationalFunctionsFp>::constant(R, k.parameter());
    std::vector<Poly<RationalFunctionsFp>> f = {x[0].pow(static_cast<unsigned>(p)) - t, x[0] * x[1]};
    auto bez = bezoutian(f);
    // X1^{p-1} Y1 + ... + X1 Y1^{p-1} + t
    auto D = bez.ring();
    Poly<RationalFunctionsFp> expect = Poly<RationalFunctionsFp>::constant(D, k.parameter());
    for (unsigned i = 1; i < p; ++i)
      expect += Poly<RationalFunctionsFp>::variable(D, 0).pow(i) * Poly<RationalFunctionsFp>::variable(D, 2).pow(static_cast<unsigned>(p) - i);
    EXPECT_EQ(bez, expect) << bez.to_string();
  }
}

TEST(Bezoutian, GramMatricesOfGoldenExamples) {
  auto R = make_ring(Rationals{}, {"x1", "x2"});
  auto x = vars(R);
  std::vector<PQ> f = {x[0] * x[1], x[0] + x[1]};
  EXPECT_EQ(str(gram_matrix(f)), "[0, 1]\n[1, 0]\n");

  auto R3 = make_ring(Rationals{}, {"x1", "x2", "x3"});
  auto y = vars(R3);
  auto B = gram_matrix<Rationals>({y[0] * y[0], y[1] * y[1], y[2] * y[2]});
  ASSERT_EQ(B.rows(), 8u);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(B.at(i, j), i + j == 7 ? 1 : 0) << i << "," << j;
}

TEST(Bezoutian, LocalGlobalExampleTable) {
  // a = 1, b = 2: every entry is 0, ±a or ±b.
  auto R = make_ring(Rationals{}, {"x1", "x2"});
  auto x = vars(R);
  auto one = PQ::constant(R, 1L), two = PQ::constant(R, 2L);
  std::vector<PQ> f = {(x[0] - one) * x[0] * x[1], x[0] * x[0] - two * x[1] * x[1]};
  auto B = gram_matrix(f);
  ASSERT_EQ(B.rows(), 6u);
  EXPECT_TRUE(B.is_symmetric());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      auto v = abs(B.at(i, j));
      EXPECT_TRUE(v == 0 || v == 1 || v == 2) << B.to_string();
    }
}

TEST(Bezoutian, TensorRouteMatchesPlainRoute) {
  auto R = make_ring(PrimeField(7), {"x", "y"});
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 15; ++trial) {
    std::vector<Poly<PrimeField>> f = {random_poly(R, rng, 3, 4), random_poly(R, rng, 3, 4)};
    auto gb = buchberger(f);
    if (gb.is_unit_ideal() || !is_zero_dimensional(gb)) continue;
    auto basis = quotient_basis(gb);
    auto plain = gram_matrix(bezoutian(f, gb), basis, basis);
    auto tensor = bezoutian_gram(delta_matrix(f), QuotientAlgebra<PrimeField>(gb));
    EXPECT_EQ(plain, tensor);
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(Bezoutian, BareissMatchesCofactor) {
  auto R = make_ring(PrimeField(7), {"x", "y"});
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    PolyMatrix<PrimeField> m(5);
    for (auto& row : m)
      for (int j = 0; j < 5; ++j) row.push_back(random_poly(R, rng, 2, 2));
    EXPECT_EQ(bareiss_determinant(m, R), cofactor_determinant(m, R));
  }
}

TEST(Bezoutian, JacobianImages) {
  auto R = make_ring(Rationals{}, {"x1", "x2"});
  auto x = vars(R);
  auto four = PQ::constant(R, 4L), two = PQ::constant(R, 2L);
  EXPECT_EQ(jacobian_image<Rationals>({x[0] * x[0], x[1] * x[1]}), four * x[0] * x[1]);
  EXPECT_EQ(jacobian_image<Rationals>({x[0] * x[1], x[0] + x[1]}), two * x[1]);
  auto R1 = make_ring(Rationals{}, {"x"});
  EXPECT_EQ(jacobian_image<Rationals>({PQ::variable(R1, 0)}), PQ::constant(R1, 1L));
}

TEST(Bezoutian, DiagonalSpecializationIsJacobian) {
  auto R = make_ring(PrimeField(7), {"x", "y"});
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 15; ++trial) {
    std::vector<Poly<PrimeField>> f = {random_poly(R, rng, 3, 4), random_poly(R, rng, 3, 4)};
    auto gb = buchberger(f);
    if (gb.is_unit_ideal() || !is_zero_dimensional(gb)) continue;
    auto d = delta_matrix(f);
    auto det = determinant(d.entries, d.ring);
    std::vector<Poly<PrimeField>> diag = {Poly<PrimeField>::variable(R, 0), Poly<PrimeField>::variable(R, 1),
                                          Poly<PrimeField>::variable(R, 0), Poly<PrimeField>::variable(R, 1)};
    EXPECT_EQ(normal_form(substitute(det, diag, R), gb), jacobian_image(f));
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(Bezoutian, UnexpectedMonomialIsReported) {
  auto R = make_ring(Rationals{}, {"x"});
  auto gb = buchberger<Rationals>({PQ::variable(R, 0).pow(2)});
  auto basis = quotient_basis(gb);
  auto D = doubled_ring(Rationals{}, 1);
  auto bad = PQ::variable(D, 0).pow(2);
  try {
    (void)gram_matrix(bad, basis, basis);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnexpectedMonomial);
  }
}
