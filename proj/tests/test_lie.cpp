#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ybe/ybe.hpp"

using namespace ybe;
using gens::e;
using gens::var;
using gens::wedge;

namespace {

GlElement random_gl(std::mt19937& rng) {
  std::uniform_int_distribution<int> v(-2, 2);
  GlElement g(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) g(i, j) = ParamPoly(v(rng));
  return g;
}

}  // namespace

TEST(Bracket, CarrierRelationAndAntisymmetry) {
  EXPECT_EQ(bracket(e(1, 1) - e(3, 3), e(1, 2) + e(2, 3)), e(1, 2) + e(2, 3));
  GlElement x = e(1, 2) + ParamPoly(3) * e(2, 1);
  EXPECT_TRUE(bracket(x, x).is_zero());
}

TEST(Bracket, Jacobi) {
  std::mt19937 rng(1);
  for (int k = 0; k < 10; ++k) {
    GlElement x = random_gl(rng), y = random_gl(rng), z = random_gl(rng);
    EXPECT_TRUE((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
  }
}

TEST(ParseGl, ReadsLinearCombinations) {
  EXPECT_EQ(parse_gl("3/2*a*e12 + 3/2*e13", 3), gens::x_r());
  EXPECT_EQ(parse_gl("e11 - e33", 3), e(1, 1) - e(3, 3));
  EXPECT_THROW(parse_gl("e14", 3), Error);
}

TEST(TensorForm, CartanWedgeDiagonal) {
  OperatorMatrix m = tensor_form(gens::cartan_wedge()).matrix();
  // slot e1⊗e2 is basis index 1
  EXPECT_EQ(m(1, 1), ScalarSeries(Rational(1, 2)));
  EXPECT_EQ(m(3, 3), ScalarSeries(Rational(-1, 2)));
  EXPECT_TRUE(tensor_form(wedge(e(1, 2), e(1, 2))).is_zero());
}

TEST(TensorForm, IsFlipAntisymmetric) {
  OperatorMatrix m = tensor_form(gens::r_p()).matrix();
  EXPECT_EQ(flipped(m, 3), -m);
}

TEST(Canonical, DetectsCancellation) {
  WedgeElement w = wedge(e(1, 2), e(1, 3)) + wedge(e(1, 3), e(1, 2));
  EXPECT_TRUE(is_zero(w));
  EXPECT_FALSE(is_zero(wedge(e(1, 2), e(1, 3))));
  EXPECT_EQ(tensor_form(canonical(gens::r_r())), tensor_form(gens::r_r()));
}

TEST(AdWedge, BLambdaFromRLambda) {
  ParamPoly lam = var("lam");
  WedgeElement got = ad_wedge(e(1, 2), gens::r_lambda(lam));
  WedgeElement expected = wedge((lam - 1) * e(1, 1) + (lam + 1) * e(2, 2) - 2 * lam * e(3, 3), e(1, 2));
  EXPECT_EQ(tensor_form(got), tensor_form(expected));
  EXPECT_TRUE(is_zero(ad_wedge(e(1, 2), WedgeElement(3))));
}

TEST(AdWedge, CommutesWithTensorForm) {
  // T(ad_x w) = [x⊗1 + 1⊗x, T(w)]
  std::mt19937 rng(9);
  OperatorMatrix id = OperatorMatrix::identity(3);
  for (const auto& w : {gens::gamma(), gens::r_p(), gens::r_b1()}) {
    GlElement x = random_gl(rng);
    OperatorMatrix xm = x.to_matrix();
    OperatorMatrix big = kron(xm, id) + kron(id, xm);
    OperatorMatrix tw = tensor_form(w).matrix();
    EXPECT_EQ(tensor_form(ad_wedge(x, w)).matrix(), big * tw - tw * big);
  }
}

TEST(Cybe, VanishesOnCatalogClassicalMatrices) {
  EXPECT_TRUE(cybe_defect(gens::r_h()).is_zero());
  EXPECT_TRUE(cybe_defect(gens::r_q(var("a"), var("b"), var("c"))).is_zero());
}

TEST(Cybe, GammaAgainstBruteForceOracle) {
  OperatorMatrix d = cybe_defect(gens::gamma());
  EXPECT_FALSE(d.is_zero());
  auto expected = oracle::cybe_bruteforce(oracle::dense(tensor_form(gens::gamma()).doubled()), 3);
  EXPECT_EQ(oracle::dense(d), expected);
  EXPECT_TRUE(is_sl_invariant(d));
}

TEST(Invariance, ZeroAndPerturbation) {
  EXPECT_TRUE(is_sl_invariant(OperatorMatrix(27)));
  OperatorMatrix d = cybe_defect(gens::gamma());
  OperatorMatrix e111 = kron(kron(matrix_unit(3, 1, 1), matrix_unit(3, 1, 1)), matrix_unit(3, 1, 1));
  EXPECT_FALSE(is_sl_invariant(d + e111));
}

TEST(Carrier, CartanIsTwoDimensionalAbelian) {
  CarrierInfo c = carrier(gens::r_h());
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_TRUE(c.is_subalgebra);
  EXPECT_TRUE(c.nondegenerate);
  for (const auto& x : c.basis)
    for (const auto& y : c.basis) EXPECT_TRUE(bracket(x, y).is_zero());
}

TEST(Carrier, SixDimensionalForP) {
  CarrierInfo c = carrier(gens::r_p());
  EXPECT_EQ(c.dimension(), 6u);
  EXPECT_TRUE(c.is_subalgebra);
  EXPECT_TRUE(c.nondegenerate);
}

TEST(Carrier, TwoNilpotentUnits) {
  CarrierInfo c = carrier(wedge(e(1, 2), e(1, 3)));
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_TRUE(c.is_subalgebra);
  EXPECT_TRUE(c.nondegenerate);
}

TEST(Carrier, DisplayedQ11m2VariantHasOddSpan) {
  CarrierInfo c = carrier(gens::r_q11m2_prime_printed());
  EXPECT_EQ(c.dimension() % 2, 1u);
  EXPECT_FALSE(c.nondegenerate);
}

TEST(Carrier, Errors) {
  try {
    carrier(gens::r_b_lambda());
    FAIL();
  } catch (const Error& ex) {
    EXPECT_EQ(ex.code(), ErrorCode::UnspecializedParameters);
  }
  try {
    carrier(WedgeElement(3));
    FAIL();
  } catch (const Error& ex) {
    EXPECT_EQ(ex.code(), ErrorCode::ZeroInput);
  }
}
