#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ybe/ybe.hpp"

using namespace ybe;

namespace {

OperatorMatrix transposition13(std::size_t n) {
  // e_a⊗e_b⊗e_c -> e_c⊗e_b⊗e_a, written out directly
  OperatorMatrix m(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) m.set((c * n + b) * n + a, (a * n + b) * n + c, ScalarSeries(1));
  return m;
}

}  // namespace

TEST(Kron, IdentityAndUnits) {
  EXPECT_EQ(kron(OperatorMatrix::identity(2), OperatorMatrix::identity(2)), OperatorMatrix::identity(4));
  OperatorMatrix k = kron(matrix_unit(2, 1, 2), matrix_unit(2, 2, 1));
  EXPECT_EQ(k.nonzero_count(), 1u);
  EXPECT_EQ(k(1, 2), ScalarSeries(1));
}

TEST(Kron, MixedProductProperty) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    OperatorMatrix a = oracle::random_matrix(rng, 3, 1), b = oracle::random_matrix(rng, 2, 1);
    OperatorMatrix c = oracle::random_matrix(rng, 3, 1), d = oracle::random_matrix(rng, 2, 1);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}

TEST(Kron, EntryFormulaAgainstDenseOracle) {
  std::mt19937 rng(11);
  OperatorMatrix a = oracle::random_matrix(rng, 3, 0, 0.8), b = oracle::random_matrix(rng, 2, 0, 0.8);
  auto da = oracle::dense(a), db = oracle::dense(b), dk = oracle::dense(kron(a, b));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) EXPECT_EQ(dk[i * 2 + k][j * 2 + l], da[i][j] * db[k][l]);
}

TEST(Flip, IsAnInvolutionAndSwapsFactors) {
  OperatorMatrix p = flip(3);
  EXPECT_EQ(p * p, OperatorMatrix::identity(9));
  std::mt19937 rng(3);
  OperatorMatrix a = oracle::random_matrix(rng, 3, 1), b = oracle::random_matrix(rng, 3, 1);
  EXPECT_EQ(p * kron(a, b) * p, kron(b, a));
  OperatorMatrix r = oracle::random_matrix(rng, 9, 1);
  EXPECT_EQ(flipped(r, 3), p * r * p);
}

TEST(Embed, IdentityAndFlip) {
  EXPECT_EQ(embed(OperatorMatrix::identity(9), FactorPair::P13, 3), OperatorMatrix::identity(27));
  EXPECT_EQ(embed(flip(2), FactorPair::P13, 2), transposition13(2));
  EXPECT_EQ(embed(flip(3), FactorPair::P13, 3), transposition13(3));
}

TEST(Embed, ConjugationRelations) {
  std::mt19937 rng(5);
  OperatorMatrix r = oracle::random_matrix(rng, 9, 1, 0.3);
  OperatorMatrix s23 = perm_operator(Permutation3({1, 3, 2}), 3);
  OperatorMatrix s12 = perm_operator(Permutation3({2, 1, 3}), 3);
  EXPECT_EQ(embed(r, FactorPair::P13, 3), s23 * embed(r, FactorPair::P12, 3) * s23);
  EXPECT_EQ(embed(r, FactorPair::P23, 3), s12 * embed(r, FactorPair::P13, 3) * s12);
  OperatorMatrix a = oracle::random_matrix(rng, 3, 1), b = oracle::random_matrix(rng, 3, 1);
  OperatorMatrix id = OperatorMatrix::identity(3);
  EXPECT_EQ(embed(kron(a, b), FactorPair::P12, 3), kron(kron(a, b), id));
  EXPECT_EQ(embed(kron(a, b), FactorPair::P23, 3), kron(id, kron(a, b)));
  EXPECT_EQ(embed(kron(a, b), FactorPair::P13, 3), kron(kron(a, id), b));
}

TEST(Embed, RejectsWrongDimension) {
  try {
    embed(OperatorMatrix::identity(4), FactorPair::P12, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Permutation, ActionOnBasisVector) {
  EXPECT_EQ(perm_operator(Permutation3::identity(), 3), OperatorMatrix::identity(27));
  OperatorMatrix s12 = perm_operator(Permutation3({2, 1, 3}), 3);
  // e1⊗e2⊗e3 is basis index 5, e2⊗e1⊗e3 is index 11
  EXPECT_EQ(s12(11, 5), ScalarSeries(1));
  EXPECT_EQ(s12.nonzero_count(), 27u);
}

TEST(Permutation, HomomorphismOnAllPairs) {
  int pairs = 0;
  for (const auto& s : Permutation3::all())
    for (const auto& u : Permutation3::all()) {
      EXPECT_EQ(perm_operator(s * u, 2), perm_operator(s, 2) * perm_operator(u, 2));
      ++pairs;
    }
  EXPECT_EQ(pairs, 36);
}

TEST(Inverse, IdentityAndNilpotentGeometricSeries) {
  EXPECT_EQ(matrix_inverse(OperatorMatrix::identity(4)), OperatorMatrix::identity(4));
  OperatorMatrix a = matrix_unit(3, 1, 2) + matrix_unit(3, 2, 3);
  OperatorMatrix m = OperatorMatrix::identity(3) + ScalarSeries::t() * a;
  OperatorMatrix inv = matrix_inverse(m);
  EXPECT_TRUE(inv.exact());
  OperatorMatrix t = ScalarSeries::t() * OperatorMatrix::identity(3);
  EXPECT_EQ(inv, OperatorMatrix::identity(3) - t * a + t * t * a * a);
}

TEST(Inverse, TruncatedMultiplyBack) {
  std::mt19937 rng(21);
  OperatorMatrix m = oracle::random_matrix(rng, 9, 2, 0.4);
  for (std::size_t k = 0; k < 9; ++k) m.set(k, k, m(k, k) + ScalarSeries(5));  // leading matrix diagonally dominant
  OperatorMatrix inv = matrix_inverse(m, 10);
  EXPECT_EQ(inv.order(), 10);
  EXPECT_EQ((m * inv).truncated(10), OperatorMatrix::identity(9).truncated(10));
  EXPECT_EQ((inv * m).truncated(10), OperatorMatrix::identity(9).truncated(10));
}

TEST(Inverse, SingularLeadingMatrix) {
  OperatorMatrix m = ScalarSeries::t() * OperatorMatrix::identity(2);
  try {
    matrix_inverse(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularLeadingMatrix);
  }
}

TEST(OperatorMatrix, WitnessIsFirstNonzeroInRowMajorOrder) {
  OperatorMatrix m(3);
  m.set(2, 0, ScalarSeries::monomial(ParamPoly(4), 2));
  m.set(1, 2, ScalarSeries::monomial(ParamPoly(-1), 3));
  auto w = m.first_nonzero();
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->row, 2u);
  EXPECT_EQ(w->col, 3u);
  EXPECT_EQ(w->degree, 3);
  EXPECT_EQ(w->value, ParamPoly(-1));
}
