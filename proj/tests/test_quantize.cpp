#include <gtest/gtest.h>

#include "ybe/ybe.hpp"

using namespace ybe;
using gens::e;
using gens::var;
using gens::wedge;

namespace {

ScalarSeries mono(const ParamPoly& c, int d) { return ScalarSeries::monomial(c, d); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& ex) {
    return ex.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(MatrixExp, NilpotentIsExact) {
  OperatorMatrix a = matrix_unit(3, 1, 2) + matrix_unit(3, 2, 3);
  OperatorMatrix ex = matrix_exp(a);
  EXPECT_TRUE(ex.exact());
  EXPECT_EQ(ex, OperatorMatrix::identity(3) + a + Rational(1, 2) * (a * a));
}

TEST(MatrixExp, TruncatedAgreesWithScalarExp) {
  OperatorMatrix a = ScalarSeries::t() * OperatorMatrix::identity(2);
  OperatorMatrix ex = matrix_exp(a, 9);
  EXPECT_EQ(ex(0, 0), series_exp(ScalarSeries::t(), 9));
  EXPECT_EQ(code_of([] { matrix_exp(OperatorMatrix::identity(2)); }), ErrorCode::NonNilpotent);
}

TEST(ExpQuantize, ZeroAndQabcEntries) {
  EXPECT_EQ(exp_quantize(WedgeElement(3)), OperatorMatrix::identity(9));
  OperatorMatrix r = exp_quantize(gens::r_q(var("a"), var("b"), var("c")));
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r(0, 2), mono(var("a"), 1));
  EXPECT_EQ(r(0, 8), mono(-(var("a") * var("c")), 2));
}

TEST(ExpQuantize, CorrectedQ11m2MatchesDisplayed) {
  EXPECT_EQ(exp_quantize(gens::r_q11m2_prime()), build_literal("q11m2_prime"));
  EXPECT_NE(exp_quantize(gens::r_q11m2_prime_printed()), build_literal("q11m2_prime"));
}

TEST(ExpQuantize, B0ExponentialIsNotASolution) {
  EXPECT_EQ(is_qybe(exp_quantize(gens::r_b0())).status, CheckStatus::Fail);
}

TEST(Sandwich, ZeroBetaReducesToExp) {
  EXPECT_EQ(sandwich_quantize(WedgeElement(3), gens::gamma(), 10), exp_quantize(gens::gamma(), 10));
}

TEST(Orbit, SubfamilyOfQ) {
  ParamPoly lam = var("lam");
  OrbitExpansion o = orbit_expand(e(1, 3), gens::r_lambda(lam), default_orbit_bound(3));
  EXPECT_EQ(o.degree, 1);
  WedgeElement expected = gens::r_q(ParamPoly(-1) - lam, 2 * lam, ParamPoly(1) - lam);
  EXPECT_EQ(tensor_form(o.coefficients[1]), tensor_form(expected));
}

TEST(Orbit, RLambdaUnderXr) {
  OrbitExpansion o = orbit_expand(gens::x_r(), gens::r_lambda(Rational(1, 3)), default_orbit_bound(3));
  EXPECT_EQ(o.degree, 1);
  EXPECT_EQ(tensor_form(o.coefficients[1]), tensor_form(gens::r_r()));
}

TEST(Orbit, ZeroElementAndNonNilpotentAction) {
  EXPECT_EQ(orbit_expand(GlElement(3), gens::gamma(), 8).degree, 0);
  EXPECT_EQ(code_of([] { orbit_expand(e(1, 1) - e(2, 2), wedge(e(1, 2), e(1, 3)), 8); }),
            ErrorCode::NonNilpotentAction);
}

TEST(Orbit, HLam1FromQm101) {
  ParamPoly lam = var("lam");
  WedgeElement base = gens::r_q(ParamPoly(-1), ParamPoly(0), ParamPoly(1));
  // x = e12 + lam e23: first coefficient is -(e12 + lam e23)∧e13
  OrbitExpansion o = orbit_expand(e(1, 2) + lam * e(2, 3), base, default_orbit_bound(3));
  ASSERT_GE(o.degree, 1);
  EXPECT_EQ(tensor_form(o.coefficients[1]), tensor_form(ParamPoly(-1) * gens::r_h_lam1()));
  // with e13 in place of e23 the lam-dependence drops out entirely
  OrbitExpansion other = orbit_expand(e(1, 2) + lam * e(1, 3), base, default_orbit_bound(3));
  EXPECT_EQ(tensor_form(other.coefficients[1]), tensor_form(gens::wedge(e(1, 3), e(1, 2))));
}

TEST(Theorem3, BLambda) {
  BoundaryResult b = theorem3_boundary(e(1, 2), gens::gamma(), var("lam") * gens::cartan_wedge());
  EXPECT_EQ(b.degree, 1);
  EXPECT_EQ(b.r(0, 1), mono(var("lam") - 1, 1));
  EXPECT_EQ(b.r, build_literal("b_lambda"));
}

TEST(Theorem3, R) {
  BoundaryResult b =
      theorem3_boundary(gens::x_r(), gens::gamma(), ParamPoly(Rational(1, 3)) * gens::cartan_wedge());
  EXPECT_EQ(b.r(0, 1), mono(-var("a"), 1));
  EXPECT_EQ(b.r, build_literal("r"));
}

TEST(Theorem3, QSubfamily) {
  ParamPoly lam = var("lam");
  BoundaryResult b = q_subfamily_boundary();
  EXPECT_EQ(b.r, exp_quantize(gens::r_q(ParamPoly(-1) - lam, 2 * lam, ParamPoly(1) - lam)));
}

TEST(Theorem3, ZeroXKeepsInputs) {
  WedgeElement beta = ParamPoly(Rational(1, 3)) * gens::cartan_wedge();
  BoundaryResult b = theorem3_boundary(GlElement(3), gens::gamma(), beta, 8);
  EXPECT_EQ(b.degree, 0);
  EXPECT_EQ(tensor_form(b.gamma_d), tensor_form(gens::gamma()));
  EXPECT_EQ(tensor_form(b.beta_d), tensor_form(beta));
}

TEST(Theorem4, TermsAndRisingFactorial) {
  GlElement h = GlElement::diagonal({1, 0, -1});
  EXPECT_EQ(rising_factorial(h, 2), GlElement::diagonal({2, 0, 0}));
  EXPECT_EQ(rising_factorial(h, 0), GlElement::identity(3));
  auto [hh, ee] = gens::pair_b0();
  EXPECT_EQ(theorem4_term(hh, ee, 0), OperatorMatrix::identity(9));
  EXPECT_EQ(theorem4_term(hh, ee, 1),
            kron(ee.to_matrix(), hh.to_matrix()) - kron(hh.to_matrix(), ee.to_matrix()));
  EXPECT_TRUE(theorem4_term(hh, ee, 5).is_zero());
}

TEST(Theorem4, B0Entries) {
  auto [h, e_] = gens::pair_b0();
  OperatorMatrix r = theorem4_universal(h, e_);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r(0, 1), mono(-2, 1));
  EXPECT_EQ(r(0, 3), mono(2, 1));
  EXPECT_EQ(r, build_literal("b0"));
  EXPECT_TRUE(is_qybe(r).passed());
  EXPECT_TRUE(unitarity_check(r).passed());
}

TEST(Theorem4, B1AfterRescale) {
  auto [h, e_] = gens::pair_b1();
  EXPECT_EQ(bracket(h, e_), e_);
  OperatorMatrix r = theorem4_universal(h, e_).rescaled(gens::kB1Rescale);
  EXPECT_EQ(r(0, 2), mono(-2, 1));
  EXPECT_EQ(r(1, 7), mono(-1, 1));
  EXPECT_EQ(r, build_literal("b1"));
}

TEST(Theorem4, RejectsBadPairs) {
  EXPECT_EQ(code_of([] { theorem4_universal(e(1, 1), e(2, 3)); }), ErrorCode::BracketRelationFails);
}

TEST(ConjugationLimit, IdentityAndZeroScale) {
  EXPECT_EQ(conjugation_limit(OperatorMatrix::identity(9), gens::x_p(), ParamPoly(3) * var("m")),
            OperatorMatrix::identity(9));
  OperatorMatrix lim = conjugation_limit(cremmer_gervais(10), gens::x_p(), ParamPoly(0));
  EXPECT_EQ(lim, OperatorMatrix::identity(9));
}

TEST(ConjugationLimit, ReproducesP) {
  OperatorMatrix r = conjugation_limit(cremmer_gervais(10), gens::x_p(), ParamPoly(3) * var("m"));
  EXPECT_EQ(r(0, 1), ScalarSeries(ParamPoly(2) * var("m")));
  EXPECT_EQ(r(0, 8), ScalarSeries(ParamPoly(-2) * var("m") * var("m") * var("m") * var("m")));
  EXPECT_EQ(r, build_literal("p"));
  EXPECT_EQ(r.params(), std::vector<std::string>{"m"});
}

TEST(ConjugationLimit, NeedsEnoughOrder) {
  EXPECT_EQ(code_of([] { conjugation_limit(cremmer_gervais(6), gens::x_p(), var("m")); }),
            ErrorCode::InsufficientOrder);
  // I + t e21⊗1 conjugated by exp((1/t) ad(e12⊗1 + 1⊗e12)) picks up -e12⊗1 / t
  OperatorMatrix q = OperatorMatrix::identity(9) + ScalarSeries::t() * kron(matrix_unit(3, 2, 1), OperatorMatrix::identity(3));
  EXPECT_EQ(code_of([&] { conjugation_limit(q, e(1, 2), ParamPoly(1)); }), ErrorCode::PoleAtZero);
}

TEST(ScaledLimit, CartanAndH1) {
  EXPECT_EQ(tensor_form(scaled_wedge_limit(gens::r_lambda(var("lam")), "lam", 1)), tensor_form(gens::r_h()));
  EXPECT_EQ(tensor_form(scaled_wedge_limit(gens::r_b_lambda(), "lam", 1)), tensor_form(gens::r_h1()));
  EXPECT_EQ(tensor_form(scaled_wedge_limit(gens::gamma(), "lam", 0)), tensor_form(gens::gamma()));
  EXPECT_EQ(code_of([] { scaled_wedge_limit(gens::r_lambda(var("lam")), "lam", 0); }), ErrorCode::DegreeExceedsK);
}
