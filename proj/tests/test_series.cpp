#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ybe/ybe.hpp"

using namespace ybe;

namespace {

const ScalarSeries t = ScalarSeries::t();

ScalarSeries poly(std::initializer_list<int> c, int order = kExactOrder) {
  std::vector<ParamPoly> p(c.begin(), c.end());
  return ScalarSeries::from_coefficients(0, std::move(p), order);
}

}  // namespace

TEST(Rational, ParsesFractionsAndRejectsJunk) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(ParamPoly, ParseAndPrintRoundTrip) {
  ParamPoly p = parse_poly("a*c - 2*lam^2 + 1/3");
  EXPECT_EQ(parse_poly(p.to_string()), p);
  EXPECT_EQ(p.degree_in("lam"), 2u);
  EXPECT_EQ(p.coefficient_of("lam", 2), ParamPoly(-2));
  EXPECT_EQ(p.specialize({{"a", 2}, {"c", 3}, {"lam", 0}}), ParamPoly(Rational(19, 3)));
}

TEST(ParamPoly, ProductDistributes) {
  ParamPoly a = ParamPoly::variable("a"), b = ParamPoly::variable("b");
  EXPECT_EQ((a + b) * (a - b), a * a - b * b);
}

TEST(Series, ExpOfT) {
  ScalarSeries e = series_exp(t, 4);
  EXPECT_EQ(e, poly({1, 1, 0, 0}, 4) + ScalarSeries::monomial(Rational(1, 2), 2, 4) +
                   ScalarSeries::monomial(Rational(1, 6), 3, 4));
  EXPECT_EQ(e.order(), 4);
}

TEST(Series, ExpOfZeroIsOne) { EXPECT_EQ(series_exp(ScalarSeries(0), 8).truncated(8), ScalarSeries(1).truncated(8)); }

TEST(Series, ExpMatchesNaiveProductOracle) {
  const std::size_t n = 10;
  oracle::Coeffs x{0, 2, -1};
  oracle::Coeffs expected = oracle::exp(x, n);
  EXPECT_EQ(expected[3], Rational(-2, 3));
  ScalarSeries got = series_exp(poly({0, 2, -1}), static_cast<int>(n));
  EXPECT_EQ(oracle::coeffs_of(got, n), expected);
}

TEST(Series, ExpRejectsNonzeroConstant) {
  try {
    series_exp(poly({1, 1}), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonzeroConstantTerm);
  }
}

TEST(Series, LogOfOnePlusT) {
  ScalarSeries l = series_log(poly({1, 1}), 4);
  EXPECT_EQ(l.coeff(1), ParamPoly(1));
  EXPECT_EQ(l.coeff(2), ParamPoly(Rational(-1, 2)));
  EXPECT_EQ(l.coeff(3), ParamPoly(Rational(1, 3)));
  EXPECT_TRUE(series_log(ScalarSeries(1), 6).is_zero());
}

TEST(Series, LogExpRoundTripOnSecMinusTan) {
  const int n = 14;
  ScalarSeries q = trig_series(TrigKind::Sec, n) - trig_series(TrigKind::Tan, n);
  EXPECT_EQ(series_exp(series_log(q, n), n), q.truncated(n));
}

TEST(Series, IntegerAndHalfPowers) {
  // exact input with a non-negative integer power stays exact
  EXPECT_EQ(series_pow(poly({1, 1}), 2, 6), poly({1, 2, 1}));
  EXPECT_EQ(series_pow(poly({1, 1}), 0, 6), ScalarSeries(1));
  EXPECT_EQ(series_pow(poly({1, 1}, 6), 2, 6), poly({1, 2, 1}, 6));
  ScalarSeries root = series_pow(poly({1, 1}), Rational(1, 2), 12);
  EXPECT_EQ(root * root, poly({1, 1}).truncated(12));
}

TEST(Series, Inverses) {
  EXPECT_EQ(series_inv(ScalarSeries(1), 5).truncated(5), ScalarSeries(1).truncated(5));
  EXPECT_EQ(series_inv(poly({1, -1}), 3), poly({1, 1, 1}, 3));
  const int n = 12;
  ScalarSeries q = trig_series(TrigKind::Sec, n) - trig_series(TrigKind::Tan, n);
  ScalarSeries plus = trig_series(TrigKind::Sec, n) + trig_series(TrigKind::Tan, n);
  EXPECT_EQ(series_inv(q, n), plus);
  EXPECT_EQ(q * plus, ScalarSeries(1).truncated(n));
}

TEST(Series, LaurentInverseOfT) {
  ScalarSeries inv = series_inv(t + t * t, 6);
  EXPECT_EQ(inv.valuation(), -1);
  EXPECT_EQ(inv.coeff(-1), ParamPoly(1));
  EXPECT_EQ(inv * (t + t * t), ScalarSeries(1).truncated(inv.order() + 1));
}

TEST(Series, TrigAgainstLongDivisionOracle) {
  const std::size_t n = 10;
  EXPECT_EQ(oracle::coeffs_of(trig_series(TrigKind::Sin, 5), 5), (oracle::Coeffs{0, 1, 0, Rational(-1, 6), 0}));
  EXPECT_EQ(trig_series(TrigKind::Cos, 4).coeff(0), ParamPoly(1));
  oracle::Coeffs one_minus_sin = oracle::sin(n);
  for (auto& c : one_minus_sin) c = -c;
  one_minus_sin[0] += 1;
  oracle::Coeffs expected = oracle::divide(one_minus_sin, oracle::cos(n), n);
  ScalarSeries q = trig_series(TrigKind::Sec, static_cast<int>(n)) - trig_series(TrigKind::Tan, static_cast<int>(n));
  EXPECT_EQ(oracle::coeffs_of(q, n), expected);
}

TEST(Series, ConstantTerm) {
  EXPECT_EQ(laurent_constant_term(poly({3, 2})), ParamPoly(3));
  ScalarSeries pole = ScalarSeries::monomial(ParamPoly::variable("m"), -1) + ScalarSeries(5);
  try {
    laurent_constant_term(pole);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PoleAtZero);
  }
}

TEST(Series, TruncationIsMonotone) {
  ScalarSeries e = series_exp(poly({0, 1, 1}), 12);
  EXPECT_EQ(e.truncated(7), series_exp(poly({0, 1, 1}), 7));
  EXPECT_EQ((e.truncated(5) * e.truncated(9)).order(), 5);
}

TEST(Series, ParametricCoefficients) {
  ScalarSeries a = ScalarSeries::monomial(ParamPoly::variable("a"), 1);
  ScalarSeries e = series_exp(a, 5);
  EXPECT_EQ(e.coeff(3), ParamPoly(Rational(1, 6)) * ParamPoly::variable("a", 3));
  EXPECT_EQ(e.specialize({{"a", 2}}), series_exp(ScalarSeries::monomial(ParamPoly(2), 1), 5));
}
