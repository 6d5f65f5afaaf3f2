#include <gtest/gtest.h>

#include <set>

#include "ybe/ybe.hpp"

using namespace ybe;

namespace {

ScalarSeries mono(const ParamPoly& c, int d) { return ScalarSeries::monomial(c, d); }
ParamPoly var(const char* v) { return ParamPoly::variable(v); }

}  // namespace

TEST(Catalog, ThirteenEntriesInOrder) {
  std::vector<std::string> ids;
  for (const auto& e : catalog_entries()) ids.push_back(e.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"gamma_dj", "cremmer_gervais", "p", "r", "q_abc", "q011m1_prime",
                                           "q11m2_prime", "b_lambda", "b0", "b1", "h", "h1", "h_lam1"}));
  EXPECT_EQ(find_entry("h").params.size(), 0u);
  EXPECT_EQ(find_entry("p").deformation_variable, "m");
  EXPECT_THROW(find_entry("nope"), Error);
}

TEST(Catalog, EveryIdBuilds) {
  for (const auto& e : catalog_entries()) {
    OperatorMatrix m = build_constructive(e.id, 10);
    EXPECT_EQ(m.dim(), 9u) << e.id;
    if (e.has_literal) {
      EXPECT_EQ(build_literal(e.id, 10).dim(), 9u) << e.id;
    }
  }
  try {
    build_literal("gamma_dj");
    FAIL();
  } catch (const Error& ex) {
    EXPECT_EQ(ex.code(), ErrorCode::NoLiteralForm);
  }
}

TEST(Catalog, LiteralAnchors) {
  EXPECT_EQ(build_literal("p")(2, 7), ScalarSeries(ParamPoly(3) * var("m")));
  EXPECT_EQ(build_literal("b_lambda")(2, 5), mono(ParamPoly(2) * var("lam"), 1));
  EXPECT_EQ(build_literal("h_lam1")(1, 8), mono(-var("lam"), 1));
  EXPECT_EQ(build_literal("q_abc")(0, 2), mono(var("a"), 1));
  EXPECT_EQ(build_literal("h1")(0, 1), mono(1, 1));
}

TEST(Catalog, DeclaredParametersMatchLiterals) {
  for (const auto& e : catalog_entries()) {
    if (!e.has_literal) continue;
    EXPECT_EQ(build_literal(e.id).params(), e.params) << e.id;
  }
}

TEST(Catalog, ConstructiveClassicalLimitOfStandard) {
  OperatorMatrix r = build_constructive("gamma_dj", 8);
  EXPECT_EQ(r.coefficient(1), tensor_form(gens::gamma()).doubled());
  MqybeResult m = mqybe_lambda(build_constructive("cremmer_gervais", 12));
  ASSERT_TRUE(m.lambda.has_value());
  EXPECT_FALSE(m.lambda->is_zero());
}

TEST(Catalog, BoundaryStatuses) {
  EXPECT_EQ(find_entry("gamma_dj").boundary_status, BoundaryStatus::Modified);
  EXPECT_EQ(find_entry("p").boundary_status, BoundaryStatus::ClaimedBoundary);
  EXPECT_EQ(find_entry("q_abc").boundary_status, BoundaryStatus::Unknown);
  EXPECT_TRUE(find_entry("q11m2_prime").printed_classical_r.has_value());
}

TEST(Verify, AllEntriesPass) {
  for (const auto& e : catalog_entries()) {
    VerificationReport r = verify_entry(e.id, 12);
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed()) << e.id << ": " << c.name << " " << c.detail;
  }
}

TEST(Verify, HIsDiagonalAndExactlySolved) {
  VerificationReport r = verify_entry("h");
  std::set<std::string> names;
  for (const auto& c : r.checks) names.insert(c.name);
  EXPECT_TRUE(names.count("QYBE") && names.count("unitarity") && names.count("classical limit"));
  EXPECT_TRUE(r.passed());
}

TEST(Verify, SpecializedParameters) {
  VerificationReport r = verify_entry("q_abc", 10, {{"a", 0}, {"b", 1}, {"c", -1}});
  EXPECT_TRUE(r.passed());
  try {
    verify_entry("r", 10, {{"zz", 1}});
    FAIL();
  } catch (const Error& ex) {
    EXPECT_EQ(ex.code(), ErrorCode::BadParameter);
  }
}

TEST(Verify, CorruptedCopyFailsWithWitness) {
  const CatalogEntry& entry = find_entry("r");
  OperatorMatrix m = build_literal("r");
  m.set(0, 1, -m(0, 1));
  VerificationReport r = verify_matrix(entry, m, 12);
  EXPECT_FALSE(r.passed());
  bool witnessed = false;
  for (const auto& c : r.checks)
    if (!c.passed() && c.witness) witnessed = true;
  EXPECT_TRUE(witnessed);
}

TEST(Verify, QSubfamilyMatchesSubstitutedLiteral) {
  ParamPoly lam = var("lam");
  OperatorMatrix special = substitute(build_literal("q_abc"),
                                      {{"a", ParamPoly(-1) - lam}, {"b", ParamPoly(2) * lam}, {"c", ParamPoly(1) - lam}});
  EXPECT_EQ(q_subfamily_boundary().r, special);
}
