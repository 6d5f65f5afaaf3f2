#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ybe/ybe.hpp"

using namespace ybe;
namespace fs = std::filesystem;

namespace {

std::string temp_path(const std::string& name) { return (fs::temp_directory_path() / ("ybe_io_" + name)).string(); }

void write(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

}  // namespace

TEST(Json, MatrixRoundTrip) {
  for (const char* id : {"p", "q_abc", "b1"}) {
    OperatorMatrix m = build_literal(id);
    EXPECT_EQ(matrix_from_json(parse_json_text(canonical_matrix_text(m))), m) << id;
  }
  OperatorMatrix h = build_literal("h", 9);
  OperatorMatrix back = matrix_from_json(parse_json_text(canonical_matrix_text(h)));
  EXPECT_EQ(back, h);
  EXPECT_EQ(back.order(), 9);
}

TEST(Json, PlainStringEntries) {
  OperatorMatrix m = read_matrix_file(YBE_SAMPLES_DIR "/identity4.json");
  EXPECT_EQ(m, OperatorMatrix::identity(4));
}

TEST(Json, RejectsUndeclaredParameterAndBadIndices) {
  auto code = [](const std::string& text) {
    try {
      matrix_from_json(parse_json_text(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ZeroInput;
  };
  EXPECT_EQ(code(R"({"dim":4,"params":[],"entries":[[1,1,"a*t"]]})"), ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"dim":4,"entries":[[5,1,"1"]]})"), ErrorCode::ParseError);
  EXPECT_EQ(code("{not json"), ErrorCode::ParseError);
}

TEST(Json, WedgeRoundTrip) {
  WedgeElement w = gens::r_r();
  WedgeElement back = wedge_from_json(wedge_to_json(w));
  EXPECT_EQ(tensor_form(back), tensor_form(w));
}

TEST(Render, LatexAndCsv) {
  std::string tex = render_latex(build_literal("h1"));
  EXPECT_NE(tex.find("\\begin{array}"), std::string::npos);
  std::string csv = render_csv(build_literal("b_lambda"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
}

TEST(Golden, ShippedFilesMatch) {
  for (const auto& e : catalog_entries()) {
    if (!e.has_literal) continue;
    Check c = golden_check(e.id, std::string(YBE_GOLDEN_DIR) + "/" + e.id + ".json");
    EXPECT_TRUE(c.passed()) << e.id << " " << c.detail;
  }
}

TEST(Golden, CorruptionIsCaughtWithCoordinates) {
  std::string text = read_file(std::string(YBE_GOLDEN_DIR) + "/r.json");
  Json j = parse_json_text(text);
  j["entries"][0][2]["terms"][0][1] = "17";
  std::string path = temp_path("r.json");
  write(path, canonical_matrix_text(matrix_from_json(j)));
  Check c = golden_check("r", path);
  EXPECT_EQ(c.status, CheckStatus::Fail);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->row, j["entries"][0][0].get<std::size_t>());
  EXPECT_EQ(c.witness->col, j["entries"][0][1].get<std::size_t>());
  std::remove(path.c_str());
}

TEST(Golden, MissingFileFails) {
  Check c = golden_check("r", "/nonexistent/r.json");
  EXPECT_EQ(c.status, CheckStatus::Fail);
}
