#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gradedring/dsl.hpp"
#include "gradedring/errors.hpp"

using namespace gradedring;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> corpus() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(TEST_DATA_DIR)) {
    if (e.path().extension() == ".ring") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string parse_error(const std::string& text) {
  try {
    dsl::load_ring(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Dsl, CorpusIsLargeEnough) { EXPECT_GE(corpus().size(), 20u); }

TEST(Dsl, RoundTripCorpus) {
  for (const auto& path : corpus()) {
    SCOPED_TRACE(path.filename().string());
    const auto ast = dsl::parse_ring_file(slurp(path));
    const std::string printed = dsl::print_ring_file(ast);
    const auto again = dsl::parse_ring_file(printed);
    EXPECT_EQ(ast, again);
    EXPECT_EQ(printed, dsl::print_ring_file(again));
    for (const auto& block : ast.blocks) EXPECT_NO_THROW(dsl::build_ring(block));
  }
}

TEST(Dsl, LaurentBlock) {
  const auto ast = dsl::parse_ring_file(slurp(fs::path(TEST_DATA_DIR) / "laurent_z6.ring"));
  ASSERT_EQ(ast.blocks.size(), 1u);
  ASSERT_EQ(ast.blocks[0].gens.size(), 1u);
  EXPECT_TRUE(ast.blocks[0].gens[0].invertible);
}

TEST(Dsl, ElementsEvaluate) {
  const auto b = dsl::load_ring(slurp(fs::path(TEST_DATA_DIR) / "weighted.ring"));
  ASSERT_EQ(b.elements.size(), 1u);
  EXPECT_EQ(b.elements[0].second.to_string(), "-x^6 + 2*x^3*y^2 - y^4 + 4");
  const auto second = dsl::load_ring(slurp(fs::path(TEST_DATA_DIR) / "two_blocks.ring"), "B");
  EXPECT_EQ(second.ring->name(), "B");
  EXPECT_EQ(second.elements[0].second.to_string(), "u*v^-2 - 1/2");
}

TEST(Dsl, ExpressionPrecedence) {
  const auto e = dsl::parse_expression("-x^2*(y + 1) - 3", false);
  EXPECT_EQ(dsl::print_expr(dsl::parse_expression(dsl::print_expr(e), false)), dsl::print_expr(e));
  EXPECT_EQ(dsl::parse_expression(dsl::print_expr(e), false), e);
}

TEST(Dsl, Errors) {
  EXPECT_NE(parse_error("").find("no ring blocks"), std::string::npos);
  EXPECT_NE(parse_error("# only a comment\n").find("no ring blocks"), std::string::npos);
  EXPECT_NE(parse_error("ring R { base Z\n grading Z\n gen x deg 1\n rel x*x - x }")
                .find("4:10: relation not homogeneous: grades {1,2}"),
            std::string::npos);
  EXPECT_NE(parse_error("ring R { base Z\n grading Z\n gen x deg 1\n elem f = y }")
                .find("4:11: unknown identifier 'y'"),
            std::string::npos);
  EXPECT_NE(parse_error("ring R { base Zmod 6\n grading Z\n gen x deg 1\n elem f = 1/2 }").find("4:11:"),
            std::string::npos);
  EXPECT_NE(parse_error("ring R { base Q\n grading Z\n gen x deg\n }").find("4:2: expected grade"),
            std::string::npos);
  EXPECT_NE(parse_error("ring R { base Q\n gen x deg 1 }").find("grading must be declared"),
            std::string::npos);
  EXPECT_NE(parse_error("ring R { base Zmod 6\n grading Zmod 4\n gen x deg (1,2) }"), "");
}

TEST(Dsl, RationalLiteralsNeedQ) {
  EXPECT_NO_THROW(dsl::load_ring("ring R { base Q\n grading Z\n gen x deg 1\n elem f = 1/2*x }"));
  EXPECT_THROW(dsl::load_ring("ring R { base Z\n grading Z\n gen x deg 1\n elem f = 1/2*x }"), ParseError);
}
