#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "boolsym/constructions.hpp"
#include "boolsym/io.hpp"
#include "boolsym/sum_expression.hpp"

namespace boolsym {
namespace {

PermutationGroup group_from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_group(in);
}

KValuedFunction function_from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_function(in);
}

template <typename F>
std::pair<std::size_t, std::size_t> parse_error_position(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "no parse error";
  return {0, 0};
}

TEST(GroupFile, ParsesGeneratorsAndComments) {
  const auto g = group_from_text("# Klein group\n\ndegree 4\n(1 2)(3 4)\n  # more\n(1 3)(2 4)\n");
  EXPECT_EQ(g, klein_group());
  EXPECT_EQ(group_from_text("degree 3\n").order(), 1u);
  EXPECT_EQ(group_from_text("degree 3\n()\n").order(), 1u);
}

TEST(GroupFile, ReportsPositions) {
  EXPECT_EQ(parse_error_position([] { group_from_text(""); }), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(parse_error_position([] { group_from_text("order 4\n"); }),
            (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(parse_error_position([] { group_from_text("degree x\n"); }),
            (std::pair<std::size_t, std::size_t>{1, 8}));
  EXPECT_EQ(parse_error_position([] { group_from_text("degree 4\n\n(1 2)(3 5)\n"); }).first, 3u);
  EXPECT_EQ(parse_error_position([] { group_from_text("degree 4\n(1 2\n"); }).first, 2u);
}

TEST(GroupFile, RoundTrip) {
  for (const auto& g : {klein_group(), dihedral_group(5), direct_sum(cyclic_group(2), klein_group()),
                        trivial_group(3)}) {
    EXPECT_EQ(group_from_text(format_group(g)), g);
  }
}

TEST(FunctionFile, ParsesEntries) {
  const auto f = function_from_text("vars 4 values 3\n1100 1\n0011 1\n# rest\n1010 2\n0101 2\n");
  EXPECT_EQ(f, fixture("k4_3val"));
  const auto zero = function_from_text("vars 3 values 2\n");
  EXPECT_EQ(zero, KValuedFunction(3, 2));
}

TEST(FunctionFile, RejectsBadEntries) {
  using Pos = std::pair<std::size_t, std::size_t>;
  EXPECT_EQ(parse_error_position([] { function_from_text("vars 3\n"); }), (Pos{1, 1}));
  EXPECT_EQ(parse_error_position([] { function_from_text("vars 3 values 2\n101 2\n"); }), (Pos{2, 5}));
  EXPECT_EQ(parse_error_position([] { function_from_text("vars 3 values 2\n10 1\n"); }), (Pos{2, 1}));
  EXPECT_EQ(parse_error_position([] { function_from_text("vars 3 values 2\n1x1 1\n"); }), (Pos{2, 2}));
  EXPECT_EQ(parse_error_position([] { function_from_text("vars 3 values 2\n101 1\n101 0\n"); }),
            (Pos{3, 1}));
  EXPECT_EQ(parse_error_position([] { function_from_text("vars 3 values 1\n"); }), (Pos{1, 15}));
  EXPECT_EQ(parse_error_position([] { function_from_text("vars 30 values 2\n"); }), (Pos{1, 6}));
}

TEST(FunctionFile, RoundTrip) {
  for (const auto& [name, f] : fixtures()) {
    EXPECT_EQ(function_from_text(format_function(f)), f) << name;
  }
}

class SumFile : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("boolsym_sum_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
    write("c2.grp", "degree 2\n(1 2)\n");
    write("c4.grp", "degree 4\n(1 2 3 4)\n");
    write("k4.grp", "degree 4\n(1 2)(3 4)\n(1 3)(2 4)\n");
    write("one2.grp", "degree 2\n");
    write("half.grp", "degree 4\n(1 3)(2 4)\n");
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    write_text(path, text);
    return path;
  }

  std::filesystem::path dir_;
};

TEST_F(SumFile, DirectSumOfLeaves) {
  const auto s = SumExpression::read(write("b.sum", "leaf c2.grp\nleaf k4.grp\n"));
  EXPECT_EQ(s.degree(), 6u);
  ASSERT_EQ(s.leaves().size(), 2u);
  EXPECT_EQ(s.leaves()[1].offset, 2u);
  EXPECT_EQ(s.evaluate(), direct_sum(cyclic_group(2), klein_group()));
}

TEST_F(SumFile, JoinWithKernels) {
  const auto s = SumExpression::read(write("e3.sum", "leaf c2.grp kernel one2.grp\n"
                                                     "leaf c4.grp kernel half.grp\njoin 0\n"));
  const auto g = s.evaluate();
  EXPECT_EQ(g.order(), 4u);
  EXPECT_TRUE(g.contains(Permutation::parse("(1 2)(3 4 5 6)", 6)));
  EXPECT_EQ(s.leaves().size(), 2u);
}

TEST_F(SumFile, JoinWithoutKernelsIsDirect) {
  const auto s = SumExpression::read(write("j.sum", "leaf c2.grp\nleaf k4.grp\njoin 0\n"));
  EXPECT_EQ(s.evaluate(), direct_sum(cyclic_group(2), klein_group()));
}

TEST_F(SumFile, Errors) {
  EXPECT_THROW(SumExpression::read(write("a.sum", "")), ParseError);
  EXPECT_THROW(SumExpression::read(write("b.sum", "node c2.grp\n")), ParseError);
  EXPECT_THROW(SumExpression::read(write("c.sum", "leaf missing.grp\n")), ParseError);
  EXPECT_THROW(SumExpression::read(write("d.sum", "leaf c2.grp\njoin 0\n")), ParseError);
  EXPECT_THROW(SumExpression::read(write("e.sum", "leaf c2.grp kernel\n")), ParseError);
  EXPECT_THROW(SumExpression::read(write("f.sum", "leaf c2.grp kernel one2.grp\n"
                                                  "leaf c4.grp kernel half.grp\njoin 5\n")),
               ParseError);
  EXPECT_THROW(SumExpression::read((dir_ / "none.sum").string()), Error);
}

}  // namespace
}  // namespace boolsym
