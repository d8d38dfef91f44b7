#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gradedring/errors.hpp"
#include "gradedring/grading.hpp"

using namespace gradedring;

TEST(Grading, GroupNames) {
  EXPECT_EQ(GradingGroup::free_lex(1).to_string(), "Z");
  EXPECT_EQ(GradingGroup::free_lex(2).to_string(), "Z^2 lex");
  EXPECT_EQ(GradingGroup::cyclic(5).to_string(), "Zmod 5");
  EXPECT_TRUE(GradingGroup::free_lex(3).is_ordered());
  EXPECT_FALSE(GradingGroup::cyclic(4).is_torsion_free());
}

TEST(Grading, RejectsBadGroups) {
  EXPECT_THROW(GradingGroup::free_lex(0), Error);
  EXPECT_THROW(GradingGroup::free_lex(kMaxGradingRank + 1), Error);
  EXPECT_THROW(GradingGroup::cyclic(1), Error);
}

TEST(Grading, CyclicReduction) {
  const auto g = GradingGroup::cyclic(5);
  EXPECT_EQ(Grade(g, {7}).to_string(), "2 mod 5");
  EXPECT_EQ(Grade(g, {-1}).to_string(), "4 mod 5");
  EXPECT_TRUE((Grade(g, {3}) + Grade(g, {2})).is_zero());
  EXPECT_EQ(Grade(g, {2}).scaled(-3), Grade(g, {4}));
}

TEST(Grading, LexOrder) {
  const auto g = GradingGroup::free_lex(2);
  EXPECT_EQ(compare(Grade(g, {1, -5}), Grade(g, {0, 9})), Ordering::Greater);
  EXPECT_EQ(compare(Grade(g, {0, 1}), Grade(g, {0, 1})), Ordering::Equal);
  EXPECT_EQ(Grade(g, {1, -2}).to_string(), "(1,-2)");
}

TEST(Grading, CompareRefusesCyclic) {
  const auto g = GradingGroup::cyclic(3);
  EXPECT_THROW(compare(Grade(g, {1}), Grade(g, {2})), UnorderedGradingError);
}

TEST(Grading, MixedGroupsRejected) {
  EXPECT_THROW(Grade(GradingGroup::free_lex(1), {1}) + Grade(GradingGroup::free_lex(2), {1, 0}),
               MismatchError);
  EXPECT_THROW(Grade(GradingGroup::free_lex(2), {1}), Error);
}

// Translation invariance and totality of the lex order on random grades.
TEST(Grading, OrderIsTranslationInvariant) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  const auto g = GradingGroup::free_lex(3);
  auto random_grade = [&] { return Grade(g, {d(rng), d(rng), d(rng)}); };
  for (int i = 0; i < 2000; ++i) {
    const Grade a = random_grade(), b = random_grade(), c = random_grade();
    EXPECT_EQ(compare(a, b), compare(a + c, b + c));
    const bool less = GradeKeyLess{}(a, b), greater = GradeKeyLess{}(b, a);
    EXPECT_EQ(a == b, !less && !greater);
    EXPECT_EQ((a - a).is_zero(), true);
  }
}

TEST(Grading, GroupLaws) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-20, 20);
  for (const auto& g : {GradingGroup::free_lex(2), GradingGroup::cyclic(6)}) {
    auto random_grade = [&] {
      std::vector<std::int64_t> c(g.rank());
      for (auto& x : c) x = d(rng);
      return Grade(g, c);
    };
    for (int i = 0; i < 500; ++i) {
      const Grade a = random_grade(), b = random_grade(), c = random_grade();
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a + Grade::zero(g), a);
      EXPECT_TRUE((a + (-a)).is_zero());
    }
  }
}
