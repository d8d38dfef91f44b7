#include <gtest/gtest.h>

#include <numeric>

#include "gradedring/errors.hpp"
#include "gradedring/linear.hpp"
#include "gradedring/scalars.hpp"

using namespace gradedring;

TEST(Scalars, Names) {
  EXPECT_EQ(BaseRing::integers().to_string(), "Z");
  EXPECT_EQ(BaseRing::rationals().to_string(), "Q");
  EXPECT_EQ(BaseRing::integers_mod(6).to_string(), "Zmod 6");
}

TEST(Scalars, ModularArithmetic) {
  const auto z6 = BaseRing::integers_mod(6);
  EXPECT_EQ((Scalar(z6, 4) + Scalar(z6, 5)).value(), 3);
  EXPECT_EQ((Scalar(z6, 2) * Scalar(z6, 3)).value(), 0);
  EXPECT_EQ((-Scalar(z6, 1)).value(), 5);
  EXPECT_THROW(Scalar(z6, 1) + Scalar(BaseRing::integers_mod(4), 1), MismatchError);
  EXPECT_THROW(Scalar(z6, mpq_class(1, 2)), Error);
}

TEST(Scalars, Units) {
  const auto z6 = BaseRing::integers_mod(6);
  EXPECT_EQ(scalar_is_unit(Scalar(z6, 5))->value(), 5);
  EXPECT_FALSE(scalar_is_unit(Scalar(z6, 3)));
  EXPECT_EQ(scalar_is_unit(Scalar(BaseRing::integers(), -1))->value(), -1);
  EXPECT_FALSE(scalar_is_unit(Scalar(BaseRing::integers(), 2)));
  EXPECT_EQ(scalar_is_unit(Scalar(BaseRing::rationals(), mpq_class(2, 3)))->value(), mpq_class(3, 2));
}

TEST(Scalars, Nilpotents) {
  const auto z8 = BaseRing::integers_mod(8);
  EXPECT_EQ(*scalar_is_nilpotent(Scalar(z8, 2)), 3u);
  EXPECT_EQ(*scalar_is_nilpotent(Scalar(z8, 4)), 2u);
  EXPECT_FALSE(scalar_is_nilpotent(Scalar(BaseRing::integers_mod(6), 2)));
  EXPECT_EQ(*scalar_is_nilpotent(Scalar(z8, 0)), 1u);
  EXPECT_TRUE(BaseRing::integers_mod(30).is_reduced());
  EXPECT_FALSE(BaseRing::integers_mod(12).is_reduced());
}

// Brute force over Z/n for small n against the closed forms.
TEST(Scalars, AgreesWithScan) {
  for (int n = 2; n <= 40; ++n) {
    const auto zn = BaseRing::integers_mod(n);
    for (int a = 0; a < n; ++a) {
      bool unit = false;
      for (int b = 0; b < n; ++b) unit = unit || (a * b) % n == 1 % n;
      EXPECT_EQ(scalar_is_unit(Scalar(zn, a)).has_value(), unit) << a << " mod " << n;
      int p = a % n, k = 1;
      while (p != 0 && k <= n) {
        p = (p * a) % n;
        ++k;
      }
      auto e = scalar_is_nilpotent(Scalar(zn, a));
      if (p == 0) {
        ASSERT_TRUE(e.has_value());
        EXPECT_EQ(*e, static_cast<unsigned>(k));
      } else {
        EXPECT_FALSE(e.has_value());
      }
      int ann = n;
      for (int b = 1; b <= n; ++b) {
        if ((a * b) % n == 0) {
          ann = b;
          break;
        }
      }
      EXPECT_EQ(scalar_annihilator_generator(Scalar(zn, a)).value(), ann % n) << a << " mod " << n;
    }
  }
}

TEST(Scalars, Factorize) {
  for (long n = 2; n < 3000; ++n) {
    long prod = 1;
    mpz_class prev = 1;
    for (const auto& [p, e] : factorize(n)) {
      EXPECT_GT(p, prev);
      prev = p;
      EXPECT_NE(mpz_probab_prime_p(p.get_mpz_t(), 25), 0);
      for (unsigned i = 0; i < e; ++i) prod *= p.get_si();
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(Linear, SolveOverRationals) {
  const auto q = BaseRing::rationals();
  const std::vector<Vector> rows{{1, 2, 0}, {0, 1, 1}};
  auto lambda = solve_combination(q, rows, {2, 5, 1});
  ASSERT_TRUE(lambda);
  EXPECT_EQ((*lambda)[0], 2);
  EXPECT_EQ((*lambda)[1], 1);
  EXPECT_FALSE(solve_combination(q, rows, {0, 0, 1}));
}

TEST(Linear, SolveOverPrimeField) {
  const auto f5 = BaseRing::integers_mod(5);
  auto lambda = solve_combination(f5, {{2, 0}, {0, 3}}, {1, 1});
  ASSERT_TRUE(lambda);
  EXPECT_EQ(f5.mul((*lambda)[0], 2), 1);
  EXPECT_EQ(f5.mul((*lambda)[1], 3), 1);
}

TEST(Linear, IntegerSpan) {
  EXPECT_TRUE(integer_span_contains({{4, 0}, {6, 0}, {0, 1}}, {2, 3}));
  EXPECT_FALSE(integer_span_contains({{4, 0}, {6, 0}}, {1, 0}));
  EXPECT_TRUE(integer_span_contains({{3, 5}, {2, 3}}, {1, 0}));
}
