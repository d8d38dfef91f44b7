#include <gtest/gtest.h>

#include "gradedring/constructors.hpp"
#include "gradedring/dsl.hpp"
#include "gradedring/errors.hpp"
#include "gradedring/spectra.hpp"
#include "support/naive.hpp"

using namespace gradedring;

namespace {

RingHandle ring(const std::string& text) { return dsl::load_ring(text).ring; }

// Number of primes p dividing n, by trial division over small integers.
std::size_t prime_divisor_count(long n) {
  std::size_t count = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ++count;
      while (n % p == 0) n /= p;
    }
  }
  return count + (n > 1 ? 1 : 0);
}

}  // namespace

TEST(Pierce, Z6) {
  const FiniteRingTable t(ring("ring Z { base Zmod 6\n grading Z }"));
  const PierceData d = pierce_spectrum(t);
  EXPECT_EQ(d.components_spec.size(), 2u);
  EXPECT_EQ(d.max_regular_ideals.size(), 2u);
  EXPECT_EQ(describe_set(t, d.primitive_idempotents), "{3, 4}");
}

TEST(Pierce, DualNumbers) {
  const FiniteRingTable t(ring("ring A { base Zmod 4\n grading Z\n gen x deg 1\n rel x^2 }"));
  const PierceData d = pierce_spectrum(t);
  EXPECT_EQ(d.components_spec.size(), 1u);
  EXPECT_EQ(describe_set(t, d.primitive_idempotents), "{1}");
}

TEST(Pierce, ProductRing) {
  const auto a = ring("ring A { base Zmod 2\n grading Z\n gen x deg 1\n rel x^2 }");
  const auto b = ring("ring B { base Zmod 3\n grading Z\n gen y deg 1\n rel y^2 }");
  const FiniteRingTable t(product_ring(a, b));
  EXPECT_EQ(pierce_spectrum(t).components_spec.size(), 2u);
}

TEST(GradedPrimes, TorsionFree) {
  const FiniteRingTable t(ring("ring A { base Zmod 6\n grading Z\n gen x deg 1\n rel x^3 }"));
  const GradedPrimes g = graded_primes(t);
  EXPECT_EQ(g.graded.size(), 2u);
  EXPECT_TRUE(g.witnesses.empty());
}

TEST(GradedPrimes, CyclicHasUngradedMinimalPrime) {
  const FiniteRingTable t(ring("ring T { base Zmod 5\n grading Zmod 5\n gen x deg 1\n rel x^5 - 1 }"));
  const GradedPrimes g = graded_primes(t);
  EXPECT_TRUE(g.graded.empty());
  ASSERT_EQ(g.minimal.size(), 1u);
  ASSERT_EQ(g.witnesses.size(), 1u);
  EXPECT_EQ(t.element(g.witnesses[0].second.member).to_string(), "x + 4");
}

TEST(GradedPrimes, Field) {
  const FiniteRingTable t(ring("ring F { base Zmod 5\n grading Z }"));
  const GradedPrimes g = graded_primes(t);
  ASSERT_EQ(g.graded.size(), 1u);
  EXPECT_EQ(t.primes()[0].size(), 1u);
}

TEST(Pi0, Counts) {
  auto counts = [](const RingHandle& r) {
    const FiniteRingTable t(r);
    const Pi0Report p = pi0_equivalences(t);
    return std::vector<std::size_t>{p.spec_components, p.spec_r0_components, p.spec_star_components};
  };
  EXPECT_EQ(counts(ring("ring A { base Zmod 6\n grading Z\n gen x deg 1\n rel x^3 }")),
            (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(counts(ring("ring A { base Zmod 4\n grading Z\n gen x deg 1\n rel x^2 }")),
            (std::vector<std::size_t>{1, 1, 1}));
  const auto a = ring("ring A { base Zmod 2\n grading Z\n gen x deg 1\n rel x^2 }");
  const auto b = ring("ring B { base Zmod 3\n grading Z\n gen y deg 1\n rel y^2 }");
  EXPECT_EQ(counts(product_ring(a, b)), (std::vector<std::size_t>{2, 2, 2}));
}

TEST(Pi0, NeedsTorsionFreeGrading) {
  const FiniteRingTable t(ring("ring T { base Zmod 3\n grading Zmod 3\n gen x deg 1\n rel x^3 - 1 }"));
  EXPECT_THROW(pi0_equivalences(t), PreconditionError);
}

TEST(Laurent, SmallModuli) {
  const LaurentReport r12 = laurent_spec_star(12);
  ASSERT_EQ(r12.graded_primes.size(), 2u);
  EXPECT_EQ(r12.graded_primes[0].p, 2);
  EXPECT_EQ(r12.graded_primes[1].p, 3);
  EXPECT_TRUE(r12.bijection);
  EXPECT_TRUE(r12.exhaustive);
  const LaurentReport r5 = laurent_spec_star(5);
  ASSERT_EQ(r5.graded_primes.size(), 1u);
  EXPECT_EQ(r5.graded_primes[0].degree_zero_generator, 0);
  EXPECT_THROW(laurent_spec_star(1), PreconditionError);
}

TEST(Laurent, CountMatchesFactorization) {
  for (long n = 2; n <= 400; ++n) {
    EXPECT_EQ(laurent_spec_star(n).graded_primes.size(), prime_divisor_count(n)) << n;
  }
  for (long n : {999983L, 1000000L, 510510L, 65536L}) {
    EXPECT_EQ(laurent_spec_star(n).graded_primes.size(), prime_divisor_count(n)) << n;
  }
}

TEST(Proj, Plane) {
  const auto r = ring("ring P { base Q\n grading Z\n gen x deg 1\n gen y deg 1 }");
  auto gens = [&](std::initializer_list<const char*> texts) {
    std::vector<Element> out;
    for (auto t : texts) out.push_back(naive::parse(r, t));
    return out;
  };
  const auto g1 = gens({"x", "y"});
  const ProjResult a = proj_quasicompact(r, g1, 10);
  EXPECT_TRUE(a.quasi_compact);
  ASSERT_EQ(a.certificates.size(), 2u);
  EXPECT_EQ(a.certificates[0].exponent, 1u);
  EXPECT_TRUE(verify(a, r, g1));

  const auto g2 = gens({"x^2*y", "x*y^2"});
  const ProjResult b = proj_quasicompact(r, g2, 10);
  EXPECT_FALSE(b.quasi_compact);
  EXPECT_EQ(b.unresolved.size(), 2u);
  EXPECT_NE(b.note.find("y-degree"), std::string::npos);

  const auto g3 = gens({"x^2", "y^3"});
  const ProjResult c = proj_quasicompact(r, g3, 10);
  EXPECT_TRUE(c.quasi_compact);
  EXPECT_EQ(c.certificates[0].exponent, 2u);
  EXPECT_EQ(c.certificates[1].exponent, 3u);

  const auto g4 = gens({"x + y", "x - y"});
  EXPECT_TRUE(proj_quasicompact(r, g4, 3).quasi_compact);
  EXPECT_THROW(proj_quasicompact(r, gens({"1"}), 3), PreconditionError);
}

TEST(Proj, Quotient) {
  const auto r = ring("ring C { base Zmod 5\n grading Z\n gen x deg 1\n gen y deg 1\n rel x^2 - y^2 }");
  const std::vector<Element> gens{naive::parse(r, "y")};
  const ProjResult res = proj_quasicompact(r, gens, 5);
  EXPECT_TRUE(res.quasi_compact);
  EXPECT_EQ(res.certificates[0].exponent, 2u);  // x^2 = y * y
  EXPECT_TRUE(verify(res, r, gens));
}
