#include <gtest/gtest.h>

#include <random>

#include "gradedring/constructors.hpp"
#include "gradedring/dsl.hpp"
#include "gradedring/errors.hpp"
#include "gradedring/oracle.hpp"
#include "support/naive.hpp"

using namespace gradedring;
using naive::parse;

namespace {

RingHandle ring(const std::string& text) { return dsl::load_ring(text).ring; }

const char* kLaurent = "ring S { base Zmod 6\n grading Z\n gen x deg 1 invertible }";
const char* kDeligne =
    "ring S { base Q\n grading Z\n gen a1 deg 0\n gen a2 deg 0\n gen a3 deg 0\n gen a4 deg 0\n"
    " gen T deg 1\n rel a1*a3\n rel a2*a4\n rel a1*a4 + a2*a3 }";

}  // namespace

TEST(Algebra, LaurentProduct) {
  const auto r = ring(kLaurent);
  const Element f = parse(r, "2*x + 3*x^-1");
  const Element g = parse(r, "3*x + 2*x^-1");
  EXPECT_EQ((f * g).to_string(), "1");
  EXPECT_TRUE((f * g).is_one());
  EXPECT_EQ(parse(r, "x^-2 * x^3").to_string(), "x");
}

TEST(Algebra, NegativePowers) {
  const auto r = ring(kLaurent);
  EXPECT_EQ(parse(r, "x").pow(-3).to_string(), "x^-3");
  EXPECT_THROW(parse(r, "2*x + 3*x^-1").pow(-1), Error);
  const auto p = ring("ring P { base Z\n grading Z\n gen y deg 1 }");
  EXPECT_THROW(parse(p, "y").pow(-1), Error);
}

TEST(Algebra, ComponentsAndSupport) {
  const auto r = ring("ring P { base Z\n grading Z\n gen x deg 1\n gen y deg 2 }");
  const Element f = parse(r, "3 + x^2 - y + x*y");
  const auto comps = homogeneous_components(f);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].second.to_string(), "3");
  EXPECT_EQ(comps[1].second.to_string(), "x^2 - y");
  EXPECT_EQ(comps[1].first.to_string(), "2");
  // x*y has degree 3.
  EXPECT_EQ(component(f, Grade(r->grading(), {3})).to_string(), "x*y");
  const auto [lo, hi] = support_bounds(f);
  EXPECT_EQ(lo.to_string(), "0");
  EXPECT_EQ(hi.to_string(), "3");
  EXPECT_THROW(support_bounds(Element::constant(r, 0)), PreconditionError);
  EXPECT_FALSE(f.is_homogeneous());
}

TEST(Algebra, SupportBoundsNeedOrder) {
  const auto r = ring("ring T { base Zmod 5\n grading Zmod 5\n gen x deg 1\n rel x^5 - 1 }");
  EXPECT_THROW(support_bounds(parse(r, "x + 1")), UnorderedGradingError);
  EXPECT_EQ(homogeneous_components(parse(r, "x + 1")).size(), 2u);
}

TEST(Algebra, MonicReduction) {
  const auto r = ring("ring T { base Zmod 5\n grading Zmod 5\n gen x deg 1\n rel x^5 - 1 }");
  EXPECT_EQ(parse(r, "x^7").to_string(), "x^2");
  EXPECT_EQ(parse(r, "(x - 1)^5").to_string(), "0");
  EXPECT_EQ(r->reduction(), Reduction::MonicUnivariate);
}

TEST(Algebra, PerDegreeLinearReduction) {
  const auto r = ring(kDeligne);
  EXPECT_EQ(r->reduction(), Reduction::PerDegreeLinear);
  EXPECT_EQ(parse(r, "(a1*T + a2)*(a3*T + a4)").to_string(), "0");
  EXPECT_EQ(parse(r, "a1*a4 + a2*a3").to_string(), "0");
  EXPECT_EQ(parse(r, "a1*a4"), parse(r, "-a2*a3"));
  EXPECT_FALSE(parse(r, "a2*a3*T").is_zero());
}

// Quotient dimension of degree-2 forms in a1..a4: 10 monomials, 3 relations.
TEST(Algebra, SliceDimension) {
  const auto r = ring(
      "ring R { base Q\n grading Z\n gen a1 deg 0\n gen a2 deg 0\n gen a3 deg 0\n gen a4 deg 0\n"
      " rel a1*a3\n rel a2*a4\n rel a1*a4 + a2*a3 }");
  EXPECT_EQ(r->slice_quotient_dimension(2), 7u);
  EXPECT_EQ(r->slice_quotient_dimension(1), 4u);
}

TEST(Algebra, MonomialIdealReduction) {
  const auto r = ring("ring R { base Zmod 4\n grading Z^2 lex\n gen x deg (1,0)\n gen y deg (0,1)\n rel x^2\n rel y^2 }");
  EXPECT_EQ(r->reduction(), Reduction::MonomialIdeal);
  EXPECT_EQ(parse(r, "(1 + x + y)^3").to_string(), "2*x*y + 3*x + 3*y + 1");
  EXPECT_EQ(parse(r, "x*y").degree().to_string(), "(1,1)");
}

TEST(Algebra, RejectsNonHomogeneousRelation) {
  try {
    ring("ring R { base Z\n grading Z\n gen x deg 1\n rel x*x - x }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("relation not homogeneous: grades {1,2}"), std::string::npos);
  }
}

TEST(Algebra, MismatchedRings) {
  const auto a = ring(kLaurent);
  const auto b = ring(kLaurent);
  EXPECT_THROW(Element::constant(a, 1) + Element::constant(b, 1), MismatchError);
}

// Ring axioms on random elements of several rings.
TEST(Algebra, RingAxioms) {
  std::mt19937_64 rng(3);
  const std::vector<std::pair<std::string, std::string>> cases{
      {kLaurent, "x"},
      {"ring R { base Zmod 8\n grading Z\n gen x deg 1\n rel x^3 }", "x"},
      {kDeligne, "a1"},
      {"ring R { base Zmod 4\n grading Z^2 lex\n gen x deg (1,0)\n gen y deg (0,1)\n rel x^2\n rel y^2 }", "x"},
  };
  for (const auto& [text, gen] : cases) {
    const auto r = ring(text);
    std::uniform_int_distribution<int> coeff(-3, 3), pick(0, static_cast<int>(r->generators().size()) - 1),
        exp(0, 2);
    auto random_element = [&] {
      Element f = Element::constant(r, 0);
      for (int t = 0; t < 3; ++t) {
        Element m = Element::constant(r, coeff(rng));
        for (int v = 0; v < 2; ++v) {
          m = m * Element::generator(r, r->generators()[pick(rng)].name).pow(exp(rng));
        }
        f = f + m;
      }
      return f;
    };
    for (int i = 0; i < 60; ++i) {
      const Element a = random_element(), b = random_element(), c = random_element();
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, Element::constant(r, 0));
      // Components of a product sum back to it.
      Element sum = Element::constant(r, 0);
      for (const auto& [g, comp] : homogeneous_components(a * b)) {
        EXPECT_TRUE(comp.is_homogeneous());
        EXPECT_EQ(comp.degree(), g);
        sum = sum + comp;
      }
      EXPECT_EQ(sum, a * b);
    }
  }
}

TEST(Constructors, ProductRing) {
  const auto a = ring("ring A { base Zmod 2\n grading Z\n gen x deg 1\n rel x^2 }");
  const auto b = ring("ring B { base Zmod 3\n grading Z\n gen y deg 1\n rel y^2 }");
  const auto p = product_ring(a, b);
  const FiniteAlgebra alg(p);
  EXPECT_EQ(alg.size(), 36u);
  const Element ea = Element::generator(p, "a.1");
  const Element eb = Element::generator(p, "b.1");
  EXPECT_EQ((ea * eb).to_string(), "0");
  EXPECT_EQ(ea + eb, Element::constant(p, 1));
  EXPECT_EQ(Element::generator(p, "b.y").degree().to_string(), "-1");
}

TEST(Constructors, TrivialExtension) {
  const auto r = ring("ring A { base Zmod 4\n grading Z\n gen x deg 1\n rel x^2 }");
  const auto t = trivial_extension(r, 2);
  // R has 16 elements and M = 2R has 4.
  EXPECT_EQ(FiniteAlgebra(t).size(), 64u);
  const Element m = Element::generator(t, "m.1");
  EXPECT_EQ((m * m).to_string(), "0");
  EXPECT_THROW(trivial_extension(r, 4), Error);
}

// Z8 ⊃ (2) ⊃ (4) ⊃ 0: every graded piece is Z2, products e^i e^j = e^(i+j).
TEST(Constructors, AssociatedGraded) {
  const auto gr = associated_graded(8, 2);
  EXPECT_EQ(FiniteAlgebra(gr).size(), 8u);
  const Element e = Element::generator(gr, "e");
  EXPECT_EQ((e * e).to_string(), "e^2");
  EXPECT_EQ((e * e * e).to_string(), "0");
  EXPECT_EQ(gr->base().to_string(), "Zmod 2");
}

TEST(Constructors, GroupRing) {
  const auto r = group_ring(BaseRing::rationals(), 3);
  const Element g = Element::generator(r, "g");
  EXPECT_TRUE(g.pow(3).is_one());
  EXPECT_EQ(r->grading().to_string(), "Zmod 3");
}

TEST(Constructors, TabulateAgreesWithPresentation) {
  const auto r = ring("ring A { base Zmod 6\n grading Z\n gen x deg 1\n rel x^3 }");
  const auto t = Ring::tabulated(tabulate(r));
  const FiniteAlgebra a(r), b(t);
  ASSERT_EQ(a.size(), b.size());
  for (std::uint32_t i = 0; i < a.size(); i += 7) {
    for (std::uint32_t j = 0; j < a.size(); j += 5) {
      EXPECT_EQ(a.mul(i, j), b.mul(i, j));
    }
  }
}
