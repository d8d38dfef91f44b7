#include "gradedring/constructors.hpp"

#include <map>

#include "gradedring/errors.hpp"

namespace gradedring {

namespace {

TermMap index_terms(const std::map<Monomial, int>& index, const TermMap& terms,
                    const std::string& ring_name) {
  TermMap out;
  for (const auto& [m, c] : terms) {
    auto it = index.find(m);
    if (it == index.end()) throw PreconditionError("basis of " + ring_name + " is not closed");
    out[Monomial{{it->second}}] = c;
  }
  return out;
}

void require_natural_rank1(const RingHandle& r) {
  const auto& g = r->grading();
  if (g.kind() != GradingGroup::Kind::FreeLex || g.rank() != 1) {
    throw PreconditionError("product factors need a Z-grading, " + r->name() + " has " +
                            g.to_string());
  }
}

mpz_class to_mpz(unsigned long v) { return mpz_class(v); }

}  // namespace

Ring::Tabulation tabulate(const RingHandle& ring) {
  if (ring->kind() == Ring::Kind::Tabulated) return ring->tabulation();
  auto fb = ring->finite_basis();
  if (!fb) throw PreconditionError("ring " + ring->name() + " is not finite");
  const std::size_t n = fb->monomials.size();
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < n; ++i) index[fb->monomials[i]] = static_cast<int>(i);

  Ring::Tabulation t{ring->base(), ring->grading(), {}, {}, {}, ring->name()};
  for (std::size_t i = 0; i < n; ++i) {
    t.basis.push_back(BasisElement{Element::monomial(ring, fb->monomials[i]).to_string(),
                                   ring->grade_of(fb->monomials[i]), to_mpz(fb->orders[i])});
  }
  t.products.assign(n, std::vector<TermMap>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      TermMap prod = ring->multiply(TermMap{{fb->monomials[i], mpq_class(1)}},
                                    TermMap{{fb->monomials[j], mpq_class(1)}});
      t.products[i][j] = index_terms(index, prod, ring->name());
      t.products[j][i] = t.products[i][j];
    }
  }
  t.one = index_terms(index, ring->one_terms(), ring->name());
  return t;
}

RingHandle product_ring(const RingHandle& r, const RingHandle& s) {
  require_natural_rank1(r);
  require_natural_rank1(s);
  Ring::Tabulation tr = tabulate(r);
  Ring::Tabulation ts = tabulate(s);
  for (const auto* t : {&tr, &ts}) {
    for (const auto& b : t->basis) {
      if (b.grade.coords()[0] < 0) {
        throw PreconditionError("product factor " + t->name + " has a component of negative degree");
      }
    }
  }
  mpz_class n;
  mpz_lcm(n.get_mpz_t(), tr.base.modulus().get_mpz_t(), ts.base.modulus().get_mpz_t());

  const GradingGroup z = GradingGroup::free_lex(1);
  Ring::Tabulation t{BaseRing::integers_mod(n), z, {}, {}, {}, r->name() + "x" + s->name()};
  const std::size_t a = tr.basis.size();
  const std::size_t b = ts.basis.size();
  for (const auto& e : tr.basis) t.basis.push_back(BasisElement{"a." + e.name, e.grade, e.order});
  for (const auto& e : ts.basis) t.basis.push_back(BasisElement{"b." + e.name, -e.grade, e.order});
  t.products.assign(a + b, std::vector<TermMap>(a + b));
  auto shift = [](const TermMap& terms, int offset) {
    TermMap out;
    for (const auto& [m, c] : terms) out[Monomial{{m.exps[0] + offset}}] = c;
    return out;
  };
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) t.products[i][j] = tr.products[i][j];
  }
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      t.products[a + i][a + j] = shift(ts.products[i][j], static_cast<int>(a));
    }
  }
  t.one = tr.one;
  for (const auto& [m, c] : shift(ts.one, static_cast<int>(a))) t.one[m] = c;
  return Ring::tabulated(std::move(t));
}

RingHandle trivial_extension(const RingHandle& r, const mpz_class& c) {
  Ring::Tabulation tr = tabulate(r);
  const mpz_class& n = tr.base.modulus();
  const std::size_t k = tr.basis.size();
  for (const auto& e : tr.basis) {
    if (e.order != n) throw PreconditionError("trivial extension needs R free over " + tr.base.to_string());
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), mpz_class(c % n).get_mpz_t());
  const mpz_class module_order = n / g;
  if (module_order == 1) throw PreconditionError("trivial extension by the zero module");

  Ring::Tabulation t{tr.base, tr.grading, tr.basis, {}, tr.one,
                     r->name() + "x" + mpz_class(c).get_str() + r->name()};
  for (const auto& e : tr.basis) t.basis.push_back(BasisElement{"m." + e.name, e.grade, module_order});
  t.products.assign(2 * k, std::vector<TermMap>(2 * k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      t.products[i][j] = tr.products[i][j];
      // b_i * (c b_j) = c (b_i b_j): same constants, landing in the module part.
      TermMap shifted;
      for (const auto& [m, v] : tr.products[i][j]) {
        shifted[Monomial{{m.exps[0] + static_cast<int>(k)}}] = v;
      }
      t.products[i][k + j] = shifted;
      t.products[k + j][i] = shifted;
    }
  }
  return Ring::tabulated(std::move(t));
}

RingHandle associated_graded(const mpz_class& n, const mpz_class& g) {
  if (n < 2) throw PreconditionError("associated graded needs n >= 2");
  // d[k] generates (g)^k = (g^k) in Z/n.
  std::vector<mpz_class> d;
  mpz_class power = 1;
  for (;;) {
    mpz_class dk;
    mpz_class pk = power % n;
    mpz_gcd(dk.get_mpz_t(), pk.get_mpz_t(), n.get_mpz_t());
    if (dk == 0) dk = n;
    if (!d.empty() && d.back() == dk) break;
    d.push_back(dk);
    if (dk == n) break;
    power *= g;
  }
  std::vector<mpz_class> m;
  for (std::size_t k = 0; k + 1 < d.size(); ++k) m.push_back(d[k + 1] / d[k]);
  // If (g) stabilized before reaching 0, the last ideal contributes nothing.
  if (m.empty()) throw PreconditionError("associated graded ring of a unit ideal is zero");
  mpz_class base = 1;
  for (const auto& mk : m) mpz_lcm(base.get_mpz_t(), base.get_mpz_t(), mk.get_mpz_t());

  const GradingGroup z = GradingGroup::free_lex(1);
  const std::size_t len = m.size();
  Ring::Tabulation t{BaseRing::integers_mod(base), z, {}, {}, {}, "gr"};
  for (std::size_t k = 0; k < len; ++k) {
    std::string name = k == 0 ? "1" : (k == 1 ? "e" : "e^" + std::to_string(k));
    t.basis.push_back(BasisElement{name, Grade(z, {static_cast<std::int64_t>(k)}), m[k]});
  }
  t.products.assign(len, std::vector<TermMap>(len));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      if (i + j >= len) continue;
      mpz_class coeff = (d[i] * d[j] / d[i + j]) % m[i + j];
      if (coeff != 0) t.products[i][j][Monomial{{static_cast<int>(i + j)}}] = mpq_class(coeff);
    }
  }
  t.one[Monomial{{0}}] = 1;
  return Ring::tabulated(std::move(t));
}

RingHandle group_ring(const BaseRing& base, std::int64_t m) {
  const GradingGroup grading = GradingGroup::cyclic(m);
  RingPresentation p;
  p.base = base;
  p.grading = grading;
  p.generators = {Generator{"g", Grade(grading, {1}), false}};
  TermMap rel;
  rel[Monomial{{static_cast<int>(m)}}] = 1;
  rel[Monomial{{0}}] = -1;
  p.relations = {rel};
  p.reduction = Reduction::MonicUnivariate;
  p.name = base.to_string() + "[C" + std::to_string(m) + "]";
  return Ring::build(std::move(p));
}

}  // namespace gradedring
