#include "gradedring/spectra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gradedring/errors.hpp"
#include "gradedring/linear.hpp"

namespace gradedring {

namespace {

template <class Set>
bool subset(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Groups `items` by the equivalence generated by `linked`.
Partition close_partition(const std::vector<std::size_t>& items,
                          const std::function<bool(std::size_t, std::size_t)>& linked) {
  std::vector<std::size_t> parent(items.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (linked(items[i], items[j])) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < items.size(); ++i) blocks[find(i)].push_back(items[i]);
  Partition out;
  for (auto& [root, block] : blocks) {
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// p and q lie in one component unless some idempotent e has e in p and 1 - e in q.
Partition components_by_idempotents(const FiniteRingTable& t, const std::vector<std::size_t>& primes) {
  const auto& alg = t.algebra();
  return close_partition(primes, [&](std::size_t a, std::size_t b) {
    const auto& p = t.primes()[a];
    const auto& q = t.primes()[b];
    for (auto e : t.idempotents()) {
      if (t.contains(p, e) && t.contains(q, alg.sub(alg.one(), e))) return false;
      if (t.contains(q, e) && t.contains(p, alg.sub(alg.one(), e))) return false;
    }
    return true;
  });
}

std::size_t block_of(const Partition& part, std::size_t item) {
  for (std::size_t b = 0; b < part.size(); ++b) {
    if (std::binary_search(part[b].begin(), part[b].end(), item)) return b;
  }
  throw TheoremViolation("prime " + std::to_string(item) + " is in no component");
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

PierceData pierce_spectrum(const FiniteRingTable& t) {
  PierceData d;
  d.table = &t;
  d.idempotents = t.idempotents();
  d.primitive_idempotents = t.primitive_idempotents();
  const auto& alg = t.algebra();

  std::uint32_t sum = alg.zero();
  const auto& prim = d.primitive_idempotents;
  for (std::size_t i = 0; i < prim.size(); ++i) {
    if (prim[i] == alg.zero()) throw TheoremViolation("zero primitive idempotent");
    sum = alg.add(sum, prim[i]);
    for (std::size_t j = i + 1; j < prim.size(); ++j) {
      if (alg.mul(prim[i], prim[j]) != alg.zero()) {
        throw TheoremViolation("primitive idempotents are not orthogonal");
      }
    }
  }
  if (sum != alg.one()) throw TheoremViolation("primitive idempotents do not sum to 1");

  for (const auto& p : t.primes()) {
    const ElementSet p_star = t.ideal_generated(intersect(p, d.idempotents));
    auto it = std::find(d.max_regular_ideals.begin(), d.max_regular_ideals.end(), p_star);
    d.regular_of_prime.push_back(static_cast<std::size_t>(it - d.max_regular_ideals.begin()));
    if (it == d.max_regular_ideals.end()) d.max_regular_ideals.push_back(p_star);
  }

  // Group primes by V(p_*).
  const auto primes = all_indices(t.primes().size());
  std::map<std::size_t, std::vector<std::size_t>> by_regular;
  for (std::size_t r = 0; r < d.max_regular_ideals.size(); ++r) {
    for (auto q : primes) {
      if (subset(d.max_regular_ideals[r], t.primes()[q])) by_regular[r].push_back(q);
    }
  }
  for (auto& [r, block] : by_regular) d.components_spec.push_back(block);
  std::sort(d.components_spec.begin(), d.components_spec.end());

  if (d.components_spec != components_by_idempotents(t, primes)) {
    throw TheoremViolation("V(p_*) blocks differ from the idempotent-separation components");
  }
  if (d.max_regular_ideals.size() != prim.size() || d.components_spec.size() != prim.size()) {
    throw TheoremViolation("Pierce points, primitive idempotents and components disagree in number");
  }

  const auto star = graded_primes(t).graded;
  for (const auto& block : d.components_spec) {
    std::vector<std::size_t> inside;
    for (auto q : block) {
      if (std::binary_search(star.begin(), star.end(), q)) inside.push_back(q);
    }
    if (!inside.empty()) d.components_spec_star.push_back(inside);
  }
  return d;
}

GradedPrimes graded_primes(const FiniteRingTable& t) {
  GradedPrimes out;
  const auto& primes = t.primes();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (auto w = t.graded_witness(primes[i])) {
      out.witnesses.emplace_back(i, *w);
    } else {
      out.graded.push_back(i);
    }
    bool minimal = true;
    for (std::size_t j = 0; j < primes.size() && minimal; ++j) {
      if (j != i && primes[j] != primes[i] && subset(primes[j], primes[i])) minimal = false;
    }
    if (minimal) out.minimal.push_back(i);
  }
  if (t.ring()->grading().is_torsion_free()) {
    for (auto m : out.minimal) {
      if (!std::binary_search(out.graded.begin(), out.graded.end(), m)) {
        throw TheoremViolation("minimal prime " + describe_set(t, primes[m]) +
                               " is not graded under a torsion-free grading");
      }
    }
  }
  return out;
}

Pi0Report pi0_equivalences(const FiniteRingTable& t) {
  if (!t.ring()->grading().is_torsion_free()) {
    throw PreconditionError("component comparison needs a torsion-free grading, not " +
                            t.ring()->grading().to_string());
  }
  Pi0Report r;
  const FiniteRingTable r0 = t.degree_zero();

  r.idempotents_in_r0 = subset(t.idempotents(), r0.universe());
  r.idempotent_sets_agree = t.idempotents() == r0.idempotents();

  const PierceData pd = pierce_spectrum(t);
  const PierceData pd0 = pierce_spectrum(r0);
  r.spec = pd.components_spec;
  r.spec_r0 = pd0.components_spec;
  r.spec_star = pd.components_spec_star;
  r.spec_components = r.spec.size();
  r.spec_r0_components = r.spec_r0.size();
  r.spec_star_components = r.spec_star.size();

  // V(M) -> V(M ∩ R_0): contract each prime and find its component downstairs.
  for (const auto& block : r.spec) {
    std::optional<std::size_t> target;
    for (auto q : block) {
      const ElementSet contracted = intersect(t.primes()[q], r0.universe());
      auto it = std::find(r0.primes().begin(), r0.primes().end(), contracted);
      if (it == r0.primes().end()) {
        throw TheoremViolation("contraction of " + describe_set(t, t.primes()[q]) +
                               " is not a prime of R_0");
      }
      const std::size_t b = block_of(r.spec_r0, static_cast<std::size_t>(it - r0.primes().begin()));
      if (target && *target != b) throw TheoremViolation("contraction map is not well defined on components");
      target = b;
    }
    r.to_r0.push_back(*target);
  }

  // V(M) -> Spec* ∩ V(M).
  for (const auto& block : r.spec) {
    std::optional<std::size_t> target;
    for (std::size_t b = 0; b < r.spec_star.size(); ++b) {
      if (subset(r.spec_star[b], block)) {
        if (target) throw TheoremViolation("a component meets several graded components");
        target = b;
      }
    }
    if (!target) throw TheoremViolation("a component of Spec contains no graded prime");
    r.to_star.push_back(*target);
  }

  auto bijective = [](const std::vector<std::size_t>& map, std::size_t codomain) {
    std::set<std::size_t> image(map.begin(), map.end());
    return image.size() == map.size() && image.size() == codomain;
  };
  if (!r.idempotents_in_r0 || !r.idempotent_sets_agree) {
    throw TheoremViolation("idempotents of R and R_0 differ");
  }
  if (r.spec_components != r.spec_r0_components || r.spec_components != r.spec_star_components) {
    throw TheoremViolation("component counts differ: " + std::to_string(r.spec_components) + ", " +
                           std::to_string(r.spec_r0_components) + ", " +
                           std::to_string(r.spec_star_components));
  }
  if (!bijective(r.to_r0, r.spec_r0_components) || !bijective(r.to_star, r.spec_star_components)) {
    throw TheoremViolation("component maps are not bijections");
  }
  return r;
}

LaurentReport laurent_spec_star(const mpz_class& n) {
  if (n < 2) throw PreconditionError("laurent_spec_star needs n >= 2");
  LaurentReport rep;
  rep.n = n;
  for (const auto& [p, e] : factorize(n)) rep.spec_base.push_back(p);

  // A graded ideal I of Z_n[x, x^-1] is fixed by its degree-zero part I_0 = (d),
  // d | n, because x is a homogeneous unit: I_k = x^k I_0. It is prime iff
  // c x^i * c' x^j in I forces a factor into I, i.e. iff (d) is prime in Z_n.
  std::vector<mpz_class> divisors;
  {
    std::vector<mpz_class> ds{1};
    for (const auto& [p, e] : factorize(n)) {
      const std::size_t m = ds.size();
      mpz_class pk = 1;
      for (unsigned k = 1; k <= e; ++k) {
        pk *= p;
        for (std::size_t i = 0; i < m; ++i) ds.push_back(ds[i] * pk);
      }
    }
    std::sort(ds.begin(), ds.end());
    divisors = ds;
  }

  rep.exhaustive = n <= 1000;
  auto ideal_is_prime = [&](const mpz_class& d) {
    if (d == 1) return false;  // the unit ideal
    if (!rep.exhaustive) return mpz_probab_prime_p(d.get_mpz_t(), 30) > 0;
    const unsigned long nn = n.get_ui(), dd = d.get_ui();
    for (unsigned long c = 0; c < nn; ++c) {
      if (c % dd == 0) continue;
      for (unsigned long c2 = 0; c2 < nn; ++c2) {
        if (c2 % dd != 0 && ((c * c2) % nn) % dd == 0) return false;
      }
    }
    return true;
  };

  if (rep.exhaustive) {
    // Two adjacent degrees with ideals (a), (b) of Z_n: closure under x and
    // x^-1 forces (a) = (b), so no graded ideal varies from degree to degree.
    for (const auto& a : divisors) {
      for (const auto& b : divisors) {
        const bool x_maps = a % b == 0;   // x(a) ⊆ (b)
        const bool inv_maps = b % a == 0;  // x^-1(b) ⊆ (a)
        if (x_maps && inv_maps && a != b) {
          throw TheoremViolation("distinct degree ideals closed under x and x^-1");
        }
      }
    }
  }

  for (const auto& d : divisors) {
    if (!ideal_is_prime(d)) continue;
    LaurentPrime lp;
    lp.p = d;
    lp.degree_zero_generator = d % n;
    lp.description = d == n ? "sqrt(" + d.get_str() + "R) = (0)"
                            : "sqrt(" + d.get_str() + "R) = {c*x^k : " + d.get_str() + " | c}";
    rep.graded_primes.push_back(lp);
  }

  // phi: sqrt(pR) -> sqrt(pR) ∩ Z_n = (p), onto Spec(Z_n).
  std::vector<mpz_class> image;
  for (const auto& lp : rep.graded_primes) image.push_back(lp.p);
  rep.bijection = image == rep.spec_base;
  if (!rep.bijection) throw TheoremViolation("graded primes of Z_" + n.get_str() + "[x^±1] do not match Spec(Z_n)");
  return rep;
}

namespace {

void monomials_of_degree(std::size_t vars, int degree, std::vector<int>& cur, std::size_t i,
                         std::vector<Monomial>& out) {
  if (i + 1 == vars) {
    cur[i] = degree;
    out.push_back(Monomial{cur});
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[i] = e;
    monomials_of_degree(vars, degree - e, cur, i + 1, out);
  }
  cur[i] = 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t vars, int degree) {
  std::vector<Monomial> out;
  std::vector<int> cur(vars, 0);
  if (degree >= 0) monomials_of_degree(vars, degree, cur, 0, out);
  return out;
}

int total_degree(const Element& f) {
  std::optional<int> deg;
  for (const auto& [m, c] : f.terms()) {
    const int d = std::accumulate(m.exps.begin(), m.exps.end(), 0);
    if (deg && *deg != d) {
      throw PreconditionError(f.to_string() + " is not homogeneous in the total degree");
    }
    deg = d;
  }
  return deg.value_or(0);
}

}  // namespace

ProjResult proj_quasicompact(const RingHandle& ring, const std::vector<Element>& gens,
                             unsigned degree_cap) {
  const BaseRing& k = ring->base();
  if (!k.is_field()) throw PreconditionError("Proj check needs a prime field base, not " + k.to_string());
  if (ring->kind() != Ring::Kind::Presented || ring->grading().kind() != GradingGroup::Kind::FreeLex ||
      ring->grading().rank() != 1) {
    throw PreconditionError("Proj check needs a Z-graded presented ring");
  }
  const Reduction red = ring->reduction();
  if (red != Reduction::None && red != Reduction::PerDegreeLinear && red != Reduction::MonomialIdeal) {
    throw PreconditionError("Proj check needs a polynomial ring or a per-degree linear quotient");
  }
  std::vector<std::size_t> positive;
  for (std::size_t j = 0; j < ring->generators().size(); ++j) {
    const auto& g = ring->generators()[j];
    if (g.invertible || g.grade.coords()[0] < 0) {
      throw PreconditionError("Proj check needs an N-graded ring; generator " + g.name + " violates it");
    }
    if (g.grade.coords()[0] > 0) positive.push_back(j);
  }
  std::vector<int> gen_degree;
  for (const auto& f : gens) {
    if (f.ring() != ring) throw MismatchError("Proj generator from another ring");
    if (f.is_zero() || !f.is_homogeneous() || f.degree().is_zero()) {
      throw PreconditionError(f.to_string() + " is not homogeneous of nonzero degree");
    }
    gen_degree.push_back(total_degree(f));
  }

  ProjResult res;
  res.degree_cap = degree_cap;
  const std::size_t vars = ring->generators().size();
  for (auto j : positive) {
    bool found = false;
    for (unsigned e = 1; e <= degree_cap && !found; ++e) {
      Monomial xe{std::vector<int>(vars, 0)};
      xe.exps[j] = static_cast<int>(e);
      const int deg = static_cast<int>(e);
      const auto cols = monomials_of_degree(vars, deg);
      std::map<Monomial, std::size_t> col;
      for (std::size_t c = 0; c < cols.size(); ++c) col[cols[c]] = c;
      auto vec = [&](const TermMap& t) {
        Vector v(cols.size(), 0);
        for (const auto& [m, c] : t) v[col.at(m)] = c;
        return v;
      };
      std::vector<Vector> rows;
      std::vector<std::pair<std::size_t, Monomial>> origin;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        for (const auto& m : monomials_of_degree(vars, deg - gen_degree[i])) {
          rows.push_back(vec((Element::monomial(ring, m) * gens[i]).terms()));
          origin.emplace_back(i, m);
        }
      }
      const auto lambda = solve_combination(k, rows, vec(Element::monomial(ring, xe).terms()));
      if (!lambda) continue;
      ProjCertificate cert{j, e, std::vector<Element>(gens.size(), Element::constant(ring, 0))};
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if ((*lambda)[r] == 0) continue;
        auto& mult = cert.multipliers[origin[r].first];
        mult = mult + Element::monomial(ring, origin[r].second, (*lambda)[r]);
      }
      res.certificates.push_back(std::move(cert));
      found = true;
    }
    if (!found) res.unresolved.push_back(j);
  }
  res.quasi_compact = res.unresolved.empty();
  if (!res.quasi_compact) {
    res.note = "no power up to " + std::to_string(degree_cap) + " of";
    for (auto j : res.unresolved) res.note += " " + ring->generators()[j].name;
    res.note += " lies in the ideal; membership beyond the cap is undecided";
    if (red != Reduction::PerDegreeLinear) {
      // With monomial relations, a variable present in every term of every
      // generator bounds the ideal away from the pure powers of the others.
      for (auto j : res.unresolved) {
        for (std::size_t v = 0; v < vars; ++v) {
          if (v == j) continue;
          const bool everywhere = std::all_of(gens.begin(), gens.end(), [&](const Element& f) {
            return std::all_of(f.terms().begin(), f.terms().end(),
                               [&](const auto& t) { return t.first.exps[v] >= 1; });
          });
          if (everywhere) {
            const auto& xv = ring->generators()[v].name;
            const auto& xj = ring->generators()[j].name;
            res.note += "; every element of the ideal has " + xv + "-degree >= 1 while " + xj +
                        "^k has " + xv + "-degree 0, so no power of " + xj + " is a member";
            break;
          }
        }
      }
    }
  }
  if (!verify(res, ring, gens)) throw TheoremViolation("Proj certificate does not re-expand");
  return res;
}

bool verify(const ProjResult& r, const RingHandle& ring, const std::vector<Element>& gens) {
  for (const auto& c : r.certificates) {
    if (c.multipliers.size() != gens.size()) return false;
    Element sum = Element::constant(ring, 0);
    for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + c.multipliers[i] * gens[i];
    const Element x = Element::generator(ring, ring->generators()[c.generator].name);
    if (sum != x.pow(c.exponent)) return false;
  }
  return true;
}

}  // namespace gradedring
