#include "gradedring/decide.hpp"

#include <algorithm>
#include <set>

#include "gradedring/errors.hpp"
#include "gradedring/linear.hpp"
#include "gradedring/oracle.hpp"

namespace gradedring {

namespace {

Element one_of(const RingHandle& r) { return Element::constant(r, 1); }

bool is_finite_ring(const RingHandle& r) { return r->finite_basis().has_value(); }

std::string scalar_str(const mpq_class& c) { return c.get_str(); }

// Least k in [1, bound] with f^k = 0, given f^bound = 0.
unsigned minimal_exponent(const Element& f, unsigned bound) {
  unsigned lo = 1, hi = bound;
  while (lo < hi) {
    const unsigned mid = lo + (hi - lo) / 2;
    if (f.pow(mid).is_zero()) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

struct PowerSearch {
  std::optional<unsigned> exponent;
  std::optional<unsigned> stabilized;
};

// Computes f, f^2, ... until a zero power, a repeated power, or the cap.
PowerSearch power_search(const Element& f, unsigned cap) {
  std::set<Element> seen;
  Element p = f;
  for (unsigned k = 1; k <= cap; ++k) {
    if (p.is_zero()) return {k, std::nullopt};
    if (!seen.insert(p).second) return {std::nullopt, k};
    p = p * f;
  }
  throw CapExceededError("no zero or repeated power of " + f.to_string() + " up to exponent " +
                         std::to_string(cap));
}

// Nilpotency of a homogeneous component. Returns the exponent, or the
// reason it is not nilpotent.
std::variant<unsigned, std::string> component_exponent(const Element& c, const DecideOptions& opts) {
  const auto& ring = c.ring();
  if (ring->is_monoid_ring()) {
    // Monomials are non-zero-divisors, so c is nilpotent iff its coefficients are.
    unsigned bound = 1;
    for (const auto& [m, coeff] : c.terms()) {
      auto e = ring->base().nilpotency_exponent(coeff);
      if (!e) {
        return "coefficient " + scalar_str(coeff) + " of " +
               Element::monomial(ring, m).to_string() + " is not nilpotent in " +
               ring->base().to_string();
      }
      if (c.terms().size() == 1) return *e;
      bound += *e - 1;
    }
    if (!c.pow(bound).is_zero()) throw TheoremViolation("coefficient bound failed for " + c.to_string());
    return minimal_exponent(c, bound);
  }
  auto s = power_search(c, opts.power_cap);
  if (s.exponent) return *s.exponent;
  return "power " + std::to_string(*s.stabilized) + " of " + c.to_string() +
         " repeats an earlier nonzero power";
}

// --- univariate polynomials over a field, for the monic family ------------

using Poly = std::vector<mpq_class>;  // index = exponent

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_of(const TermMap& t) {
  Poly p;
  for (const auto& [m, c] : t) {
    const auto e = static_cast<std::size_t>(m.exps[0]);
    if (p.size() <= e) p.resize(e + 1);
    p[e] = c;
  }
  trim(p);
  return p;
}

TermMap terms_of(const Poly& p) {
  TermMap t;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (p[e] != 0) t[Monomial{{static_cast<int>(e)}}] = p[e];
  }
  return t;
}

Poly poly_sub(const BaseRing& k, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = k.sub(a[i], b[i]);
  trim(a);
  return a;
}

Poly poly_mul(const BaseRing& k, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> poly_divmod(const BaseRing& k, Poly a, const Poly& b) {
  Poly q;
  const mpq_class lead_inv = *k.inverse(b.back());
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class c = k.mul(a.back(), lead_inv);
    if (q.size() <= shift) q.resize(shift + 1);
    q[shift] = c;
    Poly sub(shift + b.size());
    for (std::size_t i = 0; i < b.size(); ++i) sub[shift + i] = k.mul(c, b[i]);
    a = poly_sub(k, a, sub);
  }
  trim(q);
  return {q, a};
}

// Returns (g, s) with g = gcd(a, b) monic and s*a = g mod b.
std::pair<Poly, Poly> poly_ext_gcd(const BaseRing& k, const Poly& a, const Poly& b) {
  Poly r0 = b, r1 = a, s0, s1{mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(k, r0, r1);
    Poly s = poly_sub(k, s0, poly_mul(k, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const mpq_class inv = *k.inverse(r0.back());
  for (auto& c : r0) c = k.mul(c, inv);
  for (auto& c : s0) c = k.mul(c, inv);
  return {r0, s0};
}

// --- unit families ---------------------------------------------------------

Certificate unit_positively_graded(const Element& f, const DecideOptions& opts) {
  const auto& ring = f.ring();
  const Grade zero = Grade::zero(ring->grading());
  const Element f0 = component(f, zero);
  const mpq_class u = f0.is_zero() ? mpq_class(0) : f0.terms().begin()->second;
  const auto u_inv = ring->base().inverse(u);
  if (!u_inv) {
    return NotUnitCert{ContentProper{"degree-zero component " + scalar_str(u) +
                                         " is not a unit of " + ring->base().to_string() +
                                         ", so C(f) lies in (f_0) + R_+",
                                     std::nullopt, true, false}};
  }
  const Element m = f - f0;
  const Certificate nil = is_nilpotent(m, opts);
  if (const auto* nn = std::get_if<NotNilpotentCert>(&nil)) {
    return NotUnitCert{CrossPairNotNilpotent{zero, *nn->component}};
  }
  const unsigned k = std::get<NilpotentCert>(nil).exponent;
  // u^-1 * sum_{j<k} (-u^-1 m)^j
  const Element step = m.scaled(-*u_inv);
  Element sum = one_of(ring);
  Element term = one_of(ring);
  for (unsigned j = 1; j < k; ++j) {
    term = term * step;
    sum = sum + term;
  }
  const Element inverse = sum.scaled(*u_inv);
  if (!(f * inverse).is_one()) throw TheoremViolation("geometric-series inverse failed for " + f.to_string());
  return UnitCert{inverse};
}

bool monomial_invertible(const Ring& ring, const Monomial& m) {
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] != 0 && !ring.generators()[i].invertible) return false;
  }
  return true;
}

// Content criterion for monoid rings whose monomials are units: C(f) = R
// and f_a f_b nilpotent for a != b.
bool monoid_unit_by_content(const Element& f) {
  const auto& base = f.ring()->base();
  const mpz_class& n = base.modulus();
  mpz_class g = n;
  std::vector<mpq_class> coeffs;
  for (const auto& [m, c] : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    coeffs.push_back(c);
  }
  if (g != 1) return false;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (std::size_t j = i + 1; j < coeffs.size(); ++j) {
      if (!base.nilpotency_exponent(base.mul(coeffs[i], coeffs[j]))) return false;
    }
  }
  return true;
}

Certificate unit_monoid_modular(const Element& f) {
  const auto& ring = f.ring();
  const mpz_class n = ring->base().modulus();
  if (f.is_zero()) return NotUnitCert{ContentProper{"f = 0", std::nullopt, false, false}};
  std::set<Grade, GradeKeyLess> grades;
  bool all_invertible = true;
  for (const auto& [m, c] : f.terms()) {
    grades.insert(ring->grade_of(m));
    all_invertible = all_invertible && monomial_invertible(*ring, m);
  }
  if (grades.size() != f.terms().size()) {
    throw UnsupportedFamilyError("unit decision needs distinct grades on the terms of " + f.to_string());
  }

  std::optional<Certificate> refusal;
  std::vector<std::pair<mpz_class, TermMap>> local_inverses;  // (p^e, inverse mod p^e)
  for (const auto& [p, e] : factorize(n)) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    std::vector<const std::pair<const Monomial, mpq_class>*> unit_terms;
    for (const auto& t : f.terms()) {
      if (t.second.get_num() % p != 0) unit_terms.push_back(&t);
    }
    if (unit_terms.empty()) {
      refusal = NotUnitCert{ContentProper{"every coefficient is divisible by " + p.get_str(), p,
                                          false, false}};
      break;
    }
    if (unit_terms.size() > 1) {
      Grade a = ring->grade_of(unit_terms[0]->first);
      Grade b = ring->grade_of(unit_terms[1]->first);
      if (GradeKeyLess{}(b, a)) std::swap(a, b);
      refusal = NotUnitCert{CrossPairNotNilpotent{a, b}};
      break;
    }
    const auto& [lead_m, lead_c] = *unit_terms[0];
    if (!monomial_invertible(*ring, lead_m)) {
      refusal = NotUnitCert{ContentProper{
          "modulo " + p.get_str() + " f reduces to a multiple of the non-invertible monomial " +
              Element::monomial(ring, lead_m).to_string(),
          std::nullopt, false, false}};
      break;
    }
    // Inverse modulo p^e: lead^-1 * sum_{j<e} (-lead^-1 * rest)^j, rest divisible by p.
    RingPresentation local = ring->presentation();
    local.base = BaseRing::integers_mod(pe);
    local.name = ring->name() + "/" + pe.get_str();
    RingHandle rl = Ring::build(local);
    const Element fl = Element::from_terms(rl, f.terms());
    Monomial inv_m = lead_m;
    for (auto& x : inv_m.exps) x = -x;
    const Element lead_inv = Element::monomial(rl, inv_m, *rl->base().inverse(lead_c));
    const Element step = -(lead_inv * (fl - Element::monomial(rl, lead_m, lead_c)));
    Element sum = one_of(rl), term = one_of(rl);
    for (unsigned j = 1; j < e; ++j) {
      term = term * step;
      sum = sum + term;
    }
    local_inverses.emplace_back(pe, (lead_inv * sum).terms());
  }

  if (all_invertible) {
    const bool by_content = monoid_unit_by_content(f);
    if (by_content != !refusal.has_value()) {
      throw TheoremViolation("unit criteria disagree on " + f.to_string());
    }
  }
  if (refusal) return *refusal;

  // Chinese remaindering of the local inverses, coefficient by coefficient.
  std::set<Monomial> monomials;
  for (const auto& [pe, t] : local_inverses) {
    for (const auto& [m, c] : t) monomials.insert(m);
  }
  TermMap inv;
  for (const auto& m : monomials) {
    mpz_class x = 0;
    for (const auto& [pe, t] : local_inverses) {
      auto it = t.find(m);
      const mpz_class r = it == t.end() ? mpz_class(0) : mpz_class(it->second.get_num());
      const mpz_class cofactor = n / pe;
      mpz_class cinv;
      mpz_invert(cinv.get_mpz_t(), cofactor.get_mpz_t(), pe.get_mpz_t());
      x += r * cofactor * cinv;
    }
    inv[m] = mpq_class(x);
  }
  const Element inverse = Element::from_terms(ring, std::move(inv));
  if (!(f * inverse).is_one()) throw TheoremViolation("CRT inverse failed for " + f.to_string());
  return UnitCert{inverse};
}

Certificate unit_monoid_domain(const Element& f) {
  const auto& ring = f.ring();
  if (f.is_zero()) return NotUnitCert{ContentProper{"f = 0", std::nullopt, false, false}};
  if (f.terms().size() > 1) {
    const auto s = f.support();
    if (s.size() > 1) return NotUnitCert{CrossPairNotNilpotent{s[0], s[1]}};
    return NotUnitCert{ContentProper{"homogeneous element with several terms over a domain",
                                     std::nullopt, false, false}};
  }
  const auto& [m, c] = *f.terms().begin();
  const auto c_inv = ring->base().inverse(c);
  if (!c_inv) {
    return NotUnitCert{ContentProper{"coefficient " + scalar_str(c) + " is not a unit of " +
                                         ring->base().to_string(),
                                     std::nullopt, false, false}};
  }
  if (!monomial_invertible(*ring, m)) {
    return NotUnitCert{ContentProper{"monomial " + Element::monomial(ring, m).to_string() +
                                         " is not invertible",
                                     std::nullopt, false, false}};
  }
  return UnitCert{f.pow(-1)};
}

Certificate unit_monic_field(const Element& f) {
  const auto& ring = f.ring();
  const BaseRing& k = ring->base();
  if (f.is_zero()) return NotUnitCert{ContentProper{"f = 0", std::nullopt, false, false}};
  const Poly m = poly_of(ring->relations()[0]);
  auto [g, s] = poly_ext_gcd(k, poly_of(f.terms()), m);
  if (g.size() > 1) return NotUnitCert{CommonFactor{Element::from_terms(ring, terms_of(g))}};
  const Element inverse = Element::from_terms(ring, terms_of(s));
  if (!(f * inverse).is_one()) throw TheoremViolation("Bezout inverse failed for " + f.to_string());
  return UnitCert{inverse};
}

// Z-span of the ideal generated by `gens` in a finite algebra contains 1?
bool ideal_contains_one(const FiniteAlgebra& alg, const std::vector<std::uint32_t>& gens) {
  const std::size_t dim = alg.dimension();
  std::vector<std::vector<mpz_class>> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<mpz_class> r(dim, 0);
    r[i] = alg.orders()[i];
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<std::uint32_t> d(dim, 0);
    d[i] = 1;
    const auto basis = alg.ordinal(d);
    for (auto g : gens) {
      const auto digits = alg.digits(alg.mul(basis, g));
      rows.emplace_back(digits.begin(), digits.end());
    }
  }
  const auto one = alg.digits(alg.one());
  return integer_span_contains(std::move(rows), std::vector<mpz_class>(one.begin(), one.end()));
}

Certificate unit_finite(const Element& f, const DecideOptions& opts) {
  const auto& ring = f.ring();
  const auto alg = shared_algebra(ring, opts.enumeration_cap);
  const std::uint32_t a = alg->index_of(f);

  // Route 1: powers. f^k = f^(2k) is idempotent; f is a unit iff it is 1.
  std::uint32_t p = a;
  unsigned k = 1;
  while (alg->mul(p, p) != p) {
    p = alg->mul(p, a);
    ++k;
  }
  const bool unit_by_powers = p == alg->one();

  std::optional<Certificate> obstruction;
  if (ring->grading().is_ordered()) {
    // Route 2: C(f) = R and pairwise nilpotent products of components.
    std::vector<std::uint32_t> comps;
    std::vector<Grade> comp_grades;
    for (const auto& [g, c] : homogeneous_components(f)) {
      comps.push_back(alg->index_of(c));
      comp_grades.push_back(g);
    }
    if (!ideal_contains_one(*alg, comps)) {
      obstruction = NotUnitCert{ContentProper{"the ideal generated by the components of f misses 1",
                                              std::nullopt, false, true}};
    }
    for (std::size_t i = 0; i < comps.size() && !obstruction; ++i) {
      for (std::size_t j = i + 1; j < comps.size() && !obstruction; ++j) {
        const Element prod = alg->element(alg->mul(comps[i], comps[j]));
        if (std::holds_alternative<NotNilpotentCert>(is_nilpotent(prod, opts))) {
          obstruction = NotUnitCert{CrossPairNotNilpotent{comp_grades[i], comp_grades[j]}};
        }
      }
    }
    if (obstruction.has_value() == unit_by_powers) {
      throw TheoremViolation("unit criteria disagree on " + f.to_string());
    }
  } else if (!unit_by_powers) {
    obstruction = NotUnitCert{PowerIdempotent{k, alg->element(p)}};
  }
  if (obstruction) return *obstruction;

  // The order r of f in the unit group gives f^-1 = f^(r-1).
  std::uint32_t q = a;
  std::uint64_t r = 1;
  while (q != alg->one()) {
    q = alg->mul(q, a);
    ++r;
  }
  const Element inverse = alg->element(alg->pow(a, r - 1));
  if (!(f * inverse).is_one()) throw TheoremViolation("power inverse failed for " + f.to_string());
  return UnitCert{inverse};
}

bool provably_reduced(const RingHandle& ring, const DecideOptions& opts) {
  if (ring->is_monoid_ring()) return ring->base().is_reduced();
  if (is_finite_ring(ring)) return shared_table(ring, opts.enumeration_cap)->nilradical().size() == 1;
  return false;
}

}  // namespace

std::string verdict_name(const Certificate& c) {
  struct Namer {
    std::string operator()(const UnitCert&) const { return "unit"; }
    std::string operator()(const NotUnitCert&) const { return "not_unit"; }
    std::string operator()(const NilpotentCert&) const { return "nilpotent"; }
    std::string operator()(const NotNilpotentCert&) const { return "not_nilpotent"; }
    std::string operator()(const ZeroDivisorCert&) const { return "zero_divisor"; }
    std::string operator()(const NotZeroDivisorCert&) const { return "not_zero_divisor"; }
    std::string operator()(const IdempotentReport& r) const {
      return r.is_idempotent ? "idempotent" : "not_idempotent";
    }
  };
  return std::visit(Namer{}, c);
}

Certificate is_nilpotent(const Element& f, const DecideOptions& opts) {
  if (f.is_zero()) return NilpotentCert{1};
  const auto& ring = f.ring();
  if (!ring->grading().is_ordered()) {
    // The component reduction needs an ordered group; search powers of f itself.
    auto s = power_search(f, opts.power_cap);
    if (s.exponent) return NilpotentCert{*s.exponent};
    return NotNilpotentCert{std::nullopt, s.stabilized,
                            "power " + std::to_string(*s.stabilized) + " repeats an earlier nonzero power"};
  }
  unsigned bound = 1;
  for (const auto& [g, c] : homogeneous_components(f)) {
    auto e = component_exponent(c, opts);
    if (const auto* why = std::get_if<std::string>(&e)) {
      return NotNilpotentCert{g, std::nullopt, "component of degree " + g.to_string() + ": " + *why};
    }
    bound += std::get<unsigned>(e) - 1;
  }
  if (!f.pow(bound).is_zero()) {
    throw TheoremViolation("nilpotent components but f^" + std::to_string(bound) + " != 0 for " +
                           f.to_string());
  }
  return NilpotentCert{minimal_exponent(f, bound)};
}

Certificate is_unit(const Element& f, const DecideOptions& opts) {
  const auto& ring = f.ring();
  if (ring->is_positively_graded()) return unit_positively_graded(f, opts);
  if (ring->is_monoid_ring()) {
    if (ring->base().is_modular()) return unit_monoid_modular(f);
    return unit_monoid_domain(f);
  }
  if (ring->kind() == Ring::Kind::Presented && ring->reduction() == Reduction::MonicUnivariate &&
      ring->base().is_field()) {
    return unit_monic_field(f);
  }
  if (is_finite_ring(ring)) return unit_finite(f, opts);
  throw UnsupportedFamilyError("no unit decision procedure for ring " + ring->name());
}

Element invert_homogeneous(const Element& f, const DecideOptions& opts) {
  if (!f.is_homogeneous()) throw PreconditionError(f.to_string() + " is not homogeneous");
  const Certificate c = is_unit(f, opts);
  const auto* u = std::get_if<UnitCert>(&c);
  if (!u) throw PreconditionError(f.to_string() + " is not a unit");
  if (f.ring()->grading().is_ordered() &&
      (!u->inverse.is_homogeneous() || !(u->inverse.degree() == -f.degree()))) {
    throw TheoremViolation("inverse of homogeneous " + f.to_string() + " is " +
                           u->inverse.to_string() + ", not homogeneous of degree " +
                           (-f.degree()).to_string());
  }
  return u->inverse;
}

Element homogenize_annihilator(const std::vector<Element>& gens, const Element& seed,
                               std::vector<HomogenizeStep>* trace) {
  if (seed.is_zero()) throw PreconditionError("homogenization needs a nonzero annihilator");
  if (!seed.ring()->grading().is_ordered()) throw UnorderedGradingError();
  for (const auto& g : gens) {
    if (!(g * seed).is_zero()) {
      throw PreconditionError(seed.to_string() + " does not annihilate " + g.to_string());
    }
  }
  std::vector<std::vector<std::pair<Grade, Element>>> comps;
  for (const auto& g : gens) comps.push_back(homogeneous_components(g));

  Element h = seed;
  for (std::size_t iter = 0; iter <= 4096; ++iter) {
    const Grade s = h.support().back();
    const Element top = component(h, s);
    bool annihilates = true;
    for (const auto& g : gens) annihilates = annihilates && (g * top).is_zero();
    if (annihilates) return top;

    // Largest t with g_t h != 0 over all generators; ties keep the first generator.
    std::optional<std::size_t> best_gen;
    std::optional<Grade> best_t;
    Element next = h;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (auto it = comps[i].rbegin(); it != comps[i].rend(); ++it) {
        if (best_t && !GradeKeyLess{}(*best_t, it->first)) break;
        const Element prod = it->second * h;
        if (prod.is_zero()) continue;
        best_gen = i;
        best_t = it->first;
        next = prod;
        break;
      }
    }
    if (!best_gen) throw TheoremViolation("no component of the ideal moves " + h.to_string());
    h = next;
    if (trace) trace->push_back(HomogenizeStep{h, *best_gen, *best_t});
    for (const auto& g : gens) {
      if (!(g * h).is_zero()) throw TheoremViolation("homogenization lost the annihilator property");
    }
  }
  throw TheoremViolation("homogenization did not terminate");
}

Certificate is_zero_divisor(const Element& f, const std::optional<Element>& seed,
                            const DecideOptions& opts) {
  const auto& ring = f.ring();
  if (ring->is_monoid_ring()) {
    if (!ring->base().is_modular()) {
      if (f.is_zero()) return ZeroDivisorCert{one_of(ring)};
      return NotZeroDivisorCert{"nonzero element of a monoid ring over the domain " +
                                ring->base().to_string()};
    }
    // A nonzero constant c kills f iff it kills every coefficient.
    const mpz_class& n = ring->base().modulus();
    mpz_class g = n;
    std::string coeffs;
    for (const auto& [m, c] : f.terms()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
      coeffs += (coeffs.empty() ? "" : ", ") + scalar_str(c);
    }
    if (g == 1) {
      return NotZeroDivisorCert{"no nonzero c in " + ring->base().to_string() +
                                " annihilates all coefficients " + coeffs};
    }
    return ZeroDivisorCert{Element::constant(ring, mpq_class(mpz_class(n / g)))};
  }

  std::optional<Element> h = seed;
  if (h) {
    if (h->ring() != ring) throw MismatchError("seed annihilator from another ring");
    if (h->is_zero() || !(f * *h).is_zero()) {
      throw PreconditionError("seed " + h->to_string() + " is not a nonzero annihilator of " + f.to_string());
    }
  } else if (is_finite_ring(ring)) {
    const auto alg = shared_algebra(ring, opts.enumeration_cap);
    const auto mf = alg->multiplier(alg->index_of(f));
    if (!ring->grading().is_ordered()) {
      for (std::uint32_t b = 1; b < alg->size(); ++b) {
        if (alg->is_homogeneous(b) && mf(b) == 0) return ZeroDivisorCert{alg->element(b)};
      }
    }
    for (std::uint32_t b = 1; b < alg->size(); ++b) {
      if (mf(b) == 0) {
        h = alg->element(b);
        break;
      }
    }
    if (!h) {
      return NotZeroDivisorCert{"no nonzero annihilator among all " + std::to_string(alg->size()) +
                                " elements"};
    }
  } else {
    throw UnsupportedFamilyError("zero-divisor decision for ring " + ring->name() +
                                 " needs a seed annihilator");
  }
  if (!ring->grading().is_ordered()) return ZeroDivisorCert{*h, h->is_homogeneous()};
  return ZeroDivisorCert{homogenize_annihilator({f}, *h)};
}

ColonReport check_colon_gradedness(IdealKind kind, const Element& f, const Element& g,
                                   const DecideOptions& opts) {
  const auto& ring = f.ring();
  if (g.ring() != ring) throw MismatchError("colon check across rings");
  if (!ring->grading().is_ordered()) throw UnorderedGradingError();
  std::function<bool(const Element&)> member;
  switch (kind) {
    case IdealKind::Zero:
      if (!provably_reduced(ring, opts)) {
        throw PreconditionError("the zero ideal of " + ring->name() +
                                " is not known to be radical; the componentwise law needs a "
                                "graded radical ideal");
      }
      member = [](const Element& x) { return x.is_zero(); };
      break;
    case IdealKind::Nilradical:
      member = [&](const Element& x) {
        return std::holds_alternative<NilpotentCert>(is_nilpotent(x, opts));
      };
      break;
    case IdealKind::Jacobson: {
      if (!is_finite_ring(ring)) {
        throw UnsupportedFamilyError("Jacobson membership needs a finite ring");
      }
      auto table = shared_table(ring, opts.enumeration_cap);
      member = [table](const Element& x) {
        return table->contains(table->jacobson(), table->index_of(x));
      };
      break;
    }
  }
  ColonReport report;
  report.product_member = member(f * g);
  report.all_pairs_member = true;
  for (const auto& [i, fi] : homogeneous_components(f)) {
    for (const auto& [k, gk] : homogeneous_components(g)) {
      const bool in = member(fi * gk);
      report.pairs.push_back(PairMembership{i, k, in});
      report.all_pairs_member = report.all_pairs_member && in;
    }
  }
  if (report.product_member != report.all_pairs_member) {
    throw TheoremViolation("componentwise membership law fails for f = " + f.to_string() +
                           ", g = " + g.to_string());
  }
  return report;
}

ColonReport product_nilpotent_componentwise(const Element& f, const Element& g,
                                            const DecideOptions& opts) {
  return check_colon_gradedness(IdealKind::Nilradical, f, g, opts);
}

IdempotentReport check_idempotent_homogeneity(const Element& f) {
  IdempotentReport r;
  r.is_idempotent = f * f == f;
  for (const auto& g : f.support()) {
    if (!g.is_zero()) r.offending_grades.push_back(g);
  }
  r.homogeneous_degree_zero = r.offending_grades.empty();
  if (r.is_idempotent && f.ring()->grading().is_torsion_free() && !r.homogeneous_degree_zero) {
    throw TheoremViolation("idempotent " + f.to_string() + " has components outside degree 0");
  }
  return r;
}

bool verify(const Element& f, const Certificate& cert, const DecideOptions& opts) {
  const auto& ring = f.ring();
  if (const auto* u = std::get_if<UnitCert>(&cert)) return (f * u->inverse).is_one();
  if (const auto* n = std::get_if<NilpotentCert>(&cert)) {
    return n->exponent >= 1 && f.pow(n->exponent).is_zero() &&
           (n->exponent == 1 || !f.pow(n->exponent - 1).is_zero());
  }
  if (const auto* z = std::get_if<ZeroDivisorCert>(&cert)) {
    if (z->annihilator.is_zero() || !(f * z->annihilator).is_zero()) return false;
    return !z->homogeneous || z->annihilator.is_homogeneous();
  }
  if (const auto* r = std::get_if<IdempotentReport>(&cert)) {
    return r->is_idempotent == (f * f == f);
  }
  if (const auto* nn = std::get_if<NotNilpotentCert>(&cert)) {
    if (nn->component) {
      return std::holds_alternative<NotNilpotentCert>(is_nilpotent(component(f, *nn->component), opts));
    }
    if (nn->stabilized_power) {
      const Element top = f.pow(*nn->stabilized_power);
      if (top.is_zero()) return false;
      for (unsigned j = 1; j < *nn->stabilized_power; ++j) {
        if (f.pow(j) == top) return true;
      }
    }
    return false;
  }
  if (const auto* nz = std::get_if<NotZeroDivisorCert>(&cert)) {
    (void)nz;
    return std::holds_alternative<NotZeroDivisorCert>(is_zero_divisor(f, std::nullopt, opts));
  }
  const auto& nu = std::get<NotUnitCert>(cert);
  if (const auto* cp = std::get_if<ContentProper>(&nu.obstruction)) {
    if (cp->prime) {
      return std::all_of(f.terms().begin(), f.terms().end(),
                         [&](const auto& t) { return t.second.get_num() % *cp->prime == 0; });
    }
    if (cp->degree_zero_nonunit) {
      const Element f0 = component(f, Grade::zero(ring->grading()));
      return f0.is_zero() || !ring->base().inverse(f0.terms().begin()->second);
    }
    if (cp->span_misses_one) {
      const auto alg = shared_algebra(ring, opts.enumeration_cap);
      std::vector<std::uint32_t> comps;
      for (const auto& c : content_generators(f)) comps.push_back(alg->index_of(c));
      return !ideal_contains_one(*alg, comps);
    }
    return std::holds_alternative<NotUnitCert>(is_unit(f, opts));
  }
  if (const auto* cp = std::get_if<CrossPairNotNilpotent>(&nu.obstruction)) {
    const Element prod = component(f, cp->i) * component(f, cp->k);
    return std::holds_alternative<NotNilpotentCert>(is_nilpotent(prod, opts));
  }
  if (const auto* cf = std::get_if<CommonFactor>(&nu.obstruction)) {
    const BaseRing& k = ring->base();
    const Poly g = poly_of(cf->gcd.terms());
    if (g.size() < 2) return false;
    return poly_divmod(k, poly_of(f.terms()), g).second.empty() &&
           poly_divmod(k, poly_of(ring->relations()[0]), g).second.empty();
  }
  const auto& pi = std::get<PowerIdempotent>(nu.obstruction);
  return pi.idempotent * pi.idempotent == pi.idempotent && !pi.idempotent.is_one() &&
         f.pow(pi.exponent) == pi.idempotent;
}

}  // namespace gradedring
