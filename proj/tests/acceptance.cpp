// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "gradedring/constructors.hpp"
#include "gradedring/decide.hpp"
#include "gradedring/dsl.hpp"
#include "gradedring/errors.hpp"
#include "gradedring/gallery.hpp"
#include "gradedring/report.hpp"
#include "gradedring/spectra.hpp"

using namespace gradedring;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

RingHandle ring(const std::string& text) { return dsl::load_ring(text).ring; }

RingHandle truncated(int n, int k) {
  return ring("ring Z" + std::to_string(n) + "x" + std::to_string(k) + " { base Zmod " +
              std::to_string(n) + "\n grading Z\n gen x deg 1\n rel x^" + std::to_string(k) + " }");
}

RingHandle cyclic_torsion(int p) {
  const std::string ps = std::to_string(p);
  return ring("ring T" + ps + " { base Zmod " + ps + "\n grading Zmod " + ps + "\n gen x deg 1\n rel x^" + ps +
              " - 1 }");
}

// The finite, torsion-free-graded corpus.
std::vector<RingHandle> corpus() {
  std::vector<RingHandle> rings;
  for (int n : {4, 6, 8, 9, 12}) {
    for (int k : {2, 3}) rings.push_back(truncated(n, k));
  }
  rings.push_back(ring(
      "ring B4 { base Zmod 4\n grading Z^2 lex\n gen x deg (1,0)\n gen y deg (0,1)\n rel x^2\n rel y^2 }"));
  rings.push_back(ring("ring B6 { base Zmod 6\n grading Z\n gen x deg 1\n gen y deg 1\n rel x^2\n rel y^2 }"));
  rings.push_back(product_ring(truncated(2, 2), truncated(3, 2)));
  rings.push_back(product_ring(truncated(4, 2), truncated(2, 3)));
  rings.push_back(trivial_extension(truncated(4, 2), 2));
  rings.push_back(trivial_extension(truncated(6, 2), 2));
  rings.push_back(associated_graded(8, 2));
  return rings;
}

std::string label(const RingHandle& r) { return r->name() + " (" + r->base().to_string() + ")"; }

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

Outcome gallery_exactness() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t checks = 0;
  for (const auto& id : gallery_ids()) {
    try {
      checks += run_gallery(id).checks.size();
    } catch (const std::exception& e) {
      fail(o, id + ": " + e.what());
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 5.0) fail(o, "gallery took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream ss;
    ss << gallery_ids().size() << " items, " << checks << " checks, " << secs << " s";
    o.detail = ss.str();
  }
  return o;
}

Outcome mccoy_suite() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t zds = 0, ok = 0;
  for (const auto& r : corpus()) {
    const auto t = shared_table(r);
    for (std::uint32_t a = 0; a < t->size(); ++a) {
      const Element f = t->element(a);
      const bool oracle_zd = t->contains(t->zero_divisors(), a);
      const Certificate c = is_zero_divisor(f);
      const auto* z = std::get_if<ZeroDivisorCert>(&c);
      if (!oracle_zd) {
        if (z) fail(o, label(r) + ": " + f.to_string() + " reported as zero-divisor");
        continue;
      }
      ++zds;
      if (z && !z->annihilator.is_zero() && z->annihilator.is_homogeneous() && (f * z->annihilator).is_zero()) {
        ++ok;
      } else {
        fail(o, label(r) + ": no homogeneous annihilator for " + f.to_string());
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 60.0) fail(o, "took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream ss;
    ss << ok << "/" << zds << " zero-divisors with homogeneous annihilators, " << secs << " s";
    o.detail = ss.str();
  }
  return o;
}

// Z_n[x, x^-1]: f is a unit iff modulo each prime p | n it reduces to a
// single term, since the units of F_p[x, x^-1] are the monomials.
bool laurent_unit_by_reduction(const std::vector<int>& coeffs, int n) {
  for (const auto& [p, e] : factorize(n)) {
    int survivors = 0;
    for (int c : coeffs) survivors += c % p.get_si() != 0;
    if (survivors != 1) return false;
  }
  return true;
}

Outcome unit_suite() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t checked = 0, units = 0;
  std::mt19937_64 rng(20240601);
  for (const auto& r : corpus()) {
    const auto t = shared_table(r);
    std::vector<std::uint32_t> sample;
    if (t->size() <= 4096) {
      for (std::uint32_t a = 0; a < t->size(); ++a) sample.push_back(a);
    } else {
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(t->size()) - 1);
      for (int i = 0; i < 1000; ++i) sample.push_back(pick(rng));
    }
    for (auto a : sample) {
      const Element f = t->element(a);
      const Certificate c = is_unit(f);
      const bool unit = std::holds_alternative<UnitCert>(c);
      ++checked;
      if (unit != t->contains(t->units(), a)) fail(o, label(r) + ": disagreement on " + f.to_string());
      if (unit) {
        ++units;
        if (!(f * std::get<UnitCert>(c).inverse).is_one()) fail(o, label(r) + ": bad inverse for " + f.to_string());
      } else if (!verify(f, c)) {
        fail(o, label(r) + ": obstruction for " + f.to_string() + " does not verify");
      }
    }
  }
  // Laurent windows x^-2 .. x^2 over Z_n.
  for (int n : {4, 6, 8, 12}) {
    const auto r = ring("ring L" + std::to_string(n) + " { base Zmod " + std::to_string(n) +
                        "\n grading Z\n gen x deg 1 invertible }");
    const Element x = Element::generator(r, "x");
    std::uniform_int_distribution<int> coeff(0, n - 1);
    for (int i = 0; i < 1500; ++i) {
      std::vector<int> coeffs(5);
      Element f = Element::constant(r, 0);
      for (int e = -2; e <= 2; ++e) {
        coeffs[e + 2] = coeff(rng);
        f = f + x.pow(e).scaled(coeffs[e + 2]);
      }
      const Certificate c = is_unit(f);
      const bool unit = std::holds_alternative<UnitCert>(c);
      ++checked;
      if (unit != laurent_unit_by_reduction(coeffs, n)) fail(o, r->name() + ": disagreement on " + f.to_string());
      if (unit) {
        ++units;
        if (!(f * std::get<UnitCert>(c).inverse).is_one()) fail(o, r->name() + ": bad inverse for " + f.to_string());
      } else if (!verify(f, c)) {
        fail(o, r->name() + ": obstruction for " + f.to_string() + " does not verify");
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 60.0) fail(o, "took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream ss;
    ss << checked << " elements agree with the oracle, " << units << " inverses verified, " << secs << " s";
    o.detail = ss.str();
  }
  return o;
}

Outcome armendariz_suite() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::size_t pairs = 0;
  for (const auto& r : corpus()) {
    const auto t = shared_table(r);
    const FiniteAlgebra& alg = t->algebra();
    const std::size_t grades = alg.grades().size();
    auto nil = [&](std::uint32_t a) { return t->nilpotency_exponent(a) != 0; };
    std::uniform_int_distribution<std::uint32_t> pick(0, alg.size() - 1);
    for (int i = 0; i < 10000; ++i) {
      const std::uint32_t f = pick(rng), g = pick(rng);
      ++pairs;
      bool components_nil = true, cross_nil = true;
      for (std::size_t gi = 0; gi < grades; ++gi) {
        const std::uint32_t fi = alg.component(f, gi);
        components_nil = components_nil && nil(fi);
        for (std::size_t gk = 0; gk < grades; ++gk) {
          cross_nil = cross_nil && nil(alg.mul(fi, alg.component(g, gk)));
        }
      }
      if (nil(f) != components_nil) fail(o, label(r) + ": component law fails for " + t->element(f).to_string());
      if (nil(alg.mul(f, g)) != cross_nil) {
        fail(o, label(r) + ": cross-product law fails for " + t->element(f).to_string() + ", " +
                    t->element(g).to_string());
      }
      // The library's own componentwise check on a subsample.
      if (i % 50 == 0) {
        const ColonReport rep = product_nilpotent_componentwise(t->element(f), t->element(g));
        if (rep.product_member != cross_nil) fail(o, label(r) + ": decide disagrees with the oracle");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " random pairs over " + std::to_string(corpus().size()) + " rings";
  return o;
}

Outcome bergman_suite() {
  Outcome o;
  for (const auto& r : corpus()) {
    const auto t = shared_table(r);
    if (!t->is_graded_subset(t->jacobson())) fail(o, label(r) + ": Jacobson radical not graded");
  }
  std::string witnesses;
  for (int p : {2, 3, 5}) {
    const auto t = shared_table(cyclic_torsion(p));
    const auto w = t->graded_witness(t->jacobson());
    if (!w) {
      fail(o, "Zmod " + std::to_string(p) + " cyclic: Jacobson radical unexpectedly graded");
      continue;
    }
    if (!t->contains(t->jacobson(), w->member) || t->contains(t->jacobson(), w->component)) {
      fail(o, "witness does not witness");
    }
    witnesses += (witnesses.empty() ? "" : "; ") + t->element(w->member).to_string() + " has component " +
                 t->element(w->component).to_string();
  }
  if (o.pass) o.detail = "graded on " + std::to_string(corpus().size()) + " rings; cyclic witnesses: " + witnesses;
  return o;
}

Outcome idempotent_suite() {
  Outcome o;
  for (const auto& r : corpus()) {
    const auto t = shared_table(r);
    const FiniteRingTable r0 = t->degree_zero();
    for (auto e : t->idempotents()) {
      if (!t->algebra().in_degree_zero(e)) fail(o, label(r) + ": idempotent " + t->element(e).to_string() + " outside R_0");
      const IdempotentReport rep = check_idempotent_homogeneity(t->element(e));
      if (!rep.is_idempotent || !rep.homogeneous_degree_zero) fail(o, label(r) + ": decide misreports an idempotent");
    }
    if (t->idempotents() != r0.idempotents()) fail(o, label(r) + ": idempotents of R and R_0 differ");
  }
  for (int p : {2, 3, 5}) {
    const auto g = group_ring(BaseRing::rationals(), p);
    Element f = Element::constant(g, 0);
    for (int s = 0; s < p; ++s) f = f + Element::generator(g, "g").pow(s);
    f = f.scaled(mpq_class(1, p));
    const IdempotentReport rep = check_idempotent_homogeneity(f);
    if (!rep.is_idempotent || rep.homogeneous_degree_zero ||
        rep.offending_grades.size() != static_cast<std::size_t>(p - 1)) {
      fail(o, "Q[C" + std::to_string(p) + "] idempotent not flagged");
    }
  }
  if (o.pass) o.detail = "idempotents in R_0 on " + std::to_string(corpus().size()) + " rings; Q[C_p] flagged for p = 2, 3, 5";
  return o;
}

Outcome pi0_suite() {
  Outcome o;
  std::string z6;
  for (const auto& r : corpus()) {
    try {
      const FiniteRingTable t(r);
      const Pi0Report rep = pi0_equivalences(t);
      if (r->name() == "Z6x3") {
        z6 = "(" + std::to_string(rep.spec_components) + "," + std::to_string(rep.spec_r0_components) + "," +
             std::to_string(rep.spec_star_components) + ")";
      }
    } catch (const std::exception& e) {
      fail(o, label(r) + ": " + e.what());
    }
  }
  if (z6 != "(2,2,2)") fail(o, "Z6[x]/(x^3) gave " + z6);
  if (o.pass) o.detail = "counts and bijections verified on " + std::to_string(corpus().size()) + " rings; Z6[x]/(x^3) " + z6;
  return o;
}

Outcome laurent_suite() {
  Outcome o;
  std::string summary;
  for (long n : {4L, 5L, 6L, 12L, 30L, 420L}) {
    const LaurentReport rep = laurent_spec_star(n);
    // Distinct prime divisors by plain trial division.
    std::vector<long> primes;
    long m = n;
    for (long p = 2; p <= m; ++p) {
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    }
    std::vector<long> got;
    for (const auto& gp : rep.graded_primes) got.push_back(gp.p.get_si());
    if (got != primes || !rep.bijection) fail(o, "n = " + std::to_string(n) + " mismatch");
    summary += (summary.empty() ? "" : ", ") + std::to_string(n) + ":" + std::to_string(got.size());
  }
  if (o.pass) o.detail = "graded primes per n: " + summary;
  return o;
}

Outcome proj_suite() {
  Outcome o;
  const auto r = ring("ring P { base Q\n grading Z\n gen x deg 1\n gen y deg 1 }");
  auto gens = [&](std::initializer_list<const char*> texts) {
    std::vector<Element> out;
    for (auto t : texts) out.push_back(dsl::evaluate(dsl::parse_expression(t, true), r));
    return out;
  };
  const auto g1 = gens({"x", "y"});
  const ProjResult a = proj_quasicompact(r, g1, 10);
  if (!a.quasi_compact || !verify(a, r, g1)) fail(o, "(x, y) not certified quasi-compact");
  const auto g2 = gens({"x^2*y", "x*y^2"});
  const ProjResult b = proj_quasicompact(r, g2, 10);
  if (b.quasi_compact || b.note.find("y-degree") == std::string::npos) fail(o, "(x^2*y, x*y^2) not Unknown with obstruction");
  const auto g3 = gens({"x^2", "y^3"});
  const ProjResult c = proj_quasicompact(r, g3, 10);
  if (!c.quasi_compact || !verify(c, r, g3)) fail(o, "(x^2, y^3) not certified");
  if (o.pass) o.detail = "(x,y) quasi-compact; (x^2*y, x*y^2) unknown at cap 10; certificates re-expand";
  return o;
}

// Everything above as one JSON document.
std::string full_report() {
  Json j;
  j["schema"] = kReportSchema;
  Json gallery = Json::array();
  for (const auto& id : gallery_ids()) gallery.push_back(gallery_json(run_gallery(id)));
  j["gallery"] = gallery;
  Json oracle = Json::array(), pi0 = Json::array(), decisions = Json::array();
  for (const auto& r : corpus()) {
    const FiniteRingTable t(r);
    oracle.push_back(oracle_report(t));
    pi0.push_back(pi0_report(t, pi0_equivalences(t)));
    for (std::uint32_t a = 0; a < t.size(); a += 37) {
      const Element f = t.element(a);
      decisions.push_back(decision_report("unit", f, is_unit(f), true));
      decisions.push_back(decision_report("zerodivisor", f, is_zero_divisor(f), true));
      decisions.push_back(decision_report("nilpotent", f, is_nilpotent(f), true));
    }
  }
  j["oracle"] = oracle;
  j["pi0"] = pi0;
  j["decisions"] = decisions;
  Json laurent = Json::array();
  for (long n : {4L, 5L, 6L, 12L, 30L, 420L}) laurent.push_back(laurent_report(laurent_spec_star(n)));
  j["laurent"] = laurent;
  return dump(j);
}

Outcome determinism() {
  Outcome o;
  const std::string first = full_report();
  const std::string second = full_report();
  if (first != second) fail(o, "reports differ");
  if (o.pass) o.detail = "two runs produced identical reports (" + std::to_string(first.size()) + " bytes)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"gallery exactness", gallery_exactness},
      {"McCoy homogeneous annihilators", mccoy_suite},
      {"unit decisions", unit_suite},
      {"nilpotent component and cross-product laws", armendariz_suite},
      {"Jacobson radical gradedness", bergman_suite},
      {"idempotents in degree zero", idempotent_suite},
      {"connected components", pi0_suite},
      {"Laurent graded spectrum", laurent_suite},
      {"Proj quasi-compactness", proj_suite},
      {"deterministic reports", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
