#include "gradedring/report.hpp"

namespace gradedring {

namespace {

Json header(const std::string& kind) {
  Json j;
  j["schema"] = kReportSchema;
  j["report"] = kind;
  return j;
}

Json ring_json(const RingHandle& r) {
  Json j;
  j["name"] = r->name();
  j["description"] = r->description();
  j["base"] = r->base().to_string();
  j["grading"] = r->grading().to_string();
  return j;
}

Json obstruction_json(const NotUnitCert& c) {
  Json j;
  if (const auto* cp = std::get_if<ContentProper>(&c.obstruction)) {
    j["kind"] = "content_proper";
    j["evidence"] = cp->evidence;
    if (cp->prime) j["prime"] = cp->prime->get_str();
    j["degree_zero_nonunit"] = cp->degree_zero_nonunit;
    j["span_misses_one"] = cp->span_misses_one;
  } else if (const auto* cx = std::get_if<CrossPairNotNilpotent>(&c.obstruction)) {
    j["kind"] = "cross_pair_not_nilpotent";
    j["grades"] = Json::array({to_json(cx->i), to_json(cx->k)});
  } else if (const auto* cf = std::get_if<CommonFactor>(&c.obstruction)) {
    j["kind"] = "common_factor";
    j["gcd"] = cf->gcd.to_string();
  } else {
    const auto& pi = std::get<PowerIdempotent>(c.obstruction);
    j["kind"] = "power_idempotent";
    j["exponent"] = pi.exponent;
    j["idempotent"] = pi.idempotent.to_string();
  }
  return j;
}

}  // namespace

Json to_json(const Grade& g) { return g.to_string(); }

Json to_json(const ElementSet& s) {
  Json a = Json::array();
  for (auto x : s) a.push_back(x);
  return a;
}

Json to_json(const Partition& p) {
  Json a = Json::array();
  for (const auto& block : p) a.push_back(block);
  return a;
}

Json certificate_json(const Certificate& c, bool verified) {
  Json j;
  j["verdict"] = verdict_name(c);
  Json cert = Json::object();
  if (const auto* u = std::get_if<UnitCert>(&c)) {
    cert["inverse"] = u->inverse.to_string();
  } else if (const auto* nu = std::get_if<NotUnitCert>(&c)) {
    cert = obstruction_json(*nu);
  } else if (const auto* n = std::get_if<NilpotentCert>(&c)) {
    cert["exponent"] = n->exponent;
  } else if (const auto* nn = std::get_if<NotNilpotentCert>(&c)) {
    if (nn->component) cert["component"] = to_json(*nn->component);
    if (nn->stabilized_power) cert["stabilized_power"] = *nn->stabilized_power;
    cert["detail"] = nn->detail;
  } else if (const auto* z = std::get_if<ZeroDivisorCert>(&c)) {
    cert["annihilator"] = z->annihilator.to_string();
    cert["homogeneous"] = z->homogeneous;
    if (z->homogeneous) cert["degree"] = to_json(z->annihilator.degree());
  } else if (const auto* nz = std::get_if<NotZeroDivisorCert>(&c)) {
    cert["reason"] = nz->reason;
  } else {
    const auto& r = std::get<IdempotentReport>(c);
    cert["homogeneous_degree_zero"] = r.homogeneous_degree_zero;
    Json off = Json::array();
    for (const auto& g : r.offending_grades) off.push_back(to_json(g));
    cert["offending_grades"] = off;
  }
  j["certificate"] = cert;
  j["verified"] = verified;
  return j;
}

Json decision_report(const std::string& question, const Element& f, const Certificate& c,
                     bool verified) {
  Json j = header("decide");
  j["question"] = question;
  j["ring"] = ring_json(f.ring());
  j["element"] = f.to_string();
  const Json cert = certificate_json(c, verified);
  for (auto it = cert.begin(); it != cert.end(); ++it) j[it.key()] = it.value();
  return j;
}

Json oracle_report(const FiniteRingTable& t) {
  Json j = header("oracle");
  j["ring"] = ring_json(t.ring());
  j["cardinality"] = t.size();
  j["units"] = t.units().size();
  j["nilpotents"] = t.nilradical().size();
  j["idempotents"] = t.idempotents().size();
  j["zero_divisors"] = t.zero_divisors().size();
  j["jacobson"] = t.jacobson().size();
  Json primes = Json::array();
  for (const auto& p : t.primes()) {
    Json pj;
    pj["size"] = p.size();
    pj["members"] = describe_set(t, p, 8);
    pj["graded"] = t.is_graded_subset(p);
    primes.push_back(pj);
  }
  j["primes"] = primes;
  auto gradedness = [&](const ElementSet& s) {
    Json g;
    const auto w = t.graded_witness(s);
    g["graded"] = !w.has_value();
    if (w) {
      g["witness"] = t.element(w->member).to_string();
      g["component"] = t.element(w->component).to_string();
      g["grade"] = to_json(t.algebra().grades()[w->grade_index]);
    }
    return g;
  };
  j["nilradical"] = gradedness(t.nilradical());
  j["jacobson_radical"] = gradedness(t.jacobson());
  j["idempotent_elements"] = describe_set(t, t.idempotents(), 16);
  return j;
}

Json pi0_report(const FiniteRingTable& t, const Pi0Report& r) {
  Json j = header("pi0");
  j["ring"] = ring_json(t.ring());
  j["counts"] = {{"spec", r.spec_components},
                 {"spec_r0", r.spec_r0_components},
                 {"spec_star", r.spec_star_components}};
  j["spec"] = to_json(r.spec);
  j["spec_r0"] = to_json(r.spec_r0);
  j["spec_star"] = to_json(r.spec_star);
  j["to_r0"] = r.to_r0;
  j["to_star"] = r.to_star;
  j["idempotents_in_r0"] = r.idempotents_in_r0;
  j["idempotent_sets_agree"] = r.idempotent_sets_agree;
  return j;
}

Json laurent_report(const LaurentReport& r) {
  Json j = header("laurent");
  j["n"] = r.n.get_str();
  Json primes = Json::array();
  for (const auto& p : r.graded_primes) {
    primes.push_back({{"p", p.p.get_str()},
                      {"degree_zero_generator", p.degree_zero_generator.get_str()},
                      {"description", p.description}});
  }
  j["graded_primes"] = primes;
  Json base = Json::array();
  for (const auto& p : r.spec_base) base.push_back(p.get_str());
  j["spec_base"] = base;
  j["bijection"] = r.bijection;
  j["exhaustive"] = r.exhaustive;
  return j;
}

Json proj_report(const RingHandle& ring, const std::vector<Element>& gens, const ProjResult& r) {
  Json j = header("proj");
  j["ring"] = ring_json(ring);
  Json g = Json::array();
  for (const auto& f : gens) g.push_back(f.to_string());
  j["gens"] = g;
  j["degree_cap"] = r.degree_cap;
  j["result"] = r.quasi_compact ? "quasi_compact" : "unknown";
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    Json m = Json::array();
    for (const auto& x : c.multipliers) m.push_back(x.to_string());
    certs.push_back({{"generator", ring->generators()[c.generator].name},
                     {"exponent", c.exponent},
                     {"multipliers", m}});
  }
  j["certificates"] = certs;
  Json unresolved = Json::array();
  for (auto u : r.unresolved) unresolved.push_back(ring->generators()[u].name);
  j["unresolved"] = unresolved;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gradedring
