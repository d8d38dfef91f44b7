#include "gradedring/gallery.hpp"

#include <regex>

#include "gradedring/constructors.hpp"
#include "gradedring/dsl.hpp"
#include "gradedring/errors.hpp"

namespace gradedring {

namespace {

class Recorder {
 public:
  explicit Recorder(GalleryReport& r) : r_(r) {}

  void object(const std::string& label, const std::string& value) { r_.objects.emplace_back(label, value); }
  void say(const std::string& line) { r_.transcript.push_back(line); }

  void expect(const std::string& name, const std::string& expected, const std::string& actual) {
    if (expected != actual) {
      throw TheoremViolation("gallery " + r_.id + ": check '" + name + "' failed\n  expected: " +
                             expected + "\n  actual:   " + actual);
    }
    r_.checks.push_back(GalleryCheck{name, expected, actual});
  }
  void expect_true(const std::string& name, bool value) {
    expect(name, "true", value ? "true" : "false");
  }

 private:
  GalleryReport& r_;
};

std::string yes(bool b) { return b ? "true" : "false"; }

Element named(const dsl::BuiltRing& b, const std::string& name) {
  for (const auto& [n, e] : b.elements) {
    if (n == name) return e;
  }
  throw PreconditionError("no element " + name);
}

void deligne(Recorder& rec) {
  const auto b = dsl::load_ring(R"(
ring S {
  base Q
  grading Z
  gen a1 deg 0
  gen a2 deg 0
  gen a3 deg 0
  gen a4 deg 0
  gen T deg 1
  rel a1*a3
  rel a2*a4
  rel a1*a4 + a2*a3
  elem f = a1*T + a2
  elem g = a3*T + a4
}
)");
  const Element f = named(b, "f"), g = named(b, "g");
  const Element a1T = component(f, Grade(b.ring->grading(), {1}));
  const Element a2 = component(f, Grade::zero(b.ring->grading()));
  rec.object("ring", b.ring->description());
  rec.object("f", f.to_string());
  rec.object("g", g.to_string());
  rec.expect("f*g", "0", (f * g).to_string());
  rec.expect_true("a1*T*g != 0", !(a1T * g).is_zero());
  rec.expect_true("a2*g != 0", !(a2 * g).is_zero());
  rec.say("(" + f.to_string() + ")*(" + g.to_string() + ") = 0, but neither component of " +
          f.to_string() + " annihilates " + g.to_string());
  std::vector<HomogenizeStep> trace;
  const Element h = homogenize_annihilator({g}, f, &trace);
  for (const auto& s : trace) {
    rec.say("multiply by the degree " + s.t.to_string() + " component: h = " + s.h.to_string());
  }
  rec.expect_true("h homogeneous", h.is_homogeneous());
  rec.expect("g*h", "0", (g * h).to_string());
  rec.expect("h", "a2*a3*T", h.to_string());
  rec.say("homogeneous annihilator: " + h.to_string());
}

void torsion_nilradical(Recorder& rec, int p) {
  const std::string ps = std::to_string(p);
  const auto b = dsl::load_ring("ring T" + ps + " {\n  base Zmod " + ps + "\n  grading Zmod " + ps +
                                "\n  gen x deg 1\n  rel x^" + ps + " - 1\n  elem f = x - 1\n}\n");
  const Element f = named(b, "f");
  const Element x = Element::generator(b.ring, "x");
  const Element minus_one = Element::constant(b.ring, -1);
  rec.object("ring", b.ring->description());
  rec.expect("(x - 1)^" + ps, "0", f.pow(p).to_string());
  const Certificate nf = is_nilpotent(f);
  rec.expect("x - 1 nilpotent", "nilpotent", verdict_name(nf));
  rec.expect("nilpotency exponent", ps, std::to_string(std::get<NilpotentCert>(nf).exponent));
  rec.expect("x nilpotent", "not_nilpotent", verdict_name(is_nilpotent(x)));
  rec.expect("-1 nilpotent", "not_nilpotent", verdict_name(is_nilpotent(minus_one)));
  const auto t = shared_table(b.ring);
  const auto wn = t->graded_witness(t->nilradical());
  const auto wj = t->graded_witness(t->jacobson());
  rec.expect_true("nilradical not graded", wn.has_value());
  rec.expect_true("Jacobson radical not graded", wj.has_value());
  rec.expect("witness", f.to_string(), t->element(wn->member).to_string());
  rec.say("p = " + ps + ": " + t->element(wn->member).to_string() + " is nilpotent, its component " +
          t->element(wn->component).to_string() + " is not");
}

void group_ring_idempotent(Recorder& rec, int p) {
  const std::string ps = std::to_string(p);
  std::string sum;
  for (int s = 0; s < p; ++s) sum += (s ? " + g^" + std::to_string(s) : "1");
  const auto b = dsl::load_ring("ring G" + ps + " {\n  base Q\n  grading Zmod " + ps +
                                "\n  gen g deg 1\n  rel g^" + ps + " - 1\n  elem f = 1/" + ps +
                                "*(" + sum + ")\n}\n");
  const Element f = named(b, "f");
  rec.object("ring", b.ring->description());
  rec.object("f", f.to_string());
  rec.expect("f^2 - f", "0", (f * f - f).to_string());
  rec.expect("nonzero components", ps, std::to_string(f.support().size()));
  const IdempotentReport r = check_idempotent_homogeneity(f);
  rec.expect_true("idempotent", r.is_idempotent);
  rec.expect("homogeneous of degree 0", "false", yes(r.homogeneous_degree_zero));
  rec.say("p = " + ps + ": " + f.to_string() + " is idempotent with a nonzero component in each of the " +
          ps + " degrees");
}

void laurent_unit(Recorder& rec) {
  const auto b = dsl::load_ring(R"(
ring L {
  base Zmod 6
  grading Z
  gen x deg 1 invertible
  elem f = 2*x + 3*x^-1
  elem g = 3*x + 2*x^-1
}
)");
  const Element f = named(b, "f"), g = named(b, "g");
  rec.object("ring", b.ring->description());
  rec.expect("f*g", "1", (f * g).to_string());
  rec.say("(" + f.to_string() + ")*(" + g.to_string() + ") = " + (f * g).to_string());
  const Certificate cf = is_unit(f);
  rec.expect("is_unit(f)", "unit", verdict_name(cf));
  rec.expect("f^-1", g.to_string(), std::get<UnitCert>(cf).inverse.to_string());
  const Certificate cg = is_unit(g);
  rec.expect("g^-1", f.to_string(), std::get<UnitCert>(cg).inverse.to_string());
  rec.expect_true("f not homogeneous", !f.is_homogeneous());
}

void assoc_graded_z4(Recorder& rec) {
  const RingHandle gr = associated_graded(4, 2);
  rec.object("ring", gr->description());
  const Element e = Element::generator(gr, "e");
  const Element u = Element::constant(gr, 1) + e;
  rec.expect("e^2", "0", (e * e).to_string());
  const Certificate c = is_unit(u);
  rec.expect("is_unit(1 + e)", "unit", verdict_name(c));
  rec.expect("(1 + e)*(1 + e)^-1", "1", (u * std::get<UnitCert>(c).inverse).to_string());
  rec.expect_true("1 + e not homogeneous", !u.is_homogeneous());
  rec.expect_true("base ring is a domain", gr->base().is_domain());
  const auto t = shared_table(gr);
  rec.expect_true("oracle: 1 + e is a unit", t->contains(t->units(), t->index_of(u)));
  rec.say("gr of (2) in Z4 over " + gr->base().to_string() + ": " + u.to_string() +
          " is a non-homogeneous unit");
}

void mccoy_z6(Recorder& rec) {
  const auto b = dsl::load_ring(R"(
ring M {
  base Zmod 6
  grading Z
  gen x deg 1
  elem a = 2
  elem b = 3*x
  elem c = 2 + 3*x
}
)");
  rec.object("ring", b.ring->description());
  for (const auto& name : {"a", "b"}) {
    const Element f = named(b, name);
    const Certificate c = is_zero_divisor(f);
    rec.expect("is_zero_divisor(" + f.to_string() + ")", "zero_divisor", verdict_name(c));
    const Element h = std::get<ZeroDivisorCert>(c).annihilator;
    rec.expect_true("annihilator of " + f.to_string() + " homogeneous and nonzero",
                    h.is_homogeneous() && (f * h).is_zero());
    rec.say(f.to_string() + " is killed by " + h.to_string());
  }
  const Element f = named(b, "c");
  rec.expect("is_zero_divisor(" + f.to_string() + ")", "not_zero_divisor",
             verdict_name(is_zero_divisor(f)));
  rec.say(f.to_string() + " is not a zero-divisor");
}

}  // namespace

const std::vector<std::string>& gallery_ids() {
  static const std::vector<std::string> ids{"deligne",      "torsion_nilradical", "group_ring_idempotent",
                                            "laurent_unit", "assoc_graded_z4",    "mccoy_z6"};
  return ids;
}

GalleryReport run_gallery(const std::string& id) {
  static const std::regex pattern(R"(([a-z_0-9]+)(?:\((\d+)\))?)");
  std::smatch m;
  if (!std::regex_match(id, m, pattern)) throw PreconditionError("unknown gallery id " + id);
  const std::string base = m[1];
  std::vector<int> ps{2, 3, 5};
  if (m[2].matched) {
    const int p = std::stoi(m[2]);
    if (p != 2 && p != 3 && p != 5) throw PreconditionError("gallery prime must be 2, 3 or 5");
    ps = {p};
  }
  GalleryReport r;
  r.id = id;
  Recorder rec(r);
  if (base == "torsion_nilradical") {
    for (int p : ps) torsion_nilradical(rec, p);
  } else if (base == "group_ring_idempotent") {
    for (int p : ps) group_ring_idempotent(rec, p);
  } else if (m[2].matched) {
    throw PreconditionError("gallery item " + base + " takes no parameter");
  } else if (base == "deligne") {
    deligne(rec);
  } else if (base == "laurent_unit") {
    laurent_unit(rec);
  } else if (base == "assoc_graded_z4") {
    assoc_graded_z4(rec);
  } else if (base == "mccoy_z6") {
    mccoy_z6(rec);
  } else {
    throw PreconditionError("unknown gallery id " + id);
  }
  return r;
}

Json gallery_json(const GalleryReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["report"] = "gallery";
  j["id"] = r.id;
  j["passed"] = true;
  Json objects = Json::array();
  for (const auto& [label, value] : r.objects) objects.push_back({{"label", label}, {"value", value}});
  j["objects"] = objects;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}});
  }
  j["checks"] = checks;
  j["transcript"] = r.transcript;
  return j;
}

}  // namespace gradedring
