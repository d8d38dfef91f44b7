// Command-line front end: parse ring files, evaluate elements, run decisions,
// the finite oracle, spectra reports and the gallery.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gradedring/dsl.hpp"
#include "gradedring/errors.hpp"
#include "gradedring/gallery.hpp"
#include "gradedring/report.hpp"

using namespace gradedring;

namespace {

struct Options {
  bool json = false;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::string ring_name;
};

// Plain-text rendering of a report: one "key: value" line per scalar.
void render(const Json& j, std::ostream& out, const std::string& indent = "") {
  std::size_t index = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++index) {
    const Json& v = it.value();
    const std::string key = j.is_object() ? it.key() : "[" + std::to_string(index) + "]";
    if (key == "schema") continue;
    if (v.is_structured() && !v.empty()) {
      const bool flat = v.is_array() && std::none_of(v.begin(), v.end(), [](const Json& x) {
                          return x.is_object();
                        });
      if (flat) {
        out << indent << key << ": " << v.dump() << "\n";
      } else {
        out << indent << key << ":\n";
        render(v, out, indent + "  ");
      }
    } else if (v.is_string()) {
      out << indent << key << ": " << v.get<std::string>() << "\n";
    } else {
      out << indent << key << ": " << v.dump() << "\n";
    }
  }
}

void emit(const Json& j, const Options& o) {
  if (o.json) {
    std::cout << dump(j);
  } else {
    render(j, std::cout);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Element parse_element(const dsl::BuiltRing& b, const std::string& text) {
  const auto e = dsl::parse_expression(text, !b.ring->base().is_modular() &&
                                                 b.ring->base() == BaseRing::rationals());
  return dsl::evaluate(e, b.ring, b.elements);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(part);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Graded commutative rings: exact decisions and finite verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print JSON reports");
  app.add_option("--cap", o.cap, "Largest finite ring to enumerate");
  app.add_option("--ring", o.ring_name, "Ring block to use when a file has several");

  std::string file, expr, seed, id;

  auto* parse = app.add_subcommand("parse", "Parse a ring file and print it back");
  parse->add_option("file", file)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate an expression to normal form");
  eval->add_option("file", file)->required();
  eval->add_option("expr", expr)->required();

  std::string question;
  auto* decide = app.add_subcommand("decide", "Decide a property of an element");
  decide->add_option("question", question)
      ->required()
      ->check(CLI::IsMember({"unit", "nilpotent", "zerodivisor", "idempotent"}));
  decide->add_option("file", file)->required();
  decide->add_option("expr", expr)->required();
  decide->add_option("--seed", seed, "A known nonzero annihilator (zerodivisor)");
  unsigned power_cap = DecideOptions{}.power_cap;
  decide->add_option("--power-cap", power_cap, "Largest power tried by power searches");

  bool report = false, serial = false;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive model of a finite graded ring");
  oracle->add_option("file", file)->required();
  oracle->add_flag("--report", report, "Summary report (the default)");
  oracle->add_flag("--serial", serial, "Use the serial kernels");

  auto* spectra = app.add_subcommand("spectra", "Spectra of finite rings and Laurent rings");
  spectra->require_subcommand(0, 1);
  spectra->add_option("file", file);
  bool pi0 = false, pierce = false;
  spectra->add_flag("--pi0", pi0, "Compare components of Spec R, Spec R_0 and Spec* R");
  spectra->add_flag("--pierce", pierce, "Pierce spectrum and graded primes");
  std::string n_text;
  auto* laurent = spectra->add_subcommand("laurent", "Graded primes of Z_n[x, x^-1]");
  laurent->add_option("--n", n_text)->required();
  std::string gens_text;
  unsigned degree_cap = 10;
  auto* proj = spectra->add_subcommand("proj", "Bounded quasi-compactness check for Proj");
  proj->add_option("file", file)->required();
  proj->add_option("--gens", gens_text)->required();
  proj->add_option("--cap", degree_cap, "Largest exponent tried");

  auto* gallery = app.add_subcommand("gallery", "Run a worked example");
  gallery->add_option("id", id, "Item id, id(p), or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  DecideOptions dopts;
  dopts.enumeration_cap = o.cap;
  dopts.power_cap = power_cap;

  if (*parse) {
    const auto ast = dsl::parse_ring_file(read_file(file));
    if (o.json) {
      Json blocks = Json::array();
      for (const auto& b : ast.blocks) {
        const auto built = dsl::build_ring(b);
        Json elems = Json::object();
        for (const auto& [name, e] : built.elements) elems[name] = e.to_string();
        blocks.push_back({{"name", b.name}, {"ring", built.ring->description()}, {"elements", elems}});
      }
      std::cout << dump({{"schema", kReportSchema}, {"report", "parse"}, {"blocks", blocks}});
    } else {
      for (const auto& b : ast.blocks) dsl::build_ring(b);
      std::cout << dsl::print_ring_file(ast);
    }
    return 0;
  }

  if (*eval) {
    const auto b = dsl::load_ring_file(file, o.ring_name);
    const Element f = parse_element(b, expr);
    Json j{{"schema", kReportSchema}, {"report", "eval"}, {"element", f.to_string()},
           {"homogeneous", f.is_homogeneous()}};
    Json comps = Json::array();
    for (const auto& [g, c] : homogeneous_components(f)) {
      comps.push_back({{"grade", g.to_string()}, {"component", c.to_string()}});
    }
    j["components"] = comps;
    if (o.json) {
      std::cout << dump(j);
    } else {
      std::cout << f.to_string() << "\n";
    }
    return 0;
  }

  if (*decide) {
    const auto b = dsl::load_ring_file(file, o.ring_name);
    const Element f = parse_element(b, expr);
    Certificate c = IdempotentReport{};
    if (question == "unit") {
      c = is_unit(f, dopts);
    } else if (question == "nilpotent") {
      c = is_nilpotent(f, dopts);
    } else if (question == "zerodivisor") {
      std::optional<Element> s;
      if (!seed.empty()) s = parse_element(b, seed);
      c = is_zero_divisor(f, s, dopts);
    } else {
      c = check_idempotent_homogeneity(f);
    }
    emit(decision_report(question, f, c, verify(f, c, dopts)), o);
    return 0;
  }

  if (*oracle) {
    const auto b = dsl::load_ring_file(file, o.ring_name);
    const FiniteRingTable t(b.ring, o.cap, serial ? KernelMode::Serial : KernelMode::Parallel);
    emit(oracle_report(t), o);
    return 0;
  }

  if (*spectra) {
    if (*laurent) {
      emit(laurent_report(laurent_spec_star(mpz_class(n_text))), o);
      return 0;
    }
    if (*proj) {
      const auto b = dsl::load_ring_file(file, o.ring_name);
      std::vector<Element> gens;
      for (const auto& g : split_commas(gens_text)) gens.push_back(parse_element(b, g));
      emit(proj_report(b.ring, gens, proj_quasicompact(b.ring, gens, degree_cap)), o);
      return 0;
    }
    if (file.empty()) throw PreconditionError("spectra needs a ring file, `laurent` or `proj`");
    const auto b = dsl::load_ring_file(file, o.ring_name);
    const FiniteRingTable t(b.ring, o.cap);
    if (pierce) {
      const PierceData d = pierce_spectrum(t);
      const GradedPrimes gp = graded_primes(t);
      Json j{{"schema", kReportSchema}, {"report", "pierce"}, {"ring", b.ring->description()}};
      j["primitive_idempotents"] = describe_set(t, d.primitive_idempotents, 16);
      j["max_regular_ideals"] = d.max_regular_ideals.size();
      j["components_spec"] = to_json(d.components_spec);
      j["components_spec_star"] = to_json(d.components_spec_star);
      j["graded_primes"] = gp.graded;
      j["minimal_primes"] = gp.minimal;
      Json w = Json::array();
      for (const auto& [prime, wit] : gp.witnesses) {
        w.push_back({{"prime", prime},
                     {"member", t.element(wit.member).to_string()},
                     {"component", t.element(wit.component).to_string()}});
      }
      j["non_graded_witnesses"] = w;
      emit(j, o);
      if (!pi0) return 0;
    }
    emit(pi0_report(t, pi0_equivalences(t)), o);
    return 0;
  }

  if (*gallery) {
    std::vector<std::string> ids{id};
    if (id == "all") ids = gallery_ids();
    for (const auto& i : ids) {
      const GalleryReport r = run_gallery(i);
      if (o.json) {
        std::cout << dump(gallery_json(r));
      } else {
        std::cout << r.id << ": pass (" << r.checks.size() << " checks)\n";
        for (const auto& line : r.transcript) std::cout << "  " << line << "\n";
      }
    }
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
