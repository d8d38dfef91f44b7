#include "gradedring/algebra.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "gradedring/errors.hpp"

namespace gradedring {

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

std::string to_string(Reduction r) {
  switch (r) {
    case Reduction::None: return "none";
    case Reduction::MonicUnivariate: return "monic";
    case Reduction::PerDegreeLinear: return "linear";
    case Reduction::MonomialIdeal: return "monomial";
  }
  return "?";
}

namespace {

int total_degree(const Monomial& m) { return std::accumulate(m.exps.begin(), m.exps.end(), 0); }

Monomial unit_monomial(std::size_t n) { return Monomial{std::vector<int>(n, 0)}; }

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (a.exps[i] > b.exps[i]) return false;
  }
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
  return r;
}

std::string format_coefficient(const mpq_class& c) { return c.get_str(); }

// Printer shared by presentations (before a Ring exists) and elements.
std::string format_terms(const std::vector<std::string>& names, const TermMap& terms,
                         bool tabulated) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    mpq_class c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    if (tabulated) {
      const std::string& n = names[static_cast<std::size_t>(it->first.exps[0])];
      if (n != "1") factors.push_back(n);
    } else {
      for (std::size_t i = 0; i < it->first.exps.size(); ++i) {
        const int e = it->first.exps[i];
        if (e == 0) continue;
        factors.push_back(e == 1 ? names[i] : names[i] + "^" + std::to_string(e));
      }
    }
    if (factors.empty()) {
      out << format_coefficient(c);
      continue;
    }
    if (c != 1) out << format_coefficient(c) << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

std::string format_grade_set(std::vector<Grade> grades) {
  std::sort(grades.begin(), grades.end(), GradeKeyLess{});
  grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
  std::string s = "{";
  for (std::size_t i = 0; i < grades.size(); ++i) {
    if (i > 0) s += ",";
    s += grades[i].to_string();
  }
  return s + "}";
}

bool lex_positive(const Grade& g) {
  for (auto c : g.coords()) {
    if (c != 0) return c > 0;
  }
  return false;
}

// All exponent vectors of total degree `d` supported on `vars`, in a vector
// of length `n`.
void enumerate_degree(std::size_t n, const std::vector<std::size_t>& vars, int d,
                      std::vector<Monomial>& out) {
  Monomial m = unit_monomial(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == vars.size()) {
      m.exps[vars[k]] = left;
      out.push_back(m);
      m.exps[vars[k]] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.exps[vars[k]] = e;
      rec(k + 1, left - e);
    }
    m.exps[vars[k]] = 0;
  };
  if (vars.empty()) {
    if (d == 0) out.push_back(m);
    return;
  }
  rec(0, d);
}

}  // namespace

// ---------------------------------------------------------------------------
// GradeMap

void GradeMap::validate() const {
  if (static_cast<int>(images.size()) != source.rank()) {
    throw PreconditionError("grade map needs " + std::to_string(source.rank()) +
                            " generator images, got " + std::to_string(images.size()));
  }
  for (const auto& img : images) {
    if (!(img.group() == target)) {
      throw PreconditionError("grade map image " + img.to_string() + " is not in " +
                              target.to_string());
    }
  }
  if (source.kind() == GradingGroup::Kind::Cyclic) {
    if (!images[0].scaled(source.modulus()).is_zero()) {
      throw PreconditionError("grade map not additive: " + std::to_string(source.modulus()) +
                              " * " + images[0].to_string() + " != 0 in " + target.to_string());
    }
  }
}

Grade GradeMap::operator()(const Grade& g) const {
  if (!(g.group() == source)) {
    throw MismatchError("grade " + g.to_string() + " is not in " + source.to_string());
  }
  Grade r = Grade::zero(target);
  for (std::size_t i = 0; i < images.size(); ++i) r = r + images[i].scaled(g.coords()[i]);
  return r;
}

// ---------------------------------------------------------------------------
// Ring

struct Ring::Slice {
  int degree = 0;
  std::vector<Monomial> columns;  // descending order
  std::map<Monomial, std::size_t> index;
  std::unique_ptr<RowEchelon> echelon;
};

Ring::~Ring() = default;

RingHandle Ring::build(RingPresentation p) {
  std::shared_ptr<Ring> ring(new Ring());
  ring->kind_ = Kind::Presented;
  ring->name_ = p.name;
  ring->base_ = p.base;
  ring->grading_ = p.grading;
  ring->generators_ = p.generators;
  ring->reduction_ = p.reduction;
  ring->presentation_ = std::make_unique<RingPresentation>(p);
  ring->validate_presented();
  return ring;
}

void Ring::validate_presented() {
  const std::size_t n = generators_.size();
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.name.empty()) throw PreconditionError("generator with empty name");
    if (!seen.insert(g.name).second) throw PreconditionError("duplicate generator " + g.name);
    if (!(g.grade.group() == grading_)) {
      throw PreconditionError("generator " + g.name + " has grade outside " +
                              grading_.to_string());
    }
    names.push_back(g.name);
  }

  // Canonical relations, dropping zero coefficients.
  relations_.clear();
  for (const auto& rel : presentation_->relations) {
    TermMap clean;
    for (const auto& [m, c] : rel) {
      if (m.exps.size() != n) throw PreconditionError("relation monomial has wrong length");
      for (std::size_t i = 0; i < n; ++i) {
        if (m.exps[i] < 0 && !generators_[i].invertible) {
          throw PreconditionError("negative exponent on non-invertible generator " +
                                  generators_[i].name);
        }
      }
      mpq_class v = base_.canonical(c);
      if (v != 0) clean[m] += v;
    }
    for (auto it = clean.begin(); it != clean.end();) {
      it->second = base_.canonical(it->second);
      it = it->second == 0 ? clean.erase(it) : std::next(it);
    }
    if (clean.empty()) continue;
    std::vector<Grade> grades;
    for (const auto& [m, c] : clean) grades.push_back(grade_of(m));
    std::set<Grade, GradeKeyLess> distinct(grades.begin(), grades.end());
    if (distinct.size() > 1) {
      throw PreconditionError("relation not homogeneous: grades " + format_grade_set(grades) +
                              " in " + format_terms(names, clean, false));
    }
    if (clean.size() == 1 && clean.begin()->first.is_one()) {
      throw PreconditionError("relation is a nonzero constant: " + format_terms(names, clean, false));
    }
    relations_.push_back(std::move(clean));
  }
  presentation_->relations = relations_;

  switch (reduction_) {
    case Reduction::None:
      if (!relations_.empty()) throw PreconditionError("relations given without a reduction engine");
      break;
    case Reduction::MonicUnivariate: {
      if (n != 1) throw PreconditionError("monic reduction needs exactly one generator");
      if (generators_[0].invertible) {
        throw PreconditionError("monic reduction needs a non-invertible generator");
      }
      if (relations_.size() != 1) throw PreconditionError("monic reduction needs exactly one relation");
      const auto& lead = *relations_[0].rbegin();
      if (lead.first.exps[0] < 1) throw PreconditionError("monic relation has degree 0");
      if (lead.second != 1) {
        throw PreconditionError("relation not monic: " + format_terms(names, relations_[0], false));
      }
      break;
    }
    case Reduction::PerDegreeLinear: {
      if (!base_.is_field()) {
        throw PreconditionError("linear reduction needs a field base, got " + base_.to_string() +
                                (base_.is_modular() ? " (composite modulus)" : ""));
      }
      is_relation_var_.assign(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        if (generators_[i].invertible) {
          throw PreconditionError("linear reduction does not allow invertible generator " +
                                  generators_[i].name);
        }
        if (grading_.kind() == GradingGroup::Kind::FreeLex && !generators_[i].grade.is_zero() &&
            !lex_positive(generators_[i].grade)) {
          throw PreconditionError("linear reduction needs generator grades >= 0, " +
                                  generators_[i].name + " has " + generators_[i].grade.to_string());
        }
      }
      for (const auto& rel : relations_) {
        std::set<int> degs;
        for (const auto& [m, c] : rel) {
          degs.insert(total_degree(m));
          for (std::size_t i = 0; i < n; ++i) {
            if (m.exps[i] != 0) is_relation_var_[i] = true;
          }
        }
        if (degs.size() != 1) {
          throw PreconditionError("relation not homogeneous in total degree: " +
                                  format_terms(names, rel, false));
        }
      }
      relation_vars_.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (is_relation_var_[i]) relation_vars_.push_back(i);
      }
      break;
    }
    case Reduction::MonomialIdeal:
      for (const auto& rel : relations_) {
        if (rel.size() != 1 || !base_.inverse(rel.begin()->second)) {
          throw PreconditionError("monomial reduction needs single-term relations with unit "
                                  "coefficient, got " + format_terms(names, rel, false));
        }
        const auto& m = rel.begin()->first;
        for (std::size_t i = 0; i < n; ++i) {
          if (m.exps[i] != 0 && generators_[i].invertible) {
            throw PreconditionError("monomial relation involves invertible generator " +
                                    generators_[i].name);
          }
        }
      }
      break;
  }
}

RingHandle Ring::tabulated(Tabulation t) {
  if (!t.base.is_modular()) throw PreconditionError("tabulated rings need a Z/n base");
  const std::size_t n = t.basis.size();
  if (t.products.size() != n) throw PreconditionError("structure table has wrong size");
  std::set<std::string> seen;
  for (const auto& b : t.basis) {
    if (!(b.grade.group() == t.grading)) throw PreconditionError("basis grade outside grading group");
    if (!seen.insert(b.name).second) throw PreconditionError("duplicate basis name " + b.name);
  }
  std::shared_ptr<Ring> ring(new Ring());
  ring->kind_ = Kind::Tabulated;
  ring->name_ = t.name;
  ring->base_ = t.base;
  ring->grading_ = t.grading;
  ring->basis_ = t.basis;
  for (const auto& b : t.basis) ring->generators_.push_back(Generator{b.name, b.grade, false});
  ring->tabulation_ = std::make_unique<Tabulation>(std::move(t));
  // Products must be homogeneous of the summed grade.
  const auto& tab = *ring->tabulation_;
  for (std::size_t i = 0; i < n; ++i) {
    if (tab.products[i].size() != n) throw PreconditionError("structure table has wrong size");
    for (std::size_t j = 0; j < n; ++j) {
      const Grade want = tab.basis[i].grade + tab.basis[j].grade;
      for (const auto& [m, c] : tab.products[i][j]) {
        if (!(tab.basis[static_cast<std::size_t>(m.exps[0])].grade == want)) {
          throw PreconditionError("product " + tab.basis[i].name + "*" + tab.basis[j].name +
                                  " is not homogeneous of grade " + want.to_string());
        }
      }
    }
  }
  return ring;
}

std::optional<std::size_t> Ring::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

const RingPresentation& Ring::presentation() const {
  if (!presentation_) throw PreconditionError("ring " + name_ + " is not presented");
  return *presentation_;
}

const Ring::Tabulation& Ring::tabulation() const {
  if (!tabulation_) throw PreconditionError("ring " + name_ + " is not tabulated");
  return *tabulation_;
}

Grade Ring::grade_of(const Monomial& m) const {
  if (kind_ == Kind::Tabulated) return basis_.at(static_cast<std::size_t>(m.exps.at(0))).grade;
  Grade g = Grade::zero(grading_);
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] != 0) g = g + generators_[i].grade.scaled(m.exps[i]);
  }
  return g;
}

mpq_class Ring::reduce_coefficient(const Monomial& m, const mpq_class& c) const {
  if (kind_ == Kind::Tabulated) {
    const mpz_class& order = basis_[static_cast<std::size_t>(m.exps[0])].order;
    if (order > 0) {
      mpz_class r;
      mpz_class num = base_.canonical(c).get_num();
      mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), order.get_mpz_t());
      return mpq_class(r);
    }
  }
  return base_.canonical(c);
}

TermMap Ring::normal_form(TermMap terms) const {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.exps.size() != monomial_length()) {
      throw PreconditionError("monomial length does not match ring " + name_);
    }
    if (kind_ == Kind::Presented) {
      for (std::size_t i = 0; i < it->first.exps.size(); ++i) {
        if (it->first.exps[i] < 0 && !generators_[i].invertible) {
          throw PreconditionError("negative exponent on non-invertible generator " +
                                  generators_[i].name);
        }
      }
    }
    it->second = reduce_coefficient(it->first, it->second);
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
  if (kind_ == Kind::Tabulated) return terms;
  switch (reduction_) {
    case Reduction::None: return terms;
    case Reduction::MonicUnivariate: return reduce_monic(std::move(terms));
    case Reduction::PerDegreeLinear: return reduce_per_degree(std::move(terms));
    case Reduction::MonomialIdeal: {
      for (auto it = terms.begin(); it != terms.end();) {
        bool dead = false;
        for (const auto& rel : relations_) {
          if (divides(rel.begin()->first, it->first)) {
            dead = true;
            break;
          }
        }
        it = dead ? terms.erase(it) : std::next(it);
      }
      return terms;
    }
  }
  return terms;
}

TermMap Ring::reduce_monic(TermMap terms) const {
  const TermMap& rel = relations_[0];
  const int d = rel.rbegin()->first.exps[0];
  while (!terms.empty() && terms.rbegin()->first.exps[0] >= d) {
    auto top = std::prev(terms.end());
    const int e = top->first.exps[0];
    const mpq_class c = top->second;
    terms.erase(top);
    // x^e = x^(e-d) * x^d and x^d = -(lower part of the relation).
    for (auto it = rel.begin(); it != rel.end(); ++it) {
      if (it->first.exps[0] == d) continue;
      Monomial m{{it->first.exps[0] + e - d}};
      mpq_class v = base_.sub(terms[m], base_.mul(c, it->second));
      if (v == 0) {
        terms.erase(m);
      } else {
        terms[m] = v;
      }
    }
  }
  return terms;
}

std::shared_ptr<const Ring::Slice> Ring::slice(int degree) const {
  std::lock_guard<std::mutex> lock(slice_mutex_);
  auto found = slices_.find(degree);
  if (found != slices_.end()) return found->second;
  if (degree > presentation_->slice_degree_cap) {
    throw CapExceededError("degree " + std::to_string(degree) + " slice exceeds cap " +
                           std::to_string(presentation_->slice_degree_cap) + " in ring " + name_);
  }
  auto s = std::make_shared<Slice>();
  s->degree = degree;
  const std::size_t n = generators_.size();
  enumerate_degree(n, relation_vars_, degree, s->columns);
  std::sort(s->columns.begin(), s->columns.end(), [](const Monomial& a, const Monomial& b) {
    return b < a;
  });
  for (std::size_t i = 0; i < s->columns.size(); ++i) s->index[s->columns[i]] = i;
  s->echelon = std::make_unique<RowEchelon>(base_, s->columns.size());
  for (const auto& rel : relations_) {
    const int dr = total_degree(rel.begin()->first);
    if (dr > degree) continue;
    std::vector<Monomial> shifts;
    enumerate_degree(n, relation_vars_, degree - dr, shifts);
    for (const auto& u : shifts) {
      Vector row(s->columns.size());
      for (const auto& [m, c] : rel) row[s->index.at(mono_mul(m, u))] = c;
      s->echelon->insert(std::move(row));
    }
  }
  slices_[degree] = s;
  return s;
}

std::size_t Ring::slice_quotient_dimension(int degree) const {
  if (kind_ != Kind::Presented || reduction_ != Reduction::PerDegreeLinear) {
    throw PreconditionError("slice dimensions exist for linear reduction only");
  }
  auto s = slice(degree);
  return s->columns.size() - s->echelon->rank();
}

TermMap Ring::reduce_per_degree(TermMap terms) const {
  int min_rel = std::numeric_limits<int>::max();
  for (const auto& rel : relations_) min_rel = std::min(min_rel, total_degree(rel.begin()->first));
  // Group by (free part, total degree of the relation-variable part).
  std::map<std::pair<Monomial, int>, TermMap> groups;
  for (auto& [m, c] : terms) {
    Monomial rel_part = m;
    Monomial free_part = m;
    int d = 0;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (is_relation_var_[i]) {
        free_part.exps[i] = 0;
        d += m.exps[i];
      } else {
        rel_part.exps[i] = 0;
      }
    }
    groups[{free_part, d}][rel_part] = c;
  }
  TermMap out;
  for (auto& [key, part] : groups) {
    const auto& [free_part, d] = key;
    if (d < min_rel) {
      for (const auto& [m, c] : part) out[mono_mul(m, free_part)] = c;
      continue;
    }
    auto s = slice(d);
    Vector v(s->columns.size());
    for (const auto& [m, c] : part) v[s->index.at(m)] = c;
    v = s->echelon->reduce(std::move(v));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) out[mono_mul(s->columns[i], free_part)] = v[i];
    }
  }
  return out;
}

TermMap Ring::add(const TermMap& a, const TermMap& b, const mpq_class& scale_b) const {
  TermMap r = a;
  for (const auto& [m, c] : b) r[m] += scale_b * c;
  for (auto it = r.begin(); it != r.end();) {
    it->second = reduce_coefficient(it->first, it->second);
    it = it->second == 0 ? r.erase(it) : std::next(it);
  }
  return r;
}

TermMap Ring::multiply(const TermMap& a, const TermMap& b) const {
  TermMap r;
  if (kind_ == Kind::Tabulated) {
    const auto& products = tabulation_->products;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        const auto& prod = products[static_cast<std::size_t>(ma.exps[0])]
                                   [static_cast<std::size_t>(mb.exps[0])];
        for (const auto& [m, c] : prod) r[m] += ca * cb * c;
      }
    }
  } else {
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) r[mono_mul(ma, mb)] += ca * cb;
    }
  }
  return normal_form(std::move(r));
}

TermMap Ring::one_terms() const {
  if (kind_ == Kind::Tabulated) return normal_form(tabulation_->one);
  TermMap t;
  t[unit_monomial(generators_.size())] = 1;
  return normal_form(std::move(t));
}

bool Ring::is_monoid_ring() const { return kind_ == Kind::Presented && relations_.empty(); }

bool Ring::is_positively_graded() const {
  if (kind_ != Kind::Presented || !grading_.is_ordered()) return false;
  return std::all_of(generators_.begin(), generators_.end(), [](const Generator& g) {
    return !g.invertible && lex_positive(g.grade);
  });
}

std::optional<FiniteBasis> Ring::finite_basis() const {
  if (!base_.is_modular()) return std::nullopt;
  FiniteBasis fb;
  if (kind_ == Kind::Tabulated) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].order <= 0) return std::nullopt;
      fb.monomials.push_back(Monomial{{static_cast<int>(i)}});
      fb.orders.push_back(basis_[i].order.get_ui());
    }
    return fb;
  }
  if (!base_.modulus().fits_ulong_p()) return std::nullopt;
  const unsigned long n = base_.modulus().get_ui();
  const std::size_t k = generators_.size();
  for (const auto& g : generators_) {
    if (g.invertible) return std::nullopt;
  }
  switch (reduction_) {
    case Reduction::None:
      if (k != 0) return std::nullopt;
      fb.monomials.push_back(unit_monomial(0));
      break;
    case Reduction::MonicUnivariate: {
      const int d = relations_[0].rbegin()->first.exps[0];
      for (int e = 0; e < d; ++e) fb.monomials.push_back(Monomial{{e}});
      break;
    }
    case Reduction::MonomialIdeal: {
      std::vector<int> bound(k, -1);
      for (const auto& rel : relations_) {
        const auto& m = rel.begin()->first;
        std::size_t nonzero = 0, which = 0;
        for (std::size_t i = 0; i < k; ++i) {
          if (m.exps[i] != 0) ++nonzero, which = i;
        }
        if (nonzero == 1 && (bound[which] < 0 || m.exps[which] < bound[which])) {
          bound[which] = m.exps[which];
        }
      }
      if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) return std::nullopt;
      Monomial m = unit_monomial(k);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
          if (!normal_form(TermMap{{m, mpq_class(1)}}).empty()) fb.monomials.push_back(m);
          return;
        }
        for (int e = 0; e < bound[i]; ++e) {
          m.exps[i] = e;
          rec(i + 1);
        }
        m.exps[i] = 0;
      };
      rec(0);
      std::sort(fb.monomials.begin(), fb.monomials.end());
      break;
    }
    case Reduction::PerDegreeLinear: {
      if (relation_vars_.size() != k) return std::nullopt;
      for (int d = 0;; ++d) {
        if (d > presentation_->slice_degree_cap) return std::nullopt;
        auto s = slice(d);
        if (s->columns.size() == s->echelon->rank()) break;
        for (std::size_t c = 0; c < s->columns.size(); ++c) {
          if (!s->echelon->is_pivot(c)) fb.monomials.push_back(s->columns[c]);
        }
      }
      std::sort(fb.monomials.begin(), fb.monomials.end());
      break;
    }
  }
  fb.orders.assign(fb.monomials.size(), n);
  return fb;
}

RingHandle Ring::regrade(const GradeMap& map) const {
  if (!(map.source == grading_)) {
    throw MismatchError("grade map source " + map.source.to_string() + " differs from " +
                        grading_.to_string());
  }
  map.validate();
  if (kind_ == Kind::Tabulated) {
    Tabulation t = *tabulation_;
    t.grading = map.target;
    for (auto& b : t.basis) b.grade = map(b.grade);
    return tabulated(std::move(t));
  }
  RingPresentation p = *presentation_;
  p.grading = map.target;
  for (auto& g : p.generators) g.grade = map(g.grade);
  return build(std::move(p));
}

std::string Ring::description() const {
  std::ostringstream out;
  out << name_ << ": base " << base_.to_string() << ", grading " << grading_.to_string();
  if (kind_ == Kind::Tabulated) {
    out << ", basis";
    for (const auto& b : basis_) out << " " << b.name << "@" << b.grade.to_string();
    return out.str();
  }
  out << ", gens";
  for (const auto& g : generators_) {
    out << " " << g.name << "@" << g.grade.to_string() << (g.invertible ? "(inv)" : "");
  }
  std::vector<std::string> names;
  for (const auto& g : generators_) names.push_back(g.name);
  for (const auto& r : relations_) out << "; " << format_terms(names, r, false) << " = 0";
  return out.str();
}

// ---------------------------------------------------------------------------
// Element

namespace {

const RingHandle& require_ring(const RingHandle& r) {
  if (!r) throw PreconditionError("element without a ring");
  return r;
}

void require_same_ring(const Element& a, const Element& b) {
  if (a.ring() != b.ring()) {
    throw MismatchError("elements of different rings: " + a.ring()->name() + " and " +
                        b.ring()->name());
  }
}

}  // namespace

Element::Element(RingHandle ring) : ring_(std::move(require_ring(ring))) {}

Element Element::from_terms(RingHandle ring, TermMap terms) {
  require_ring(ring);
  TermMap nf = ring->normal_form(std::move(terms));
  return Element(std::move(ring), std::move(nf));
}

Element Element::constant(RingHandle ring, const mpq_class& c) {
  require_ring(ring);
  TermMap one = ring->one_terms();
  return Element(ring, ring->add(TermMap{}, one, c));
}

Element Element::generator(RingHandle ring, const std::string& name) {
  require_ring(ring);
  auto idx = ring->generator_index(name);
  if (!idx) throw PreconditionError("unknown generator " + name + " in ring " + ring->name());
  if (ring->kind() == Ring::Kind::Tabulated) {
    return monomial(ring, Monomial{{static_cast<int>(*idx)}});
  }
  Monomial m{std::vector<int>(ring->monomial_length(), 0)};
  m.exps[*idx] = 1;
  return monomial(std::move(ring), std::move(m));
}

Element Element::monomial(RingHandle ring, Monomial m, const mpq_class& c) {
  TermMap t;
  t[std::move(m)] = c;
  return from_terms(std::move(ring), std::move(t));
}

bool Element::is_one() const { return terms_ == ring_->one_terms(); }

bool Element::is_homogeneous() const {
  if (terms_.empty()) return false;
  const Grade g = ring_->grade_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return ring_->grade_of(t.first) == g; });
}

Grade Element::degree() const {
  if (!is_homogeneous()) {
    throw PreconditionError("degree of non-homogeneous element " + to_string());
  }
  return ring_->grade_of(terms_.begin()->first);
}

std::vector<Grade> Element::support() const {
  std::set<Grade, GradeKeyLess> s;
  for (const auto& [m, c] : terms_) s.insert(ring_->grade_of(m));
  return {s.begin(), s.end()};
}

Element Element::operator+(const Element& other) const {
  require_same_ring(*this, other);
  return Element(ring_, ring_->add(terms_, other.terms_));
}

Element Element::operator-(const Element& other) const {
  require_same_ring(*this, other);
  return Element(ring_, ring_->add(terms_, other.terms_, -1));
}

Element Element::operator-() const { return Element(ring_, ring_->add(TermMap{}, terms_, -1)); }

Element Element::operator*(const Element& other) const {
  require_same_ring(*this, other);
  return Element(ring_, ring_->multiply(terms_, other.terms_));
}

Element Element::scaled(const mpq_class& c) const {
  return Element(ring_, ring_->add(TermMap{}, terms_, c));
}

Element Element::pow(long exponent) const {
  if (exponent < 0) {
    // Only monomial units c*x^a with invertible variables are inverted here.
    bool ok = terms_.size() == 1 && ring_->kind() == Ring::Kind::Presented;
    std::optional<mpq_class> inv;
    if (ok) {
      const auto& [m, c] = *terms_.begin();
      inv = ring_->base().inverse(c);
      for (std::size_t i = 0; ok && i < m.exps.size(); ++i) {
        if (m.exps[i] != 0 && !ring_->generators()[i].invertible) ok = false;
      }
      ok = ok && inv.has_value();
    }
    if (!ok) throw PreconditionError("negative exponent on non-unit " + to_string());
    Monomial m = terms_.begin()->first;
    for (auto& e : m.exps) e = -e;
    return Element::monomial(ring_, std::move(m), *inv).pow(-exponent);
  }
  Element result = constant(ring_, 1);
  Element base = *this;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Element::operator==(const Element& other) const {
  return ring_ == other.ring_ && terms_ == other.terms_;
}

std::string Element::to_string() const {
  std::vector<std::string> names;
  for (const auto& g : ring_->generators()) names.push_back(g.name);
  return format_terms(names, terms_, ring_->kind() == Ring::Kind::Tabulated);
}

Element elem_arith(ElemOp op, const Element& f, const Element& g) {
  switch (op) {
    case ElemOp::Add: return f + g;
    case ElemOp::Sub: return f - g;
    case ElemOp::Mul: return f * g;
  }
  throw PreconditionError("unknown element operation");
}

Element elem_pow(const Element& f, long exponent) { return f.pow(exponent); }

std::vector<std::pair<Grade, Element>> homogeneous_components(const Element& f) {
  std::map<Grade, TermMap, GradeKeyLess> parts;
  for (const auto& [m, c] : f.terms()) parts[f.ring()->grade_of(m)][m] = c;
  std::vector<std::pair<Grade, Element>> out;
  for (auto& [g, t] : parts) out.emplace_back(g, Element::from_terms(f.ring(), std::move(t)));
  return out;
}

Element component(const Element& f, const Grade& g) {
  TermMap t;
  for (const auto& [m, c] : f.terms()) {
    if (f.ring()->grade_of(m) == g) t[m] = c;
  }
  return Element::from_terms(f.ring(), std::move(t));
}

std::pair<Grade, Grade> support_bounds(const Element& f) {
  if (f.is_zero()) throw PreconditionError("support bounds of the zero element");
  if (!f.ring()->grading().is_ordered()) throw UnorderedGradingError();
  auto s = f.support();
  return {s.front(), s.back()};
}

std::vector<Element> content_generators(const Element& f) {
  std::vector<Element> out;
  for (auto& [g, c] : homogeneous_components(f)) out.push_back(std::move(c));
  return out;
}

RingHandle regrade(const RingHandle& ring, const GradeMap& map) { return ring->regrade(map); }

RingHandle with_relations(const RingHandle& ring, const std::vector<Element>& relations,
                          Reduction reduction) {
  RingPresentation p = ring->presentation();
  for (const auto& r : relations) {
    if (r.ring() != ring) throw MismatchError("relation from a different ring");
    p.relations.push_back(r.terms());
  }
  p.reduction = reduction;
  return Ring::build(std::move(p));
}

Element transport(const Element& f, const RingHandle& target) {
  const auto& src = f.ring()->generators();
  const auto& dst = target->generators();
  if (src.size() != dst.size() || f.ring()->kind() != target->kind()) {
    throw MismatchError("cannot transport between " + f.ring()->name() + " and " + target->name());
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i].name != dst[i].name) {
      throw MismatchError("generator " + src[i].name + " has no counterpart in " + target->name());
    }
  }
  return Element::from_terms(target, f.terms());
}

}  // namespace gradedring
