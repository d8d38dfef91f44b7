#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedring/grading.hpp"
#include "gradedring/linear.hpp"
#include "gradedring/scalars.hpp"

namespace gradedring {

/// Exponent vector aligned with a ring's generators. Tabulated rings use a
/// one-entry vector holding the basis index.
struct Monomial {
  std::vector<int> exps;

  auto operator<=>(const Monomial&) const = default;
  bool is_one() const;
};

/// Sparse coefficient map, kept free of zero coefficients.
using TermMap = std::map<Monomial, mpq_class>;

struct Generator {
  std::string name;
  Grade grade;
  bool invertible = false;
};

enum class Reduction {
  None,             ///< monoid ring: polynomial or Laurent
  MonicUnivariate,  ///< B[x]/(monic m(x)) by division
  PerDegreeLinear,  ///< homogeneous ideal over a field, reduced slice by slice
  MonomialIdeal,    ///< quotient by monomials with unit coefficient
};

std::string to_string(Reduction r);

struct RingPresentation {
  BaseRing base = BaseRing::integers();
  GradingGroup grading = GradingGroup::free_lex(1);
  std::vector<Generator> generators;
  std::vector<TermMap> relations;
  Reduction reduction = Reduction::None;
  /// Largest total degree a PerDegreeLinear slice may be computed for.
  int slice_degree_cap = 12;
  std::string name = "R";
};

/// Additive basis element of a tabulated (structure-constant) ring.
struct BasisElement {
  std::string name;
  Grade grade;
  /// Additive order; 0 means the coefficient lives in the base ring unreduced.
  mpz_class order;
};

/// Finite additive basis of a ring whose coefficients lie in Z/n.
struct FiniteBasis {
  std::vector<Monomial> monomials;
  std::vector<unsigned long> orders;
};

class Ring;
using RingHandle = std::shared_ptr<const Ring>;
class Element;

/// An additive map between grading groups, given by the images of the
/// standard generators of the source (unit vectors, or 1 for a cyclic group).
struct GradeMap {
  GradingGroup source;
  GradingGroup target;
  std::vector<Grade> images;

  /// Throws PreconditionError if the data does not define a homomorphism.
  void validate() const;
  Grade operator()(const Grade& g) const;
};

/// A graded commutative ring: a presentation with a normal-form engine, or an
/// explicit finite structure-constant table. Immutable after construction
/// apart from internally synchronized slice memoization.
class Ring {
 public:
  enum class Kind { Presented, Tabulated };

  struct Tabulation {
    BaseRing base;
    GradingGroup grading;
    std::vector<BasisElement> basis;
    /// products[i][j] = b_i * b_j as a combination of basis indices.
    std::vector<std::vector<TermMap>> products;
    TermMap one;
    std::string name;
  };

  /// Validates and builds a presented ring.
  static RingHandle build(RingPresentation presentation);
  static RingHandle tabulated(Tabulation tabulation);

  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;
  ~Ring();

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const BaseRing& base() const { return base_; }
  const GradingGroup& grading() const { return grading_; }
  /// Generators (presented) or basis elements viewed as named symbols (tabulated).
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<std::size_t> generator_index(const std::string& name) const;
  const std::vector<TermMap>& relations() const { return relations_; }
  Reduction reduction() const { return reduction_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t monomial_length() const {
    return kind_ == Kind::Tabulated ? 1 : generators_.size();
  }

  Grade grade_of(const Monomial& m) const;
  TermMap normal_form(TermMap terms) const;
  TermMap multiply(const TermMap& a, const TermMap& b) const;
  TermMap add(const TermMap& a, const TermMap& b, const mpq_class& scale_b = 1) const;
  TermMap one_terms() const;

  /// Polynomial or Laurent ring without relations.
  bool is_monoid_ring() const;
  /// Ordered grading, no invertible generators and every generator of
  /// positive grade, so that the degree-zero part is the base ring.
  bool is_positively_graded() const;
  /// The finite additive basis when the ring is a finite ring; std::nullopt
  /// otherwise.
  std::optional<FiniteBasis> finite_basis() const;

  RingHandle regrade(const GradeMap& map) const;
  const RingPresentation& presentation() const;
  const Tabulation& tabulation() const;

  /// Dimension of the degree-d slice of the quotient (PerDegreeLinear only).
  std::size_t slice_quotient_dimension(int degree) const;

  std::string description() const;

 private:
  struct Slice;

  Ring() = default;
  void validate_presented();
  TermMap reduce_monic(TermMap terms) const;
  TermMap reduce_per_degree(TermMap terms) const;
  std::shared_ptr<const Slice> slice(int degree) const;
  mpq_class reduce_coefficient(const Monomial& m, const mpq_class& c) const;

  Kind kind_ = Kind::Presented;
  std::string name_;
  BaseRing base_ = BaseRing::integers();
  GradingGroup grading_ = GradingGroup::free_lex(1);
  std::vector<Generator> generators_;
  std::vector<TermMap> relations_;
  Reduction reduction_ = Reduction::None;
  std::vector<BasisElement> basis_;

  std::unique_ptr<RingPresentation> presentation_;
  std::unique_ptr<Tabulation> tabulation_;

  // PerDegreeLinear data
  std::vector<std::size_t> relation_vars_;  // generator indices appearing in relations
  std::vector<bool> is_relation_var_;
  mutable std::mutex slice_mutex_;
  mutable std::map<int, std::shared_ptr<const Slice>> slices_;
};

/// A ring element in normal form.
class Element {
 public:
  explicit Element(RingHandle ring);

  static Element from_terms(RingHandle ring, TermMap terms);
  static Element constant(RingHandle ring, const mpq_class& c);
  static Element generator(RingHandle ring, const std::string& name);
  static Element monomial(RingHandle ring, Monomial m, const mpq_class& c = 1);

  const RingHandle& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous element.
  Grade degree() const;
  /// Grades present in the support, in GradeKeyLess order.
  std::vector<Grade> support() const;

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator-() const;
  Element operator*(const Element& other) const;
  Element scaled(const mpq_class& c) const;
  /// Negative exponents are accepted for invertible monomials only.
  Element pow(long exponent) const;

  bool operator==(const Element& other) const;
  bool operator!=(const Element& other) const { return !(*this == other); }
  bool operator<(const Element& other) const { return terms_ < other.terms_; }

  std::string to_string() const;

 private:
  Element(RingHandle ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingHandle ring_;
  TermMap terms_;
};

enum class ElemOp { Add, Sub, Mul };

Element elem_arith(ElemOp op, const Element& f, const Element& g);
Element elem_pow(const Element& f, long exponent);

/// Homogeneous components in increasing grade order.
std::vector<std::pair<Grade, Element>> homogeneous_components(const Element& f);
/// Component of grade `g` (zero if absent).
Element component(const Element& f, const Grade& g);
/// (least, greatest) grade of the support of a nonzero element.
std::pair<Grade, Grade> support_bounds(const Element& f);
/// Generators of the content ideal C(f).
std::vector<Element> content_generators(const Element& f);

RingHandle regrade(const RingHandle& ring, const GradeMap& map);
/// Same ring and grading with extra relations and a new reduction engine.
RingHandle with_relations(const RingHandle& ring, const std::vector<Element>& relations,
                          Reduction reduction);
/// Transports an element of a presented ring to a ring with the same
/// generators (e.g. a regraded or quotient ring).
Element transport(const Element& f, const RingHandle& target);

}  // namespace gradedring
