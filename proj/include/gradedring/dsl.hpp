#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradedring/algebra.hpp"

namespace gradedring::dsl {

struct SourcePos {
  int line = 0;
  int column = 0;
};

/// Expression tree. Integer literals are non-negative; signs are Neg nodes.
struct Expr {
  enum class Kind { Int, Rational, Name, Add, Sub, Mul, Neg, Pow };

  Kind kind = Kind::Int;
  mpq_class value;        // Int, Rational
  std::string name;       // Name
  long exponent = 0;      // Pow
  std::vector<Expr> args;
  SourcePos pos;

  /// Structural equality; source positions are ignored.
  bool operator==(const Expr& other) const;
};

struct GenDecl {
  std::string name;
  std::vector<std::int64_t> grade;
  bool invertible = false;
  SourcePos pos;

  bool operator==(const GenDecl& o) const {
    return name == o.name && grade == o.grade && invertible == o.invertible;
  }
};

struct ElemDecl {
  std::string name;
  Expr value;
  SourcePos pos;

  bool operator==(const ElemDecl& o) const { return name == o.name && value == o.value; }
};

struct RingBlock {
  std::string name;
  std::optional<BaseRing> base;
  std::optional<GradingGroup> grading;
  std::vector<GenDecl> gens;
  std::vector<Expr> rels;
  std::optional<Reduction> reduction;
  std::vector<ElemDecl> elems;
  SourcePos pos;

  bool operator==(const RingBlock& o) const {
    return name == o.name && base == o.base && grading == o.grading && gens == o.gens &&
           rels == o.rels && reduction == o.reduction && elems == o.elems;
  }
};

struct RingFile {
  std::vector<RingBlock> blocks;

  bool operator==(const RingFile&) const = default;
};

RingFile parse_ring_file(std::string_view text);
/// Parses a standalone expression; rational literals need `allow_rationals`.
Expr parse_expression(std::string_view text, bool allow_rationals);

std::string print_expr(const Expr& e);
std::string print_ring_file(const RingFile& file);

struct BuiltRing {
  RingHandle ring;
  /// Elements declared with `elem`, in declaration order.
  std::vector<std::pair<std::string, Element>> elements;
};

/// Builds the ring of a block. Semantic errors carry the offending position.
BuiltRing build_ring(const RingBlock& block);

/// Evaluates `e` in `ring`. Names resolve to generators first, then to
/// entries of `named`.
Element evaluate(const Expr& e, const RingHandle& ring,
                 const std::vector<std::pair<std::string, Element>>& named = {});

/// Parses `text` and builds the block called `name` (the first block when empty).
BuiltRing load_ring(std::string_view text, const std::string& name = "");
BuiltRing load_ring_file(const std::string& path, const std::string& name = "");

}  // namespace gradedring::dsl
