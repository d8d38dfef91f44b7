#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gradedring {

/// Largest supported rank of a free lexicographic grading group.
inline constexpr int kMaxGradingRank = 8;

/// A grading group: either Z^d with the lexicographic order, or the cyclic
/// group Z/m which carries no compatible order.
class GradingGroup {
 public:
  enum class Kind { FreeLex, Cyclic };

  static GradingGroup free_lex(int rank);
  static GradingGroup cyclic(std::int64_t modulus);

  Kind kind() const { return kind_; }
  /// Number of coordinates of a grade (1 for cyclic groups).
  int rank() const { return kind_ == Kind::FreeLex ? static_cast<int>(param_) : 1; }
  std::int64_t modulus() const;
  bool is_torsion_free() const { return kind_ == Kind::FreeLex; }
  bool is_ordered() const { return is_torsion_free(); }

  std::string to_string() const;

  bool operator==(const GradingGroup&) const = default;

 private:
  GradingGroup(Kind kind, std::int64_t param) : kind_(kind), param_(param) {}

  Kind kind_;
  std::int64_t param_;  // rank or modulus
};

enum class Ordering { Less, Equal, Greater };

/// An element of a grading group.
class Grade {
 public:
  /// The identity of `group`.
  static Grade zero(const GradingGroup& group);

  /// Cyclic coordinates are reduced into [0, m).
  Grade(const GradingGroup& group, std::vector<std::int64_t> coords);

  const GradingGroup& group() const { return group_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  bool is_zero() const;

  Grade operator+(const Grade& other) const;
  Grade operator-() const;
  Grade operator-(const Grade& other) const { return *this + (-other); }
  /// k-fold sum (k may be negative).
  Grade scaled(std::int64_t k) const;

  bool operator==(const Grade& other) const = default;

  /// "3", "(1,-2)" or "2 mod 5".
  std::string to_string() const;

 private:
  GradingGroup group_;
  std::vector<std::int64_t> coords_;
};

/// Lexicographic comparison; throws UnorderedGradingError for cyclic groups.
Ordering compare(const Grade& a, const Grade& b);

bool is_torsion_free(const GradingGroup& group);

/// Strict weak order usable for sorting and map keys in any group. Agrees with
/// `compare` on ordered groups and orders cyclic grades by residue.
struct GradeKeyLess {
  bool operator()(const Grade& a, const Grade& b) const;
};

}  // namespace gradedring
