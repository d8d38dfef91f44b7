#include "gradedring/grading.hpp"

#include <algorithm>
#include <sstream>

#include "gradedring/errors.hpp"

namespace gradedring {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void require_same_group(const Grade& a, const Grade& b) {
  if (!(a.group() == b.group())) {
    throw MismatchError("grading group mismatch: " + a.group().to_string() + " vs " +
                        b.group().to_string());
  }
}

}  // namespace

GradingGroup GradingGroup::free_lex(int rank) {
  if (rank < 1 || rank > kMaxGradingRank) {
    throw PreconditionError("free grading rank must lie in [1, " +
                            std::to_string(kMaxGradingRank) + "], got " + std::to_string(rank));
  }
  return GradingGroup(Kind::FreeLex, rank);
}

GradingGroup GradingGroup::cyclic(std::int64_t modulus) {
  if (modulus < 2) {
    throw PreconditionError("cyclic grading modulus must be >= 2, got " + std::to_string(modulus));
  }
  return GradingGroup(Kind::Cyclic, modulus);
}

std::int64_t GradingGroup::modulus() const {
  if (kind_ != Kind::Cyclic) throw PreconditionError("free grading group has no modulus");
  return param_;
}

std::string GradingGroup::to_string() const {
  if (kind_ == Kind::Cyclic) return "Zmod " + std::to_string(param_);
  if (param_ == 1) return "Z";
  return "Z^" + std::to_string(param_) + " lex";
}

Grade Grade::zero(const GradingGroup& group) {
  return Grade(group, std::vector<std::int64_t>(static_cast<std::size_t>(group.rank()), 0));
}

Grade::Grade(const GradingGroup& group, std::vector<std::int64_t> coords)
    : group_(group), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != group_.rank()) {
    throw PreconditionError("grade has " + std::to_string(coords_.size()) +
                            " coordinates, group " + group_.to_string() + " needs " +
                            std::to_string(group_.rank()));
  }
  if (group_.kind() == GradingGroup::Kind::Cyclic) {
    coords_[0] = floor_mod(coords_[0], group_.modulus());
  }
}

bool Grade::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

Grade Grade::operator+(const Grade& other) const {
  require_same_group(*this, other);
  std::vector<std::int64_t> sum(coords_.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = coords_[i] + other.coords_[i];
  return Grade(group_, std::move(sum));
}

Grade Grade::operator-() const { return scaled(-1); }

Grade Grade::scaled(std::int64_t k) const {
  std::vector<std::int64_t> out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = group_.kind() == GradingGroup::Kind::Cyclic
                 ? floor_mod(coords_[i] * floor_mod(k, group_.modulus()), group_.modulus())
                 : coords_[i] * k;
  }
  return Grade(group_, std::move(out));
}

std::string Grade::to_string() const {
  std::ostringstream os;
  if (group_.kind() == GradingGroup::Kind::Cyclic) {
    os << coords_[0] << " mod " << group_.modulus();
  } else if (coords_.size() == 1) {
    os << coords_[0];
  } else {
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
    os << ')';
  }
  return os.str();
}

Ordering compare(const Grade& a, const Grade& b) {
  require_same_group(a, b);
  if (!a.group().is_ordered()) throw UnorderedGradingError();
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    if (a.coords()[i] < b.coords()[i]) return Ordering::Less;
    if (a.coords()[i] > b.coords()[i]) return Ordering::Greater;
  }
  return Ordering::Equal;
}

bool is_torsion_free(const GradingGroup& group) { return group.is_torsion_free(); }

bool GradeKeyLess::operator()(const Grade& a, const Grade& b) const {
  return a.coords() < b.coords();
}

}  // namespace gradedring
