#include "gradedring/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "gradedring/constructors.hpp"
#include "gradedring/errors.hpp"

namespace gradedring {

namespace {

std::uint32_t residue(const mpq_class& c, std::uint32_t order) {
  if (c.get_den() != 1) throw PreconditionError("non-integral structure constant");
  mpz_class r;
  mpz_class num = c.get_num();
  mpz_fdiv_r_ui(r.get_mpz_t(), num.get_mpz_t(), order);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteAlgebra

FiniteAlgebra::FiniteAlgebra(RingHandle ring, std::uint64_t cap) : ring_(std::move(ring)) {
  auto fb = ring_->finite_basis();
  if (!fb) throw PreconditionError("infinite ring: " + ring_->name() + " has no finite additive basis");
  std::uint64_t size = 1;
  for (auto o : fb->orders) {
    size *= o;
    if (size > cap) {
      throw CapExceededError("ring " + ring_->name() + " has more than " + std::to_string(cap) +
                             " elements");
    }
  }
  size_ = static_cast<std::uint32_t>(size);
  monomials_ = fb->monomials;
  const std::size_t dim = monomials_.size();
  std::uint32_t place = 1;
  for (auto o : fb->orders) {
    orders_.push_back(static_cast<std::uint32_t>(o));
    radix_.push_back(place);
    place *= static_cast<std::uint32_t>(o);
  }

  Ring::Tabulation tab = tabulate(ring_);
  for (const auto& b : tab.basis) grades_.push_back(b.grade);
  distinct_grades_ = grades_;
  std::sort(distinct_grades_.begin(), distinct_grades_.end(), GradeKeyLess{});
  distinct_grades_.erase(std::unique(distinct_grades_.begin(), distinct_grades_.end()),
                         distinct_grades_.end());
  for (const auto& g : grades_) {
    auto it = std::lower_bound(distinct_grades_.begin(), distinct_grades_.end(), g, GradeKeyLess{});
    grade_of_basis_.push_back(static_cast<std::size_t>(it - distinct_grades_.begin()));
  }
  for (std::size_t i = 0; i < distinct_grades_.size(); ++i) {
    if (distinct_grades_[i].is_zero()) zero_grade_ = i;
  }

  constants_.assign(dim * dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (const auto& [m, c] : tab.products[i][j]) {
        const auto k = static_cast<std::size_t>(m.exps[0]);
        constants_[(i * dim + j) * dim + k] = residue(c, orders_[k]);
      }
    }
  }
  std::vector<std::uint32_t> one_digits(dim, 0);
  for (const auto& [m, c] : tab.one) {
    const auto k = static_cast<std::size_t>(m.exps[0]);
    one_digits[k] = residue(c, orders_[k]);
  }
  one_ = ordinal(one_digits);

  if (size_ <= 256) {
    table_.resize(static_cast<std::size_t>(size_) * size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      const auto da = digits(a);
      for (std::uint32_t b = 0; b < size_; ++b) {
        table_[static_cast<std::size_t>(a) * size_ + b] = mul_digits(da, digits(b));
      }
    }
  }
}

std::vector<std::uint32_t> FiniteAlgebra::digits(std::uint32_t ordinal) const {
  std::vector<std::uint32_t> d(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    d[i] = ordinal % orders_[i];
    ordinal /= orders_[i];
  }
  return d;
}

std::uint32_t FiniteAlgebra::ordinal(const std::vector<std::uint32_t>& digits) const {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) r += (digits[i] % orders_[i]) * radix_[i];
  return r;
}

Element FiniteAlgebra::element(std::uint32_t ordinal) const {
  const auto d = digits(ordinal);
  TermMap t;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) t[monomials_[i]] = d[i];
  }
  return Element::from_terms(ring_, std::move(t));
}

std::uint32_t FiniteAlgebra::index_of(const Element& f) const {
  if (f.ring() != ring_) throw MismatchError("element of " + f.ring()->name() + " in table of " + ring_->name());
  std::vector<std::uint32_t> d(orders_.size(), 0);
  for (const auto& [m, c] : f.terms()) {
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m);
    if (it == monomials_.end() || !(*it == m)) {
      throw PreconditionError("element " + f.to_string() + " is not in normal form");
    }
    const auto i = static_cast<std::size_t>(it - monomials_.begin());
    d[i] = residue(c, orders_[i]);
  }
  return ordinal(d);
}

std::uint32_t FiniteAlgebra::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    r += ((a % orders_[i] + b % orders_[i]) % orders_[i]) * radix_[i];
    a /= orders_[i];
    b /= orders_[i];
  }
  return r;
}

std::uint32_t FiniteAlgebra::neg(std::uint32_t a) const {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    r += ((orders_[i] - a % orders_[i]) % orders_[i]) * radix_[i];
    a /= orders_[i];
  }
  return r;
}

std::uint32_t FiniteAlgebra::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FiniteAlgebra::mul_digits(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) const {
  const std::size_t dim = orders_.size();
  std::uint32_t r = 0;
  for (std::size_t k = 0; k < dim; ++k) {
    std::uint64_t acc = 0;
    const std::uint64_t o = orders_[k];
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        const std::uint32_t s = constants_[(i * dim + j) * dim + k];
        if (s == 0 || b[j] == 0) continue;
        acc = (acc + static_cast<std::uint64_t>(a[i]) * b[j] % o * s) % o;
      }
    }
    r += static_cast<std::uint32_t>(acc) * radix_[k];
  }
  return r;
}

std::uint32_t FiniteAlgebra::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * size_ + b];
  return mul_digits(digits(a), digits(b));
}

std::uint32_t FiniteAlgebra::pow(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t result = one_;
  while (k > 0) {
    if (k & 1U) result = mul(result, a);
    k >>= 1;
    if (k > 0) a = mul(a, a);
  }
  return result;
}

FiniteAlgebra::Multiplier FiniteAlgebra::multiplier(std::uint32_t a) const {
  const std::size_t dim = orders_.size();
  Multiplier m;
  m.alg_ = this;
  m.matrix_.assign(dim * dim, 0);
  const auto da = digits(a);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        acc = (acc + static_cast<std::uint64_t>(da[i]) * constants_[(i * dim + j) * dim + k]) %
              orders_[k];
      }
      m.matrix_[j * dim + k] = acc;
    }
  }
  return m;
}

std::uint32_t FiniteAlgebra::Multiplier::operator()(std::uint32_t b) const {
  const auto& orders = alg_->orders_;
  const std::size_t dim = orders.size();
  std::uint64_t acc[64] = {};
  for (std::size_t j = 0; j < dim; ++j) {
    const std::uint64_t bj = b % orders[j];
    b /= orders[j];
    if (bj == 0) continue;
    const std::uint64_t* row = &matrix_[j * dim];
    for (std::size_t k = 0; k < dim; ++k) acc[k] += bj * row[k];
  }
  std::uint32_t r = 0;
  for (std::size_t k = 0; k < dim; ++k) {
    r += static_cast<std::uint32_t>(acc[k] % orders[k]) * alg_->radix_[k];
  }
  return r;
}

std::uint32_t FiniteAlgebra::component(std::uint32_t a, std::size_t grade_index) const {
  auto d = digits(a);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (grade_of_basis_[i] != grade_index) d[i] = 0;
  }
  return ordinal(d);
}

std::vector<std::size_t> FiniteAlgebra::support(std::uint32_t a) const {
  const auto d = digits(a);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) out.push_back(grade_of_basis_[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool FiniteAlgebra::in_degree_zero(std::uint32_t a) const {
  for (auto g : support(a)) {
    if (!zero_grade_ || g != *zero_grade_) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FiniteRingTable

namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw TheoremViolation("oracle self-check failed: " + what);
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

}  // namespace

FiniteRingTable::FiniteRingTable(RingHandle ring, std::uint64_t cap, KernelMode mode)
    : alg_(std::make_shared<FiniteAlgebra>(std::move(ring), cap)), mode_(mode) {
  universe_ = kernels::all_elements(*alg_);
  compute();
}

FiniteRingTable::FiniteRingTable(std::shared_ptr<const FiniteAlgebra> alg, ElementSet universe,
                                 KernelMode mode)
    : alg_(std::move(alg)), universe_(std::move(universe)), mode_(mode) {
  compute();
}

FiniteRingTable FiniteRingTable::degree_zero() const {
  ElementSet u;
  for (auto a : kernels::all_elements(*alg_)) {
    if (alg_->in_degree_zero(a)) u.push_back(a);
  }
  return FiniteRingTable(alg_, std::move(u), mode_);
}

void FiniteRingTable::compute() {
  const auto scans = kernels::run_scans(*alg_, universe_, mode_);
  inverse_.assign(alg_->size(), -1);
  nilpotency_.assign(alg_->size(), 0);
  for (std::size_t p = 0; p < universe_.size(); ++p) {
    const auto a = universe_[p];
    inverse_[a] = scans.inverse[p];
    nilpotency_[a] = scans.nilpotency[p];
    if (scans.inverse[p] >= 0) units_.push_back(a);
    if (scans.idempotent[p]) idempotents_.push_back(a);
    if (scans.zero_divisor[p]) zero_divisors_.push_back(a);
    if (scans.nilpotency[p] > 0) nilradical_.push_back(a);
    if (scans.jacobson[p]) jacobson_.push_back(a);
  }

  // Primitive idempotents: minimal nonzero idempotents under e <= f iff ef = e.
  for (auto e : idempotents_) {
    if (e == 0) continue;
    bool minimal = true;
    for (auto f : idempotents_) {
      if (f != 0 && f != e && alg_->mul(e, f) == f) {
        minimal = false;
        break;
      }
    }
    if (minimal) primitive_idempotents_.push_back(e);
  }
  std::uint32_t sum = 0;
  for (std::size_t i = 0; i < primitive_idempotents_.size(); ++i) {
    sum = alg_->add(sum, primitive_idempotents_[i]);
    for (std::size_t j = i + 1; j < primitive_idempotents_.size(); ++j) {
      ensure(alg_->mul(primitive_idempotents_[i], primitive_idempotents_[j]) == 0,
             "primitive idempotents are orthogonal");
    }
  }
  ensure(sum == alg_->one(), "primitive idempotents sum to 1");

  // R/N is a product of fields, one per primitive idempotent e; the matching
  // prime is {f : fe nilpotent}.
  ElementSet meet = universe_;
  for (auto e : primitive_idempotents_) {
    ElementSet p;
    for (auto f : universe_) {
      if (contains(nilradical_, alg_->mul(f, e))) p.push_back(f);
    }
    ensure(is_prime(p), "computed ideal is prime");
    meet = intersect(meet, p);
    primes_.push_back(std::move(p));
  }
  ensure(meet == nilradical_, "nilradical equals the intersection of the primes");
  ensure(is_ideal(nilradical_), "nilradical is an ideal");
  ensure(is_ideal(jacobson_), "Jacobson radical is an ideal");
  // Every prime of a finite ring is maximal, so the intersection of maximal
  // ideals is `meet`.
  ensure(jacobson_ == meet, "Jacobson radical by definition equals the intersection of maximal ideals");
}

bool FiniteRingTable::contains(const ElementSet& s, std::uint32_t a) const {
  return std::binary_search(s.begin(), s.end(), a);
}

std::optional<std::int64_t> FiniteRingTable::inverse(std::uint32_t a) const {
  if (inverse_[a] < 0) return std::nullopt;
  return inverse_[a];
}

bool FiniteRingTable::is_ideal(const ElementSet& s) const {
  if (!contains(s, 0)) return false;
  for (auto a : s) {
    if (!contains(universe_, a)) return false;
    for (auto b : s) {
      if (b < a) continue;
      if (!contains(s, alg_->add(a, b))) return false;
    }
    if (!contains(s, alg_->neg(a))) return false;
  }
  // Closure under multiplication by additive generators of the universe.
  for (std::size_t i = 0; i < alg_->dimension(); ++i) {
    std::vector<std::uint32_t> d(alg_->dimension(), 0);
    d[i] = 1;
    const auto g = alg_->ordinal(d);
    if (!contains(universe_, g)) continue;
    for (auto a : s) {
      if (!contains(s, alg_->mul(g, a))) return false;
    }
  }
  return true;
}

bool FiniteRingTable::is_prime(const ElementSet& s) const {
  if (s.size() == universe_.size() || !is_ideal(s)) return false;
  ElementSet outside;
  std::set_difference(universe_.begin(), universe_.end(), s.begin(), s.end(),
                      std::back_inserter(outside));
  for (auto a : outside) {
    const auto ma = alg_->multiplier(a);
    for (auto b : outside) {
      if (b < a) continue;
      if (contains(s, ma(b))) return false;
    }
  }
  return true;
}

ElementSet FiniteRingTable::additive_span(const ElementSet& gens) const {
  std::vector<std::uint8_t> in(alg_->size(), 0);
  ElementSet span{0};
  in[0] = 1;
  for (auto g : gens) {
    if (in[g]) continue;
    // New span = union of cosets span + k g.
    ElementSet grown = span;
    std::uint32_t t = g;
    while (!in[t]) {
      for (auto s : span) {
        const auto v = alg_->add(s, t);
        grown.push_back(v);
      }
      t = alg_->add(t, g);
    }
    for (auto v : grown) in[v] = 1;
    span = std::move(grown);
  }
  std::sort(span.begin(), span.end());
  return span;
}

ElementSet FiniteRingTable::ideal_generated(const ElementSet& gens) const {
  ElementSet products;
  for (std::size_t i = 0; i < alg_->dimension(); ++i) {
    std::vector<std::uint32_t> d(alg_->dimension(), 0);
    d[i] = 1;
    const auto basis = alg_->ordinal(d);
    if (!contains(universe_, basis)) continue;
    for (auto g : gens) products.push_back(alg_->mul(basis, g));
  }
  return additive_span(products);
}

ElementSet FiniteRingTable::annihilator(std::uint32_t f) const {
  ElementSet out;
  const auto mf = alg_->multiplier(f);
  for (auto g : universe_) {
    if (mf(g) == 0) out.push_back(g);
  }
  return out;
}

std::optional<GradedWitness> FiniteRingTable::graded_witness(const ElementSet& s) const {
  for (auto a : s) {
    for (auto gi : alg_->support(a)) {
      const auto c = alg_->component(a, gi);
      if (!contains(s, c)) return GradedWitness{a, gi, c};
    }
  }
  return std::nullopt;
}

ElementSet FiniteRingTable::graded_part(const ElementSet& s) const {
  if (!is_ideal(s)) throw PreconditionError("graded part of a subset that is not an ideal");
  ElementSet homogeneous;
  for (auto a : s) {
    if (alg_->is_homogeneous(a)) homogeneous.push_back(a);
  }
  ElementSet result = additive_span(homogeneous);
  // Second description: members all of whose components lie in s.
  ElementSet by_components;
  for (auto a : universe_) {
    bool ok = true;
    for (auto gi : alg_->support(a)) ok = ok && contains(s, alg_->component(a, gi));
    if (ok) by_components.push_back(a);
  }
  ensure(result == by_components, "graded part agrees with the componentwise description");
  ensure(std::includes(s.begin(), s.end(), result.begin(), result.end()), "graded part lies in s");
  ensure(is_ideal(result) && is_graded_subset(result), "graded part is a graded ideal");
  return result;
}

std::uint32_t FiniteRingTable::idempotent_closure(std::uint32_t f) const {
  std::uint32_t p = f;
  for (std::uint64_t k = 1; k <= alg_->size(); ++k) {
    const auto sq = alg_->mul(p, p);
    if (sq == p) return p;
    p = alg_->mul(p, f);
  }
  throw TheoremViolation("powers of a finite ring element did not reach an idempotent");
}

std::string describe_set(const FiniteRingTable& t, const ElementSet& s, std::size_t limit) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < s.size() && i < limit; ++i) {
    out << (i ? ", " : "") << t.element(s[i]).to_string();
  }
  if (s.size() > limit) out << ", ... (" << s.size() << " elements)";
  out << "}";
  return out.str();
}

namespace {

template <typename T>
class RingCache {
 public:
  template <typename Make>
  std::shared_ptr<const T> get(const RingHandle& ring, std::uint64_t cap, Make make) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = entries_.find({ring.get(), cap});
      if (it != entries_.end()) return it->second;
    }
    // Built outside the lock; a concurrent duplicate build is harmless.
    std::shared_ptr<const T> value = make();
    std::lock_guard<std::mutex> lock(mutex_);
    if (entries_.size() >= 64) entries_.clear();
    entries_[{ring.get(), cap}] = value;
    return value;
  }

 private:
  std::mutex mutex_;
  // Values keep their ring alive, so a key address is never reused while cached.
  std::map<std::pair<const Ring*, std::uint64_t>, std::shared_ptr<const T>> entries_;
};

}  // namespace

std::shared_ptr<const FiniteAlgebra> shared_algebra(const RingHandle& ring, std::uint64_t cap) {
  static RingCache<FiniteAlgebra> cache;
  return cache.get(ring, cap, [&] { return std::make_shared<const FiniteAlgebra>(ring, cap); });
}

std::shared_ptr<const FiniteRingTable> shared_table(const RingHandle& ring, std::uint64_t cap) {
  static RingCache<FiniteRingTable> cache;
  return cache.get(ring, cap, [&] { return std::make_shared<const FiniteRingTable>(ring, cap); });
}

}  // namespace gradedring
