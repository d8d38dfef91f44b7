#include "gradedring/scalars.hpp"

#include "gradedring/errors.hpp"

namespace gradedring {

BaseRing BaseRing::integers_mod(const mpz_class& n) {
  if (n < 2) throw PreconditionError("modulus must be >= 2, got " + n.get_str());
  return BaseRing(Kind::IntegersMod, n);
}

bool BaseRing::is_field() const {
  switch (kind_) {
    case Kind::Rationals:
      return true;
    case Kind::Integers:
      return false;
    case Kind::IntegersMod:
      return mpz_probab_prime_p(modulus_.get_mpz_t(), 40) != 0;
  }
  return false;
}

bool BaseRing::is_reduced() const {
  if (kind_ != Kind::IntegersMod) return true;
  // Z/n is reduced iff n is squarefree.
  mpz_class n = modulus_;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

mpq_class BaseRing::canonical(const mpq_class& v) const {
  mpq_class out(v);
  out.canonicalize();
  if (kind_ == Kind::Rationals) return out;
  if (out.get_den() != 1) {
    throw PreconditionError("non-integer value " + out.get_str() + " in " + to_string());
  }
  if (kind_ == Kind::IntegersMod) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), out.get_num_mpz_t(), modulus_.get_mpz_t());
    return mpq_class(r);
  }
  return out;
}

std::optional<mpq_class> BaseRing::inverse(const mpq_class& a) const {
  switch (kind_) {
    case Kind::Rationals:
      if (a == 0) return std::nullopt;
      return mpq_class(1) / a;
    case Kind::Integers:
      if (a == 1 || a == -1) return a;
      return std::nullopt;
    case Kind::IntegersMod: {
      mpz_class inv;
      mpz_class v = canonical(a).get_num();
      if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t()) == 0) {
        return std::nullopt;
      }
      return canonical(mpq_class(inv));
    }
  }
  return std::nullopt;
}

std::optional<unsigned> BaseRing::nilpotency_exponent(const mpq_class& a) const {
  mpq_class v = canonical(a);
  if (v == 0) return 1u;
  if (kind_ != Kind::IntegersMod) return std::nullopt;
  // If a is nilpotent mod n then a^k = 0 already for k = bitlength(n).
  const auto cutoff = static_cast<unsigned>(mpz_sizeinbase(modulus_.get_mpz_t(), 2));
  mpq_class power = v;
  for (unsigned k = 1; k <= cutoff; ++k) {
    if (power == 0) return k;
    power = mul(power, v);
  }
  return std::nullopt;
}

std::string BaseRing::to_string() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::IntegersMod:
      return "Zmod " + modulus_.get_str();
  }
  return "?";
}

namespace {

void require_same_ring(const Scalar& a, const Scalar& b) {
  if (!(a.ring() == b.ring())) {
    throw MismatchError("base ring mismatch: " + a.ring().to_string() + " vs " +
                        b.ring().to_string());
  }
}

}  // namespace

Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar& b) {
  const BaseRing& r = a.ring();
  switch (op) {
    case ScalarOp::Add:
      require_same_ring(a, b);
      return Scalar(r, r.add(a.value(), b.value()));
    case ScalarOp::Sub:
      require_same_ring(a, b);
      return Scalar(r, r.sub(a.value(), b.value()));
    case ScalarOp::Mul:
      require_same_ring(a, b);
      return Scalar(r, r.mul(a.value(), b.value()));
    case ScalarOp::Neg:
      return Scalar(r, r.neg(a.value()));
  }
  throw PreconditionError("unknown scalar operation");
}

Scalar operator+(const Scalar& a, const Scalar& b) { return scalar_arith(ScalarOp::Add, a, b); }
Scalar operator-(const Scalar& a, const Scalar& b) { return scalar_arith(ScalarOp::Sub, a, b); }
Scalar operator*(const Scalar& a, const Scalar& b) { return scalar_arith(ScalarOp::Mul, a, b); }
Scalar operator-(const Scalar& a) { return scalar_arith(ScalarOp::Neg, a, a); }

std::optional<Scalar> scalar_is_unit(const Scalar& a) {
  auto inv = a.ring().inverse(a.value());
  if (!inv) return std::nullopt;
  return Scalar(a.ring(), *inv);
}

std::optional<unsigned> scalar_is_nilpotent(const Scalar& a) {
  return a.ring().nilpotency_exponent(a.value());
}

Scalar scalar_annihilator_generator(const Scalar& a) {
  if (!a.ring().is_modular()) {
    throw PreconditionError("annihilator generator needs a Zmod base ring, got " +
                            a.ring().to_string());
  }
  const mpz_class& n = a.ring().modulus();
  mpz_class g;
  mpz_class v = a.value().get_num();
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), v.get_mpz_t());
  // a = 0 gives gcd = n and generator 1; a unit gives n, i.e. 0.
  return Scalar(a.ring(), mpq_class(mpz_class(n / g)));
}

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n) {
  if (n < 1) throw PreconditionError("factorize needs a positive integer");
  std::vector<std::pair<mpz_class, unsigned>> out;
  mpz_class m = n;
  for (mpz_class p = 2; p * p <= m; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

}  // namespace gradedring
