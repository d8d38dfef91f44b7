#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gradedring {

/// Coefficient ring: Z, Q or Z/n. Values of every kind are carried as
/// mpq_class in canonical form (denominator 1 outside Q, residue in [0, n)
/// for Z/n).
class BaseRing {
 public:
  enum class Kind { Integers, Rationals, IntegersMod };

  static BaseRing integers() { return BaseRing(Kind::Integers, 0); }
  static BaseRing rationals() { return BaseRing(Kind::Rationals, 0); }
  static BaseRing integers_mod(const mpz_class& n);

  Kind kind() const { return kind_; }
  /// Modulus of Z/n; 0 for Z and Q.
  const mpz_class& modulus() const { return modulus_; }
  bool is_modular() const { return kind_ == Kind::IntegersMod; }
  bool is_finite() const { return is_modular(); }
  bool is_field() const;
  bool is_domain() const { return kind_ != Kind::IntegersMod || is_field(); }
  /// True when the nilradical of the base ring is zero.
  bool is_reduced() const;

  /// Canonical representative; throws if a non-integer is given outside Q.
  mpq_class canonical(const mpq_class& v) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return canonical(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return canonical(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return canonical(a * b); }
  mpq_class neg(const mpq_class& a) const { return canonical(-a); }
  std::optional<mpq_class> inverse(const mpq_class& a) const;
  /// Least k with a^k = 0, if any.
  std::optional<unsigned> nilpotency_exponent(const mpq_class& a) const;

  std::string to_string() const;
  bool operator==(const BaseRing& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }

 private:
  BaseRing(Kind kind, const mpz_class& modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  mpz_class modulus_;
};

/// A coefficient together with the ring it lives in.
class Scalar {
 public:
  Scalar(const BaseRing& ring, const mpq_class& value)
      : ring_(ring), value_(ring.canonical(value)) {}
  Scalar(const BaseRing& ring, long value) : Scalar(ring, mpq_class(value)) {}

  const BaseRing& ring() const { return ring_; }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  std::string to_string() const { return value_.get_str(); }

  bool operator==(const Scalar& other) const {
    return ring_ == other.ring_ && value_ == other.value_;
  }

 private:
  BaseRing ring_;
  mpq_class value_;
};

enum class ScalarOp { Add, Sub, Mul, Neg };

/// Exact arithmetic; `b` is ignored for Neg. Throws MismatchError across rings.
Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar& b);
Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);

/// The inverse when `a` is a unit: Z/n needs gcd(a, n) = 1, Z needs a = +-1,
/// Q needs a != 0.
std::optional<Scalar> scalar_is_unit(const Scalar& a);

/// Minimal nilpotency exponent, if `a` is nilpotent.
std::optional<unsigned> scalar_is_nilpotent(const Scalar& a);

/// For a in Z/n returns g = n / gcd(n, a), the generator of Ann(a); a = 0
/// yields 1 since the annihilator is the whole ring.
Scalar scalar_annihilator_generator(const Scalar& a);

/// Prime factorization by trial division, primes increasing.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

}  // namespace gradedring
