#pragma once

// Brute-force models used as independent references in tests. They share no
// code with the library's finite-ring oracle.

#include <cstdint>
#include <string>
#include <vector>

#include "gradedring/algebra.hpp"
#include "gradedring/dsl.hpp"

namespace naive {

/// Z_n[x]/(x^k) with x of degree 1; an element is its coefficient vector.
struct Trunc {
  int n;
  int k;

  using Poly = std::vector<int>;

  std::size_t size() const {
    std::size_t s = 1;
    for (int i = 0; i < k; ++i) s *= static_cast<std::size_t>(n);
    return s;
  }
  Poly element(std::size_t index) const {
    Poly p(k);
    for (int i = 0; i < k; ++i) {
      p[i] = static_cast<int>(index % n);
      index /= n;
    }
    return p;
  }
  Poly mul(const Poly& a, const Poly& b) const {
    Poly r(k, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; i + j < k; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % n;
    }
    return r;
  }
  Poly add(const Poly& a, const Poly& b) const {
    Poly r(k);
    for (int i = 0; i < k; ++i) r[i] = (a[i] + b[i]) % n;
    return r;
  }
  Poly one() const {
    Poly p(k, 0);
    p[0] = 1 % n;
    return p;
  }
  static bool is_zero(const Poly& p) {
    for (int c : p) {
      if (c) return false;
    }
    return true;
  }
  bool is_unit(const Poly& a) const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (mul(a, element(i)) == one()) return true;
    }
    return false;
  }
  bool is_nilpotent(const Poly& a) const {
    Poly p = a;
    for (int i = 0; i < 64; ++i) {
      if (is_zero(p)) return true;
      p = mul(p, a);
    }
    return false;
  }
  bool is_zero_divisor(const Poly& a) const {
    for (std::size_t i = 1; i < size(); ++i) {
      if (is_zero(mul(a, element(i)))) return true;
    }
    return false;
  }
  bool is_idempotent(const Poly& a) const { return mul(a, a) == a; }

  std::string ring_text() const {
    return "ring R {\n  base Zmod " + std::to_string(n) + "\n  grading Z\n  gen x deg 1\n  rel x^" +
           std::to_string(k) + "\n}\n";
  }
  std::string expr(const Poly& p) const {
    std::string s = "0";
    for (int i = 0; i < k; ++i) {
      if (p[i]) s += " + " + std::to_string(p[i]) + "*x^" + std::to_string(i);
    }
    return s;
  }
};

inline gradedring::Element parse(const gradedring::RingHandle& ring, const std::string& text) {
  const bool q = ring->base() == gradedring::BaseRing::rationals();
  return gradedring::dsl::evaluate(gradedring::dsl::parse_expression(text, q), ring);
}

}  // namespace naive
