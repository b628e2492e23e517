#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regrade/rational.hpp"

namespace regrade {

long euler_phi(long m);

// Coefficients of the m-th cyclotomic polynomial, constant term first.
// Computed by the quotient formula Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d
// and cached; safe to call concurrently.
std::vector<Rational> cyclotomic_polynomial(long m);

// Exact element of Q(zeta_m), stored on the power basis
// 1, zeta, ..., zeta^(phi(m)-1) modulo Phi_m. The representation at a fixed
// conductor is canonical: equal field values have equal coefficient lists.
// Binary operations on mixed conductors embed both sides into Q(zeta_lcm).
// Values are immutable; all operations are pure.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(0) {}
  Cyclotomic(long v);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& v);  // NOLINT(google-explicit-constructor)

  static Cyclotomic zeta(long m, long k = 1);
  // Raw constructor from power-basis data; reduces mod Phi_m.
  static Cyclotomic from_poly(long m, std::vector<Rational> poly);

  long conductor() const { return cond_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  // Image in Q(zeta_M); the current conductor must divide M.
  Cyclotomic embedded(long M) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);

  // Multiplicative inverse via the extended Euclidean algorithm on the
  // coefficient polynomial and Phi_m. Throws DomainError on zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;
  // Galois conjugation zeta -> zeta^(-1); on complex embeddings this is
  // complex conjugation, so x * conj(x) realizes |x|^2 exactly.
  Cyclotomic conj() const;

  // Multiplicative order if this is a root of unity, searched up to 2*m^2
  // (any root of unity in Q(zeta_m) has order dividing lcm(2, m), so the
  // bound is safely above the true maximum).
  std::optional<long> root_of_unity_order() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Canonical power-basis rendering, e.g. "-2", "1/2", "1 - z6", "2*z8^3".
  std::string str() const;
  // Serialization key; entries meant for cross-object comparison must be
  // embedded to a common conductor first.
  std::string key() const;

 private:
  long cond_ = 1;
  std::vector<Rational> c_;  // size phi(cond_)
};

long lcm_long(long a, long b);

}  // namespace regrade
