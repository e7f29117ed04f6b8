#pragma once

#include <string>
#include <vector>

#include "dunkl/error.hpp"
#include "dunkl/rat.hpp"

namespace dunkl {

/// Dense univariate polynomial over Q, index = power. Trailing zeros trimmed.
using UniPoly = std::vector<Rat>;

UniPoly uni_trim(UniPoly p);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(UniPoly a, const UniPoly& b);
/// Exact division; throws InexactDivision on a nonzero remainder.
UniPoly uni_exact_div(const UniPoly& a, const UniPoly& b);
/// Quotient and remainder of polynomial division.
std::pair<UniPoly, UniPoly> uni_divmod(UniPoly a, const UniPoly& b);

/// The m-th cyclotomic polynomial, computed by iterated exact division of
/// t^m - 1 by the lower cyclotomic polynomials. Memoized, thread-safe.
UniPoly cyclotomic_polynomial(int m);

/// Euler totient.
int totient(int m);

/// Element of the cyclotomic field Q(zeta_m), stored as a residue modulo
/// the m-th cyclotomic polynomial. m = 1 models plain rationals; arithmetic
/// between m = 1 and any other order lifts the rational side.
class Cyclo {
 public:
  Cyclo() : m_(1), c_{Rat(0)} {}
  Cyclo(int v) : m_(1), c_{Rat(v)} {}  // NOLINT(google-explicit-constructor)
  explicit Cyclo(Rat v) : m_(1), c_{std::move(v)} {}
  Cyclo(int m, std::vector<Rat> coeffs);

  /// zeta_m ^ power.
  static Cyclo zeta_power(int m, long power);

  int order() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws when the element is not rational.
  Rat rational_value() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { a += b; return a; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { a -= b; return a; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { a *= b; return a; }
  Cyclo inv() const;
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { a *= b.inv(); return a; }

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  std::string str() const;

 private:
  /// Lifts a rational (m = 1) element into order m.
  Cyclo lifted_to(int m) const;

  int m_;
  std::vector<Rat> c_;  // size = totient(m_), residue mod Phi_m
};

}  // namespace dunkl
