#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "dunkl/error.hpp"

namespace dunkl {

/// Exact rational number backed by GMP. Always stored canonical:
/// gcd(|num|, den) = 1 and den > 0.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}                 // NOLINT(google-explicit-constructor)
  Rat(long n) : v_(static_cast<long>(n)) {}  // NOLINT
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw AlgebraError("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(mpz_class n) : v_(std::move(n)) {}
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "n", "-n", or "n/d".
  static Rat from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw AlgebraError("Rat: cannot parse '" + s + "'");
    v.canonicalize();
    return Rat(std::move(v));
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw AlgebraError("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  Rat inv() const {
    if (is_zero()) throw AlgebraError("Rat: inverse of zero");
    return Rat(mpq_class(1 / v_));
  }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  /// "num" or "num/den".
  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.raw();
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat r(1), b = base;
  unsigned k = e;
  while (k) {
    if (k & 1u) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

/// n! as an exact rational (used for divided-power conversions).
inline Rat factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

inline Rat binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

/// gcd on rationals: gcd(num)/lcm(den); gcd(0,0) = 0. Result is >= 0.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class gn, gd;
  mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  mpz_lcm(gd.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  return Rat(mpq_class(gn, gd));
}

}  // namespace dunkl
