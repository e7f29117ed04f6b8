#pragma once

#include <string>

#include "dunkl/error.hpp"
#include "dunkl/ppoly.hpp"

namespace dunkl {

/// Rational function in the parameters: num/den over Q[c1,c2].
/// Invariants: den != 0; gcd(num, den) = 1; den is normalized so its
/// grlex-leading coefficient equals 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(CPoly::constant(Rat(1))) {}
  RatFunc(int v)  // NOLINT(google-explicit-constructor)
      : num_(CPoly::constant(Rat(v))), den_(CPoly::constant(Rat(1))) {}
  explicit RatFunc(Rat v)
      : num_(CPoly::constant(std::move(v))), den_(CPoly::constant(Rat(1))) {}
  explicit RatFunc(CPoly num) : num_(std::move(num)), den_(CPoly::constant(Rat(1))) {}
  RatFunc(CPoly num, CPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const CPoly& num() const { return num_; }
  const CPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const { return RatFunc(unchecked(), -num_, den_); }
  RatFunc& operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
  RatFunc& operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  RatFunc& operator/=(const RatFunc& o) {
    if (o.is_zero()) throw AlgebraError("RatFunc: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { a += b; return a; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { a -= b; return a; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { a *= b; return a; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { a /= b; return a; }
  RatFunc inv() const {
    if (is_zero()) throw AlgebraError("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Evaluation at parameter values; throws SingularEvaluation when the
  /// denominator vanishes there (never silently dropped).
  Rat eval(const Rat& c1, const Rat& c2 = Rat(0)) const {
    Rat d = den_.eval(c1, c2);
    if (d.is_zero())
      throw SingularEvaluation("RatFunc: denominator vanishes at c = (" +
                               c1.str() + ", " + c2.str() + ")");
    return num_.eval(c1, c2) / d;
  }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  struct unchecked {};
  RatFunc(unchecked, CPoly num, CPoly den)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero()) throw AlgebraError("RatFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = CPoly::constant(Rat(1));
      return;
    }
    CPoly g = cpoly_gcd(num_, den_);
    // Fold in rational contents so the reduction is complete.
    Rat rc = rat_gcd(content(num_), content(den_));
    if (!rc.is_one()) g = g * rc;
    if (!g.is_constant() || !g.constant_value().is_one()) {
      num_ = cpoly_exact_div(num_, g);
      den_ = cpoly_exact_div(den_, g);
    }
    const Rat lead = den_.leading_coeff();
    if (!lead.is_one()) {
      Rat s = lead.inv();
      num_ = num_ * s;
      den_ = den_ * s;
    }
  }

  CPoly num_, den_;
};

inline RatFunc coeff_exact_div(const RatFunc& a, const RatFunc& b) {
  return a / b;
}

inline RatFunc rf_c1() { return RatFunc(cpoly_c1()); }
inline RatFunc rf_c2() { return RatFunc(cpoly_c2()); }

}  // namespace dunkl
