#pragma once

#include "dunkl/cyclo.hpp"
#include "dunkl/mpoly.hpp"
#include "dunkl/ppoly.hpp"
#include "dunkl/ratfunc.hpp"

namespace dunkl {

/// Polynomials in c1, c2 with cyclotomic coefficients (for the generic
/// reflection-sum operators over Q(zeta_m)[c]).
using ZPoly = PPoly<Cyclo>;

inline Cyclo coeff_exact_div(const Cyclo& a, const Cyclo& b) { return a / b; }

// Field inverses, used by Gaussian elimination.
inline Rat dom_inv(const Rat& a) { return a.inv(); }
inline RatFunc dom_inv(const RatFunc& a) { return a.inv(); }
inline Cyclo dom_inv(const Cyclo& a) { return a.inv(); }

// Lifts between the coefficient domains of the ladder Q < Q[c] < Q(c),
// plus the cyclotomic extensions. Promotion is always explicit.
inline CPoly to_cpoly(const Rat& v) { return CPoly::constant(v); }
inline RatFunc to_ratfunc(const Rat& v) { return RatFunc(v); }
inline RatFunc to_ratfunc(const CPoly& v) { return RatFunc(v); }
inline Cyclo to_cyclo(const Rat& v) { return Cyclo(v); }
inline ZPoly to_zpoly(const CPoly& v) {
  return v.map_coeffs([](const Rat& r) { return Cyclo(r); });
}
inline ZPoly to_zpoly(const Rat& v) { return ZPoly::constant(Cyclo(v)); }

inline MPoly<CPoly> lift_to_cpoly(const MPoly<Rat>& p) {
  return p.map_coeffs([](const Rat& v) { return to_cpoly(v); });
}
inline MPoly<RatFunc> lift_to_ratfunc(const MPoly<CPoly>& p) {
  return p.map_coeffs([](const CPoly& v) { return to_ratfunc(v); });
}
inline MPoly<Cyclo> lift_to_cyclo(const MPoly<Rat>& p) {
  return p.map_coeffs([](const Rat& v) { return to_cyclo(v); });
}
inline MPoly<ZPoly> lift_to_zpoly(const MPoly<CPoly>& p) {
  return p.map_coeffs([](const CPoly& v) { return to_zpoly(v); });
}

/// Clears denominators of a Q(c)-vector polynomial into Q[c1,c2] and
/// normalizes content. Used to turn symbolic kernel elements into honest
/// polynomial data.
inline MPoly<CPoly> clear_denominators(const MPoly<RatFunc>& p) {
  CPoly lcm = CPoly::constant(Rat(1));
  for (const auto& [e, v] : p.terms()) {
    CPoly g = cpoly_gcd(lcm, v.den());
    lcm = lcm * cpoly_exact_div(v.den(), g);
  }
  MPoly<CPoly> r(p.vars());
  for (const auto& [e, v] : p.terms())
    r.add_term(e, v.num() * cpoly_exact_div(lcm, v.den()));
  return content_normalized(r);
}

}  // namespace dunkl
