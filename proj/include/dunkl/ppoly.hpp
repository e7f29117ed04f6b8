#pragma once

#include <array>
#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/error.hpp"
#include "dunkl/rat.hpp"

namespace dunkl {

/// Exponent pair (a1, a2) for the parameters (c1, c2).
using PExp = std::array<int, 2>;

/// Graded-lexicographic, descending (c1 before c2). Used as the map
/// comparator so iteration always visits the leading term first.
struct PExpGrlexDesc {
  bool operator()(const PExp& a, const PExp& b) const {
    const int da = a[0] + a[1], db = b[0] + b[1];
    if (da != db) return da > db;
    if (a[0] != b[0]) return a[0] > b[0];
    return a[1] > b[1];
  }
};

/// Polynomial in the deformation parameters c1, c2 with coefficients in K
/// (K = Rat for the ground ring Q[c1,c2], K = Cyclo for cyclotomic checks).
/// Zero coefficients are never stored.
template <class K>
class PPoly {
 public:
  using Terms = std::map<PExp, K, PExpGrlexDesc>;

  PPoly() = default;
  PPoly(int v) {  // NOLINT(google-explicit-constructor)
    K kv(v);
    if (!kv.is_zero()) terms_.emplace(PExp{0, 0}, std::move(kv));
  }

  static PPoly zero() { return PPoly(); }
  static PPoly constant(K v) {
    PPoly p;
    if (!v.is_zero()) p.terms_.emplace(PExp{0, 0}, std::move(v));
    return p;
  }
  /// The parameter itself: index 0 -> c1, 1 -> c2.
  static PPoly param(int index, K one = K(1)) {
    PPoly p;
    PExp e{0, 0};
    e.at(static_cast<size_t>(index)) = 1;
    p.terms_.emplace(e, std::move(one));
    return p;
  }
  static PPoly monomial(PExp e, K v) {
    PPoly p;
    if (!v.is_zero()) p.terms_.emplace(e, std::move(v));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == PExp{0, 0});
  }
  K constant_value() const {
    if (terms_.empty()) return K(0);
    auto it = terms_.find(PExp{0, 0});
    return it == terms_.end() ? K(0) : it->second;
  }
  bool uses_param(int index) const {
    for (const auto& [e, v] : terms_)
      if (e.at(static_cast<size_t>(index)) > 0) return true;
    return false;
  }

  /// Total degree; empty for the zero polynomial.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first[0] + terms_.begin()->first[1];
  }
  int deg_in(int index) const {
    int d = -1;
    for (const auto& [e, v] : terms_) d = std::max(d, e.at(static_cast<size_t>(index)));
    return d;
  }

  const PExp& leading_exp() const {
    if (terms_.empty()) throw AlgebraError("PPoly: leading term of zero");
    return terms_.begin()->first;
  }
  const K& leading_coeff() const {
    if (terms_.empty()) throw AlgebraError("PPoly: leading coeff of zero");
    return terms_.begin()->second;
  }
  K coeff(const PExp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const PExp& e, const K& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PPoly operator-() const {
    PPoly r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, -v);
    return r;
  }
  PPoly& operator+=(const PPoly& o) {
    for (const auto& [e, v] : o.terms_) add_term(e, v);
    return *this;
  }
  PPoly& operator-=(const PPoly& o) {
    for (const auto& [e, v] : o.terms_) add_term(e, -v);
    return *this;
  }
  friend PPoly operator+(PPoly a, const PPoly& b) { a += b; return a; }
  friend PPoly operator-(PPoly a, const PPoly& b) { a -= b; return a; }
  friend PPoly operator*(const PPoly& a, const PPoly& b) {
    PPoly r;
    for (const auto& [ea, va] : a.terms_)
      for (const auto& [eb, vb] : b.terms_) {
        K v = va * vb;
        r.add_term(PExp{ea[0] + eb[0], ea[1] + eb[1]}, v);
      }
    return r;
  }
  PPoly& operator*=(const PPoly& o) { *this = *this * o; return *this; }
  friend PPoly operator*(PPoly a, const K& s) {
    PPoly r;
    if (s.is_zero()) return r;
    for (auto& [e, v] : a.terms_) {
      K w = v * s;
      if (!w.is_zero()) r.terms_.emplace(e, std::move(w));
    }
    return r;
  }

  friend bool operator==(const PPoly& a, const PPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PPoly& a, const PPoly& b) { return !(a == b); }

  PPoly pow(unsigned e) const {
    PPoly r = constant(K(1)), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      if (e >>= 1) b *= b;
    }
    return r;
  }

  K eval(const K& x1, const K& x2) const {
    K acc(0);
    for (const auto& [e, v] : terms_) {
      K t = v;
      for (int i = 0; i < e[0]; ++i) t *= x1;
      for (int i = 0; i < e[1]; ++i) t *= x2;
      acc += t;
    }
    return acc;
  }

  /// Substitutes one parameter, leaving the other.
  PPoly eval_param(int index, const K& x) const {
    PPoly r;
    for (const auto& [e, v] : terms_) {
      K t = v;
      for (int i = 0; i < e.at(static_cast<size_t>(index)); ++i) t *= x;
      PExp f = e;
      f.at(static_cast<size_t>(index)) = 0;
      r.add_term(f, t);
    }
    return r;
  }

  PPoly derivative(int index) const {
    PPoly r;
    const size_t i = static_cast<size_t>(index);
    for (const auto& [e, v] : terms_) {
      if (e.at(i) == 0) continue;
      PExp f = e;
      f.at(i) -= 1;
      r.add_term(f, v * K(e.at(i)));
    }
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const -> PPoly<std::decay_t<decltype(f(K(0)))>> {
    PPoly<std::decay_t<decltype(f(K(0)))>> r;
    for (const auto& [e, v] : terms_) r.add_term(e, f(v));
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : terms_) {
      std::string cs = v.str();
      bool neg = !cs.empty() && cs[0] == '-';
      if (first) {
        if (neg) { os << "-"; cs = cs.substr(1); }
      } else {
        os << (neg ? " - " : " + ");
        if (neg) cs = cs.substr(1);
      }
      first = false;
      std::string mono;
      for (int i = 0; i < 2; ++i) {
        if (e.at(static_cast<size_t>(i)) == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += (i == 0 ? "c1" : "c2");
        if (e.at(static_cast<size_t>(i)) > 1)
          mono += "^" + std::to_string(e.at(static_cast<size_t>(i)));
      }
      if (mono.empty()) {
        os << cs;
      } else if (cs == "1") {
        os << mono;
      } else {
        os << cs << "*" << mono;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

using CPoly = PPoly<Rat>;

inline CPoly cpoly_const(Rat v) { return CPoly::constant(std::move(v)); }
inline CPoly cpoly_c1() { return CPoly::param(0); }
inline CPoly cpoly_c2() { return CPoly::param(1); }

// ---------------------------------------------------------------------------
// Q[c1,c2]-specific machinery: content, gcd, exact division, rational roots.
// ---------------------------------------------------------------------------

/// Rational content (>= 0); 0 only for the zero polynomial.
inline Rat content(const CPoly& p) {
  Rat g(0);
  for (const auto& [e, v] : p.terms()) g = rat_gcd(g, v);
  return g;
}

/// p / content(p), sign-fixed so the grlex-leading coefficient is positive.
inline CPoly primitive_part(const CPoly& p) {
  if (p.is_zero()) return p;
  Rat g = content(p);
  if (p.leading_coeff().sign() < 0) g = -g;
  return p * g.inv();
}

/// Dense coefficients of p by powers of parameter `var`; index = power.
/// Each coefficient only involves the other parameter.
inline std::vector<CPoly> to_uni(const CPoly& p, int var) {
  std::vector<CPoly> out(static_cast<size_t>(std::max(0, p.deg_in(var)) + 1));
  const int other = 1 - var;
  for (const auto& [e, v] : p.terms()) {
    PExp f{0, 0};
    f.at(static_cast<size_t>(other)) = e.at(static_cast<size_t>(other));
    out.at(static_cast<size_t>(e.at(static_cast<size_t>(var)))).add_term(f, v);
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

inline CPoly from_uni(const std::vector<CPoly>& coeffs, int var) {
  CPoly r;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    CPoly t = coeffs[k];
    PExp e{0, 0};
    e.at(static_cast<size_t>(var)) = static_cast<int>(k);
    r += t * CPoly::monomial(e, Rat(1));
  }
  return r;
}

CPoly cpoly_gcd(const CPoly& a, const CPoly& b);

namespace detail {

/// Divides out the common rational content so all coefficients are integers
/// with overall gcd 1. Keeps pseudo-remainder sequences from blowing up.
inline void strip_rat_content(std::vector<CPoly>& a) {
  Rat rc(0);
  for (const auto& c : a)
    for (const auto& [e, v] : c.terms()) rc = rat_gcd(rc, v);
  if (rc.is_zero() || rc.is_one()) return;
  Rat inv = rc.inv();
  for (auto& c : a) c = c * inv;
}

/// Pseudo-remainder of dense a by dense b (coefficients in Q[c_other]),
/// with content stripping between steps.
inline std::vector<CPoly> pseudo_rem(std::vector<CPoly> a,
                                     const std::vector<CPoly>& b) {
  const size_t db = b.size() - 1;
  while (a.size() > db && !(a.size() == 1 && a[0].is_zero())) {
    if (a.back().is_zero()) { a.pop_back(); continue; }
    const size_t da = a.size() - 1;
    // a := lc(b)*a - lc(a)*x^(da-db)*b
    CPoly la = a.back(), lb = b.back();
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    while (a.size() > 1 && a.back().is_zero()) a.pop_back();
    strip_rat_content(a);
    if (a.size() == 1 && a[0].is_zero()) break;
  }
  return a;
}

inline CPoly uni_content(const std::vector<CPoly>& a) {
  CPoly g;
  for (const auto& c : a) g = cpoly_gcd(g, c);
  return g;
}

}  // namespace detail

/// Exact division over K[c1,c2] (K a field); throws InexactDivision when d
/// does not divide p.
template <class K>
PPoly<K> ppoly_exact_div(const PPoly<K>& p, const PPoly<K>& d) {
  if (d.is_zero()) throw InexactDivision("PPoly: division by zero");
  PPoly<K> rem = p, q;
  const PExp& de = d.leading_exp();
  const K& dc = d.leading_coeff();
  while (!rem.is_zero()) {
    const PExp& re = rem.leading_exp();
    PExp qe{re[0] - de[0], re[1] - de[1]};
    if (qe[0] < 0 || qe[1] < 0)
      throw InexactDivision("PPoly: inexact division (monomial)");
    PPoly<K> t = PPoly<K>::monomial(qe, rem.leading_coeff() / dc);
    q += t;
    rem -= t * d;
  }
  return q;
}

inline CPoly cpoly_exact_div(const CPoly& p, const CPoly& d) {
  return ppoly_exact_div(p, d);
}

/// gcd over Q[c1,c2] by primitive pseudo-remainder sequences, one parameter
/// at a time. Result is primitive with positive leading coefficient.
inline CPoly cpoly_gcd(const CPoly& a, const CPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.is_constant() || b.is_constant()) return CPoly::constant(Rat(1));
  int var = (a.deg_in(0) > 0 || b.deg_in(0) > 0) ? 0 : 1;
  if (a.deg_in(var) == 0 && b.deg_in(var) == 0) var = 1 - var;
  std::vector<CPoly> ua = to_uni(a, var), ub = to_uni(b, var);
  if (ua.size() == 1 || ub.size() == 1) {
    // One operand does not involve `var`: gcd of it with the content.
    CPoly ca = ua.size() == 1 ? ua[0] : detail::uni_content(ua);
    CPoly cb = ub.size() == 1 ? ub[0] : detail::uni_content(ub);
    return cpoly_gcd(ca, cb);
  }
  CPoly ca = detail::uni_content(ua), cb = detail::uni_content(ub);
  CPoly cg = cpoly_gcd(ca, cb);
  auto divall = [](std::vector<CPoly>& u, const CPoly& c) {
    for (auto& x : u) x = x.is_zero() ? x : cpoly_exact_div(x, c);
    detail::strip_rat_content(u);
  };
  divall(ua, ca);
  divall(ub, cb);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (true) {
    std::vector<CPoly> r = detail::pseudo_rem(ua, ub);
    if (r.size() == 1 && r[0].is_zero()) break;
    CPoly cr = detail::uni_content(r);
    divall(r, cr);
    ua = std::move(ub);
    ub = std::move(r);
    if (ub.size() == 1) return primitive_part(cg);  // gcd is content only
  }
  CPoly g = from_uni(ub, var) * cg;
  return primitive_part(g);
}

namespace detail {

inline std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
  mpz_class n = ::abs(n_in);
  std::vector<std::pair<mpz_class, int>> factors;
  if (n == 0) return {};
  for (mpz_class p = 2; p * p <= n && p < 2000000; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      factors.emplace_back(p, e);
    }
  }
  if (n > 1) factors.emplace_back(n, 1);  // prime or stubborn composite
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    const size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

/// All rational roots of a univariate polynomial in parameter `var`
/// (the other parameter must be absent). Exact: rational-root theorem on
/// the primitive squarefree part, every candidate re-verified.
inline std::vector<Rat> rational_roots(const CPoly& p_in, int var = 0) {
  if (p_in.is_zero()) throw AlgebraError("rational_roots: zero polynomial");
  if (p_in.deg_in(1 - var) > 0)
    throw AlgebraError("rational_roots: polynomial is not univariate");
  std::vector<Rat> roots;
  CPoly p = primitive_part(p_in);
  if (p.is_constant()) return roots;
  // Strip a power of the parameter: root 0.
  int mindeg = p.deg_in(var);
  for (const auto& [e, v] : p.terms())
    mindeg = std::min(mindeg, e.at(static_cast<size_t>(var)));
  if (mindeg > 0) {
    PExp e{0, 0};
    e.at(static_cast<size_t>(var)) = mindeg;
    p = cpoly_exact_div(p, CPoly::monomial(e, Rat(1)));
    roots.push_back(Rat(0));
  }
  // Squarefree part.
  CPoly g = cpoly_gcd(p, p.derivative(var));
  if (!g.is_constant()) p = cpoly_exact_div(p, g);
  p = primitive_part(p);
  if (p.deg_in(var) == 0) return roots;
  // Integer coefficients: primitive part over Q already has integer content
  // 1 but possibly fractional coefficients; scale by the lcm of denominators.
  mpz_class den_lcm = 1;
  for (const auto& [e, v] : p.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.den().get_mpz_t());
  std::vector<mpz_class> coef(static_cast<size_t>(p.deg_in(var)) + 1, mpz_class(0));
  for (const auto& [e, v] : p.terms()) {
    mpq_class scaled = v.raw() * den_lcm;
    coef.at(static_cast<size_t>(e.at(static_cast<size_t>(var)))) = scaled.get_num();
  }
  const mpz_class a0 = coef.front(), an = coef.back();
  auto eval_at = [&](const Rat& x) {
    Rat acc(0), xp(1);
    for (const auto& c : coef) {
      acc += Rat(c) * xp;
      xp *= x;
    }
    return acc;
  };
  for (const auto& dp : detail::divisors_of(a0))
    for (const auto& dq : detail::divisors_of(an)) {
      mpz_class gg;
      mpz_gcd(gg.get_mpz_t(), dp.get_mpz_t(), dq.get_mpz_t());
      if (gg != 1) continue;
      Rat cand(mpq_class(dp, dq));
      if (eval_at(cand).is_zero()) roots.push_back(cand);
      if (eval_at(-cand).is_zero()) roots.push_back(-cand);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

/// c(c-1)...(c-k) in Q[c] (the falling product used throughout the dihedral
/// formulas); lambda_{-1} = 1 by convention.
inline CPoly lambda_poly(int k, const CPoly& c) {
  CPoly r = CPoly::constant(Rat(1));
  for (int i = 0; i <= k; ++i) r *= (c - CPoly::constant(Rat(i)));
  return r;
}

/// Generalized binomial coefficient binom(c, k) as a polynomial in c.
inline CPoly binom_poly(const CPoly& c, int k) {
  CPoly r = CPoly::constant(Rat(1));
  for (int i = 0; i < k; ++i) r *= (c - CPoly::constant(Rat(i)));
  return r * factorial(static_cast<unsigned>(k)).inv();
}

}  // namespace dunkl
