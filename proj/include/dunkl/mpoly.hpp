#pragma once

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/error.hpp"
#include "dunkl/ppoly.hpp"
#include "dunkl/rat.hpp"

namespace dunkl {

/// Ordered variable list, shared between polynomials of the same ring.
using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline bool same_vars(const VarList& a, const VarList& b) {
  return a == b || (a && b && *a == *b);
}

/// Exponent vector; length equals the number of variables.
using Exp = std::vector<int>;

inline int exp_total(const Exp& e) {
  int t = 0;
  for (int x : e) t += x;
  return t;
}

/// Graded-lexicographic descending order on exponent vectors, variables in
/// declaration order. Map iteration visits the leading term first.
struct ExpGrlexDesc {
  bool operator()(const Exp& a, const Exp& b) const {
    const int da = exp_total(a), db = exp_total(b);
    if (da != db) return da > db;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

/// Sparse multivariate polynomial over an exact coefficient domain C.
/// Invariants: no stored zero coefficients; every exponent vector has
/// length |vars|. The zero polynomial has an empty term map and no degree.
template <class C>
class MPoly {
 public:
  using Coeff = C;
  using Terms = std::map<Exp, C, ExpGrlexDesc>;

  MPoly() : vars_(make_vars({})) {}
  explicit MPoly(VarList vars) : vars_(std::move(vars)) {}

  static MPoly constant(VarList vars, C v) {
    MPoly p(std::move(vars));
    if (!v.is_zero()) p.terms_.emplace(Exp(p.nvars(), 0), std::move(v));
    return p;
  }
  static MPoly variable(const VarList& vars, size_t index, int power = 1) {
    MPoly p(vars);
    Exp e(p.nvars(), 0);
    e.at(index) = power;
    p.terms_.emplace(std::move(e), C(1));
    return p;
  }
  static MPoly monomial(VarList vars, Exp e, C v) {
    MPoly p(std::move(vars));
    if (e.size() != p.nvars()) throw DomainMismatch("MPoly: bad exponent length");
    if (!v.is_zero()) p.terms_.emplace(std::move(e), std::move(v));
    return p;
  }

  const VarList& vars() const { return vars_; }
  size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; nullopt for the zero polynomial ("minus infinity").
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return exp_total(terms_.begin()->first);
  }
  int degree_or(int dflt) const { return degree().value_or(dflt); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = exp_total(terms_.begin()->first);
    for (const auto& [e, v] : terms_)
      if (exp_total(e) != d) return false;
    return true;
  }

  C coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }
  const Exp& leading_exp() const {
    if (terms_.empty()) throw AlgebraError("MPoly: leading term of zero");
    return terms_.begin()->first;
  }
  const C& leading_coeff() const {
    if (terms_.empty()) throw AlgebraError("MPoly: leading coeff of zero");
    return terms_.begin()->second;
  }

  void add_term(const Exp& e, const C& v) {
    if (v.is_zero()) return;
    if (e.size() != nvars()) throw DomainMismatch("MPoly: bad exponent length");
    auto [it, fresh] = terms_.emplace(e, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly operator-() const {
    MPoly r(vars_);
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, -v);
    return r;
  }
  MPoly& operator+=(const MPoly& o) {
    check_vars(o);
    for (const auto& [e, v] : o.terms_) add_term(e, v);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_vars(o);
    for (const auto& [e, v] : o.terms_) add_term(e, -v);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
  friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_vars(b);
    MPoly r(a.vars_);
    for (const auto& [ea, va] : a.terms_)
      for (const auto& [eb, vb] : b.terms_) {
        Exp e(ea.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, va * vb);
      }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

  /// Scalar multiple.
  MPoly scaled(const C& s) const {
    MPoly r(vars_);
    if (s.is_zero()) return r;
    for (const auto& [e, v] : terms_) {
      C w = v * s;
      if (!w.is_zero()) r.terms_.emplace(e, std::move(w));
    }
    return r;
  }

  MPoly pow(unsigned k) const {
    MPoly r = constant(vars_, C(1)), b = *this;
    while (k) {
      if (k & 1u) r *= b;
      if (k >>= 1) b *= b;
    }
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Formal partial derivative with respect to variable `index`.
  MPoly derivative(size_t index) const {
    MPoly r(vars_);
    for (const auto& [e, v] : terms_) {
      if (e.at(index) == 0) continue;
      Exp f = e;
      f[index] -= 1;
      r.add_term(f, v * C(e.at(index)));
    }
    return r;
  }

  /// Applies f to every coefficient; drops zeros. f may change the domain.
  template <class F>
  auto map_coeffs(F&& f) const -> MPoly<std::decay_t<decltype(f(C(0)))>> {
    MPoly<std::decay_t<decltype(f(C(0)))>> r(vars_);
    for (const auto& [e, v] : terms_) r.add_term(e, f(v));
    return r;
  }

  void check_vars(const MPoly& o) const {
    if (!same_vars(vars_, o.vars_))
      throw DomainMismatch("MPoly: variable sets differ");
  }

 private:
  VarList vars_;
  Terms terms_;
};

/// Exact division p / d; throws InexactDivision when d does not divide p.
/// A failed division signals corrupted reflection data upstream.
template <class C>
MPoly<C> exact_divide(const MPoly<C>& p, const MPoly<C>& d) {
  p.check_vars(d);
  if (d.is_zero()) throw InexactDivision("exact_divide: division by zero");
  MPoly<C> rem = p, q(p.vars());
  const Exp& de = d.leading_exp();
  const C& dc = d.leading_coeff();
  while (!rem.is_zero()) {
    const Exp& re = rem.leading_exp();
    Exp qe(re.size());
    for (size_t i = 0; i < qe.size(); ++i) {
      qe[i] = re[i] - de[i];
      if (qe[i] < 0) throw InexactDivision("exact_divide: not divisible");
    }
    C qc = coeff_exact_div(rem.leading_coeff(), dc);
    MPoly<C> t = MPoly<C>::monomial(p.vars(), qe, qc);
    q += t;
    rem -= t * d;
  }
  return q;
}

// Coefficient-level exact division, per domain.
inline Rat coeff_exact_div(const Rat& a, const Rat& b) { return a / b; }
inline CPoly coeff_exact_div(const CPoly& a, const CPoly& b) {
  return cpoly_exact_div(a, b);
}
template <class K>
PPoly<K> coeff_exact_div(const PPoly<K>& a, const PPoly<K>& b) {
  return ppoly_exact_div(a, b);
}

/// Substitution: image for every variable, all images in a common target
/// ring; coefficients carried over by `lift` (defaults to identity).
template <class C, class D, class F>
MPoly<D> substitute(const MPoly<C>& p, const std::vector<MPoly<D>>& images,
                    F&& lift) {
  if (images.size() != p.nvars())
    throw DomainMismatch("substitute: need one image per variable");
  VarList tv = images.empty() ? make_vars({}) : images.front().vars();
  for (const auto& im : images)
    if (!same_vars(tv, im.vars()))
      throw DomainMismatch("substitute: images live in different rings");
  MPoly<D> acc(tv);
  // Memoize powers of each image.
  std::vector<std::vector<MPoly<D>>> pows(images.size());
  auto power = [&](size_t i, int k) -> const MPoly<D>& {
    auto& tab = pows[i];
    if (tab.empty()) tab.push_back(MPoly<D>::constant(tv, D(1)));
    while (static_cast<int>(tab.size()) <= k) tab.push_back(tab.back() * images[i]);
    return tab[static_cast<size_t>(k)];
  };
  for (const auto& [e, v] : p.terms()) {
    MPoly<D> t = MPoly<D>::constant(tv, lift(v));
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t *= power(i, e[i]);
    acc += t;
  }
  return acc;
}

template <class C>
MPoly<C> substitute(const MPoly<C>& p, const std::vector<MPoly<C>>& images) {
  return substitute(p, images, [](const C& v) { return v; });
}

/// Substitution by name; unbound variables map to themselves.
template <class C>
MPoly<C> substitute_named(const MPoly<C>& p,
                          const std::map<std::string, MPoly<C>>& bindings) {
  std::vector<MPoly<C>> images;
  images.reserve(p.nvars());
  for (size_t i = 0; i < p.nvars(); ++i) {
    auto it = bindings.find((*p.vars())[i]);
    if (it != bindings.end()) {
      images.push_back(it->second);
    } else {
      images.push_back(MPoly<C>::variable(p.vars(), i));
    }
  }
  return substitute(p, images);
}

// --- Parameter evaluation (the evaluation homomorphism ev_c) --------------

inline MPoly<Rat> eval_params(const MPoly<CPoly>& p, const Rat& c1,
                              const Rat& c2 = Rat(0)) {
  return p.map_coeffs([&](const CPoly& v) { return v.eval(c1, c2); });
}

inline MPoly<CPoly> lift_params(const MPoly<Rat>& p) {
  return p.map_coeffs([](const Rat& v) { return CPoly::constant(v); });
}

// --- Content normalization over Q[c1,c2] -----------------------------------

/// Gcd of all coefficients (for MPoly<CPoly>), including rational content.
inline CPoly mpoly_content(const MPoly<CPoly>& p) {
  CPoly g;
  for (const auto& [e, v] : p.terms()) g = cpoly_gcd(g, v);
  if (g.is_zero()) return g;
  // cpoly_gcd returns a primitive polynomial; fold in the rational content.
  Rat rc(0);
  for (const auto& [e, v] : p.terms()) rc = rat_gcd(rc, content(v));
  return g * rc;
}

/// Divides out the content; fixes the sign so the leading coefficient of the
/// term-order-leading monomial has a positive leading rational coefficient.
inline MPoly<CPoly> content_normalized(const MPoly<CPoly>& p) {
  if (p.is_zero()) return p;
  CPoly g = mpoly_content(p);
  MPoly<CPoly> r = p.map_coeffs([&](const CPoly& v) { return cpoly_exact_div(v, g); });
  if (r.leading_coeff().leading_coeff().sign() < 0) r = -r;
  return r;
}

/// Same for rational coefficients: primitive with positive leading term.
inline MPoly<Rat> content_normalized(const MPoly<Rat>& p) {
  if (p.is_zero()) return p;
  Rat g(0);
  for (const auto& [e, v] : p.terms()) g = rat_gcd(g, v);
  if (p.leading_coeff().sign() < 0) g = -g;
  return p.scaled(g.inv());
}

/// Projective equality: p and q are nonzero scalar multiples of each other.
/// Cross-multiplies by the leading coefficients, so no field division needed.
template <class C>
bool proportional(const MPoly<C>& p, const MPoly<C>& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p.scaled(q.leading_coeff()) == q.scaled(p.leading_coeff());
}

}  // namespace dunkl
