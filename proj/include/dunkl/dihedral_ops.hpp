#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>

#include "dunkl/dunkl.hpp"
#include "dunkl/matrix.hpp"

namespace dunkl {

/// Closed-form dihedral operators, monomial by monomial, with rational
/// coefficients (no cyclotomics). Single-class forms work for every m; the
/// two-class forms require m even. This is the primary dihedral path; the
/// reflection-sum operators exist for cross-validation.
template <class D>
struct DihedralOps {
  int m = 0;
  bool two_class = false;
  D c1{0}, c2{0};  // equal in the single-class case

  static DihedralOps make(int m, const ParamValue& c, int class_count) {
    if (class_count == 2 && m % 2 != 0)
      throw DomainMismatch("two-class parameters need m even");
    DihedralOps ops;
    ops.m = m;
    ops.two_class = (class_count == 2);
    ops.c1 = c_scalar<D>(c, 0);
    ops.c2 = ops.two_class ? c_scalar<D>(c, 1) : ops.c1;
    return ops;
  }
  static DihedralOps make(const GroupModel& g, const ParamValue& c) {
    return make(g.n_or_m, c, g.class_count);
  }

  /// |c|: mc for c = const, m(c1+c2)/2 for two classes.
  D abs_c() const {
    if (!two_class) return c1 * D(m);
    return (c1 + c2) * DomainOps<D>::from_rat(Rat(m, 2));
  }
};

namespace detail {
inline int pow_sign(long e) { return (e % 2) ? -1 : 1; }
}  // namespace detail

/// Y = nabla_z in closed form.
template <class D>
MPoly<D> dihedral_Y(const DihedralOps<D>& ops, const MPoly<D>& p) {
  const int m = ops.m;
  MPoly<D> out(p.vars());
  for (const auto& [e, v] : p.terms()) {
    const int a = e[0], b = e[1];
    if (a >= 1) out.add_term(Exp{a - 1, b}, v * D(a));
    if (!ops.two_class) {
      const D mc = ops.c1 * D(m);
      if (a >= b) {
        for (int k = 0; m * k <= a - b - 1; ++k) {
          D coef = v * mc * D(detail::pow_sign(static_cast<long>(m) * k));
          out.add_term(Exp{a - m * k - 1, b + m * k}, -coef);
        }
      } else {
        for (int k = 1; m * k <= b - a; ++k) {
          D coef = v * mc * D(detail::pow_sign(static_cast<long>(m) * k));
          out.add_term(Exp{a + m * k - 1, b - m * k}, coef);
        }
      }
    } else {
      const int h = m / 2;  // exponent step m/2
      const D mhalf = DomainOps<D>::from_rat(Rat(m, 2));
      if (a >= b) {
        for (int k = 0; h * k <= a - b - 1; ++k) {
          D cc = (k % 2 ? (ops.c2 - ops.c1) : (ops.c1 + ops.c2));
          D coef = v * mhalf * cc * D(detail::pow_sign(static_cast<long>(h) * k));
          out.add_term(Exp{a - 1 - h * k, b + h * k}, -coef);
        }
      } else {
        for (int k = 1; h * k <= b - a; ++k) {
          D cc = (k % 2 ? (ops.c2 - ops.c1) : (ops.c1 + ops.c2));
          D coef = v * mhalf * cc * D(detail::pow_sign(static_cast<long>(h) * k));
          out.add_term(Exp{a - 1 + h * k, b - h * k}, coef);
        }
      }
    }
  }
  return out;
}

/// Ybar = T Y T (the exchange relation).
template <class D>
MPoly<D> dihedral_Ybar(const DihedralOps<D>& ops, const MPoly<D>& p) {
  return swap_z_zb(dihedral_Y(ops, swap_z_zb(p)));
}

/// F = -nabla_{e_2} in closed form.
template <class D>
MPoly<D> dihedral_F(const DihedralOps<D>& ops, const MPoly<D>& p) {
  const int m = ops.m;
  MPoly<D> out(p.vars());
  for (const auto& [e, v] : p.terms()) {
    int a = e[0], b = e[1];
    const bool flip = (a < b);  // F T = T F
    if (flip) std::swap(a, b);
    MPoly<D> part(p.vars());
    if (b >= 1) {
      D lead = (ops.abs_c() - D(a)) * D(b);
      part.add_term(Exp{a - 1, b - 1}, v * lead);
    }
    if (!ops.two_class) {
      const D mc = ops.c1 * D(m);
      for (int k = 1; m * k <= a - b; ++k) {
        const int drop = a - b - m * k;
        if (drop == 0) continue;
        if (b - 1 + m * k < 0 || a - m * k - 1 < 0) continue;
        D coef = v * mc * D(detail::pow_sign(static_cast<long>(m) * k)) * D(drop);
        part.add_term(Exp{a - m * k - 1, b + m * k - 1}, -coef);
      }
    } else {
      const int h = m / 2;
      const D mhalf = DomainOps<D>::from_rat(Rat(m, 2));
      for (int k = 1; h * k <= a - b; ++k) {
        const int drop = a - b - h * k;
        if (drop == 0) continue;
        if (b - 1 + h * k < 0 || a - h * k - 1 < 0) continue;
        D cc = (k % 2 ? (ops.c2 - ops.c1) : (ops.c1 + ops.c2));
        D coef = v * mhalf * cc * D(detail::pow_sign(static_cast<long>(h) * k)) * D(drop);
        part.add_term(Exp{a - h * k - 1, b + h * k - 1}, -coef);
      }
    }
    out += flip ? swap_z_zb(part) : part;
  }
  return out;
}

/// E: multiplication by z zb.
template <class D>
MPoly<D> dihedral_E(const MPoly<D>& p) {
  MPoly<D> out(p.vars());
  for (const auto& [e, v] : p.terms()) out.add_term(Exp{e[0] + 1, e[1] + 1}, v);
  return out;
}

/// H: Euler degree operator plus (1 - |c|).
template <class D>
MPoly<D> dihedral_H(const DihedralOps<D>& ops, const MPoly<D>& p) {
  MPoly<D> out(p.vars());
  const D shift = D(1) - ops.abs_c();
  for (const auto& [e, v] : p.terms())
    out.add_term(e, v * (D(e[0] + e[1]) + shift));
  return out;
}

/// The sl_2 triple (E, F, H) on C[z, zb].
template <class D>
struct SL2Ops {
  std::function<MPoly<D>(const MPoly<D>&)> E, F, H;
};

template <class D>
SL2Ops<D> sl2_triple(int m, const ParamValue& c, int class_count) {
  DihedralOps<D> ops = DihedralOps<D>::make(m, c, class_count);
  SL2Ops<D> t;
  t.E = [](const MPoly<D>& p) { return dihedral_E(p); };
  t.F = [ops](const MPoly<D>& p) { return dihedral_F(ops, p); };
  t.H = [ops](const MPoly<D>& p) { return dihedral_H(ops, p); };
  return t;
}

/// Composite closed-form operator for a dual polynomial p in (w, wb):
/// each monomial w^a wb^b acts as Y^a Ybar^b. Rational-coefficient
/// counterpart of the reflection-sum nabla.
template <class D>
MPoly<D> nabla_dihedral(const DihedralOps<D>& ops, const MPoly<D>& p,
                        const MPoly<D>& q) {
  if (p.nvars() != 2) throw DomainMismatch("nabla_dihedral: dual arity != 2");
  MPoly<D> acc(q.vars());
  for (const auto& [e, v] : p.terms()) {
    MPoly<D> cur = q;
    for (int k = 0; k < e[0] && !cur.is_zero(); ++k) cur = dihedral_Y(ops, cur);
    for (int k = 0; k < e[1] && !cur.is_zero(); ++k) cur = dihedral_Ybar(ops, cur);
    acc += cur.scaled(v);
  }
  return acc;
}

/// Matrix of F from degree n to degree n-2, columns/rows over the term-order
/// monomial lists. Heavily reused by kernel computations, so memoized per
/// (m, c, degree) behind a mutex.
template <class D>
Matrix<D> dihedral_F_matrix(const GroupModel& g, const ParamValue& c, int n) {
  static std::map<std::string, Matrix<D>> cache;
  static std::mutex mu;
  std::string key = std::to_string(g.n_or_m) + "|" + std::to_string(n) + "|";
  if (c.symbolic) {
    key += "sym" + std::to_string(g.class_count);
  } else {
    for (const auto& v : c.values) key += v.str() + ",";
  }
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  DihedralOps<D> ops = DihedralOps<D>::make(g, c);
  auto cols = g.monomials_of_degree(n);
  auto rows = g.monomials_of_degree(n - 2);
  std::map<Exp, size_t, ExpGrlexDesc> row_index;
  for (size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
  Matrix<D> mat(rows.size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    MPoly<D> img = dihedral_F(ops, MPoly<D>::monomial(g.vars, cols[j], D(1)));
    for (const auto& [e, v] : img.terms()) mat.at(row_index.at(e), j) = v;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(mat)).first->second;
}

}  // namespace dunkl
