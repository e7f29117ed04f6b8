#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "dunkl/decompose.hpp"
#include "dunkl/group.hpp"

namespace dunkl {

/// The Cherednik parameter: symbolic (c1, and c2 when the group has two
/// reflection classes) or a tuple of exact rationals, one per class.
struct ParamValue {
  bool symbolic = true;
  std::vector<Rat> values;

  static ParamValue sym() { return ParamValue{}; }
  static ParamValue rational(Rat c) { return ParamValue{false, {std::move(c)}}; }
  static ParamValue rational2(Rat c1, Rat c2) {
    return ParamValue{false, {std::move(c1), std::move(c2)}};
  }

  Rat value(size_t cls) const {
    if (symbolic) throw AlgebraError("ParamValue: symbolic parameter has no value");
    return values.at(cls < values.size() ? cls : values.size() - 1);
  }
};

struct DunklContext {
  const GroupModel* group = nullptr;
  ParamValue c;

  DunklContext(const GroupModel& g, ParamValue cv) : group(&g), c(std::move(cv)) {
    if (!c.symbolic && c.values.size() != static_cast<size_t>(g.class_count))
      throw DomainMismatch("DunklContext: one c slot per reflection class");
  }
};

// --- Embedding parameters and rationals into a working domain --------------

template <class D>
struct DomainOps;

template <>
struct DomainOps<Rat> {
  static Rat from_rat(const Rat& v) { return v; }
  static Rat param(int) {
    throw DomainMismatch("symbolic parameter in a rational-only domain");
  }
};
template <>
struct DomainOps<CPoly> {
  static CPoly from_rat(const Rat& v) { return CPoly::constant(v); }
  static CPoly param(int index) { return CPoly::param(index); }
};
template <>
struct DomainOps<RatFunc> {
  static RatFunc from_rat(const Rat& v) { return RatFunc(v); }
  static RatFunc param(int index) { return RatFunc(CPoly::param(index)); }
};
template <>
struct DomainOps<Cyclo> {
  static Cyclo from_rat(const Rat& v) { return Cyclo(v); }
  static Cyclo param(int) {
    throw DomainMismatch("symbolic parameter in a numeric cyclotomic domain");
  }
};
template <>
struct DomainOps<ZPoly> {
  static ZPoly from_rat(const Rat& v) { return ZPoly::constant(Cyclo(v)); }
  static ZPoly param(int index) { return ZPoly::param(index, Cyclo(1)); }
};

/// c(s) for a reflection class, as a value of the working domain.
template <class D>
D c_scalar(const ParamValue& c, int class_index) {
  if (c.symbolic) return DomainOps<D>::param(class_index);
  return DomainOps<D>::from_rat(c.value(static_cast<size_t>(class_index)));
}

// --- Generic reflection-sum Dunkl operators --------------------------------

/// S_n coordinate operator: the ambient type-A Dunkl operator
/// d/dx_i - c * sum_{j != i} (1 - s_ij)/(x_i - x_j), restricted to the
/// translation-invariant model (which it preserves). Summing over i gives 0.
template <class D>
MPoly<D> dunkl_coordinate_sym(const GroupModel& g, const D& c, int i,
                              const MPoly<D>& q) {
  const int n = g.n_or_m;
  MPoly<D> out(q.vars());
  if (i < n) {
    out += q.derivative(static_cast<size_t>(i - 1));
  } else {
    for (size_t k = 0; k + 1 < static_cast<size_t>(n); ++k) out -= q.derivative(k);
  }
  for (const auto& s : g.reflections) {
    if (s.a != i && s.b != i) continue;
    MPoly<D> diff = q - act_reflection(g, s, q);
    if (diff.is_zero()) continue;
    MPoly<D> root = g.root_polys[static_cast<size_t>(s.id)].map_coeffs(
        [](const Rat& v) { return DomainOps<D>::from_rat(v); });
    // The stored root is x_a - x_b; the i-centred kernel is x_i - x_j.
    if (s.b == i) root = -root;
    out -= exact_divide(diff, root).scaled(c);
  }
  return out;
}

/// Dihedral generic operators via the literal reflection sum over a
/// cyclotomic domain. bar = false gives Y (the z-direction), bar = true
/// gives Ybar.
template <class D>
MPoly<D> dunkl_dihedral_generic(const GroupModel& g,
                                const std::vector<D>& c_by_class, bool bar,
                                const MPoly<D>& q) {
  const int m = g.n_or_m;
  MPoly<D> out = q.derivative(bar ? 1 : 0);
  for (const auto& s : g.reflections) {
    MPoly<D> diff = q - act_reflection(g, s, q);
    if (diff.is_zero()) continue;
    // Root alpha_j = z + zeta^j zb; <y, alpha> = 1 for Y and zeta^j for Ybar.
    MPoly<D> root = MPoly<D>::variable(q.vars(), 0) +
                    MPoly<D>::variable(q.vars(), 1)
                        .scaled(ZetaScalar<D>::get(m, s.j));
    MPoly<D> term = exact_divide(diff, root);
    D coef = c_by_class[static_cast<size_t>(s.class_index)];
    if (bar) coef = coef * ZetaScalar<D>::get(m, s.j);
    out -= term.scaled(coef);
  }
  return out;
}

/// Linear functional y given by an ambient coefficient vector: for S_n a
/// combination of the coordinate functionals x_i^* (length n; only the class
/// modulo the all-ones vector matters), for I_2(m) coefficients of (Y, Ybar).
using LinearFunctional = std::vector<Rat>;

template <class D>
MPoly<D> dunkl_apply(const DunklContext& ctx, const LinearFunctional& y,
                     const MPoly<D>& q) {
  const GroupModel& g = *ctx.group;
  MPoly<D> out(q.vars());
  if (g.is_symmetric()) {
    if (y.size() != static_cast<size_t>(g.n_or_m))
      throw DomainMismatch("dunkl_apply: functional length != n");
    D c = c_scalar<D>(ctx.c, 0);
    for (int i = 1; i <= g.n_or_m; ++i) {
      const Rat& yi = y[static_cast<size_t>(i - 1)];
      if (yi.is_zero()) continue;
      out += dunkl_coordinate_sym(g, c, i, q).scaled(DomainOps<D>::from_rat(yi));
    }
    return out;
  }
  if (y.size() != 2) throw DomainMismatch("dunkl_apply: functional length != 2");
  std::vector<D> cs;
  for (int k = 0; k < g.class_count; ++k) cs.push_back(c_scalar<D>(ctx.c, k));
  if (g.class_count == 1) cs.push_back(cs[0]);
  if (!y[0].is_zero())
    out += dunkl_dihedral_generic(g, cs, false, q).scaled(DomainOps<D>::from_rat(y[0]));
  if (!y[1].is_zero())
    out += dunkl_dihedral_generic(g, cs, true, q).scaled(DomainOps<D>::from_rat(y[1]));
  return out;
}

/// Composite Dunkl operator for p in the dual polynomial ring: apply the
/// coordinate operators factor by factor (they commute, so the order is
/// immaterial). For S_n the dual variables are u_1..u_{n-1} (images of the
/// ambient coordinate functionals); for I_2(m) they are (w, wb) acting as
/// (Y, Ybar). Only the exponents of p are inspected.
template <class D>
MPoly<D> nabla(const DunklContext& ctx, const MPoly<D>& p, const MPoly<D>& q) {
  const GroupModel& g = *ctx.group;
  const size_t want = g.is_symmetric() ? static_cast<size_t>(g.n_or_m - 1) : 2u;
  if (p.nvars() != want) throw DomainMismatch("nabla: dual polynomial has wrong arity");
  MPoly<D> acc(q.vars());
  for (const auto& [e, v] : p.terms()) {
    MPoly<D> cur = q;
    for (size_t i = 0; i < e.size() && !cur.is_zero(); ++i) {
      LinearFunctional y(g.is_symmetric() ? static_cast<size_t>(g.n_or_m) : 2u, Rat(0));
      y[i] = Rat(1);
      for (int k = 0; k < e[i] && !cur.is_zero(); ++k) cur = dunkl_apply(ctx, y, cur);
    }
    acc += cur.scaled(v);
  }
  return acc;
}

/// The bilinear c-pairing <p, q>_c: zero unless deg p = deg q, in which case
/// it is the constant term of nabla_p(q). At c = 0 this is classical
/// apolarity.
template <class D>
D pairing(const DunklContext& ctx, const MPoly<D>& p, const MPoly<D>& q) {
  if (p.is_zero() || q.is_zero()) return D(0);
  if (!p.is_homogeneous() || !q.is_homogeneous())
    throw DomainMismatch("pairing: homogeneous arguments expected");
  if (p.degree() != q.degree()) return D(0);
  MPoly<D> r = nabla(ctx, p, q);
  return r.coeff(Exp(r.nvars(), 0));
}

/// |c| = (2/l) * sum of c over all reflections (mc for dihedral c = const,
/// m(c1+c2)/2 two-class, nc for S_n).
template <class D>
D abs_c(const GroupModel& g, const ParamValue& c) {
  D acc(0);
  for (const auto& s : g.reflections) acc += c_scalar<D>(c, s.class_index);
  Rat scale(2, g.rank);
  return acc * DomainOps<D>::from_rat(scale);
}

}  // namespace dunkl
