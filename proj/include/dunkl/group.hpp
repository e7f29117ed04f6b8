#pragma once

#include <string>
#include <vector>

#include "dunkl/domains.hpp"
#include "dunkl/matrix.hpp"

namespace dunkl {

enum class GroupKind { symmetric, dihedral };

/// One reflection of the group, with enough data to drive both the
/// polynomial action and the Dunkl difference term.
struct Reflection {
  int id = 0;
  int class_index = 0;
  // symmetric(n): the transposition (a b), 1-based, a < b <= n.
  int a = 0, b = 0;
  // dihedral(m): the reflection s_j (z -> -zeta^j zb).
  int j = -1;
};

/// Concrete realization of W = S_n (in zero-sum difference coordinates
/// v_i, the class of x_i - x_n) or W = I_2(m) (coordinates z, zb).
class GroupModel {
 public:
  static GroupModel symmetric(int n);
  static GroupModel dihedral(int m);
  /// Parses "Sn:4" / "I2:5" style descriptors.
  static GroupModel from_descriptor(const std::string& desc);

  GroupKind kind = GroupKind::symmetric;
  int n_or_m = 0;   // n for symmetric, m for dihedral
  int rank = 0;     // l = dim V
  long order = 0;   // |W|
  VarList vars;
  std::vector<Reflection> reflections;
  int class_count = 1;
  std::vector<int> degrees;   // d_1 <= ... <= d_l (top one = Coxeter number)
  int coxeter_number = 0;
  std::vector<MPoly<Rat>> invariant_generators;  // degrees d_1..d_l

  // symmetric(n) only: images pi(x_i) of the ambient coordinates (size n),
  // and the root polynomial of each reflection, all in the v-variables.
  std::vector<MPoly<Rat>> coord_images;
  std::vector<MPoly<Rat>> root_polys;

  bool is_symmetric() const { return kind == GroupKind::symmetric; }
  bool is_dihedral() const { return kind == GroupKind::dihedral; }
  std::string descriptor() const;

  /// Monomials of total degree n, in term order. The workhorse basis.
  std::vector<Exp> monomials_of_degree(int n) const;

  /// Monomials in the invariant generators of total degree k
  /// (a basis of the degree-k invariants).
  std::vector<MPoly<Rat>> invariant_basis(int k) const;
};

// --- Scalars zeta^power inside a coefficient domain ------------------------

template <class C>
struct ZetaScalar;

template <>
struct ZetaScalar<Cyclo> {
  static Cyclo get(int m, long power) { return Cyclo::zeta_power(m, power); }
};
template <>
struct ZetaScalar<ZPoly> {
  static ZPoly get(int m, long power) {
    return ZPoly::constant(Cyclo::zeta_power(m, power));
  }
};
namespace detail {
template <class C>
C rational_zeta(int m, long power) {
  long p = ((power % m) + m) % m;
  if (p == 0) return C(1);
  if (m % 2 == 0 && p == m / 2) return C(-1);
  throw DomainMismatch("zeta^" + std::to_string(p) + " with m=" + std::to_string(m) +
                       " is not rational; use a cyclotomic domain");
}
}  // namespace detail
template <>
struct ZetaScalar<Rat> {
  static Rat get(int m, long power) { return detail::rational_zeta<Rat>(m, power); }
};
template <>
struct ZetaScalar<CPoly> {
  static CPoly get(int m, long power) { return detail::rational_zeta<CPoly>(m, power); }
};
template <>
struct ZetaScalar<RatFunc> {
  static RatFunc get(int m, long power) { return detail::rational_zeta<RatFunc>(m, power); }
};

// --- Group actions ----------------------------------------------------------

/// S_n: action of a permutation (1-based images, w[i-1] = w(i)) on a
/// polynomial in the v-variables: v_k -> v_{w(k)} - v_{w(n)}, v_n = 0.
template <class C>
MPoly<C> act_perm(const GroupModel& g, const std::vector<int>& w,
                  const MPoly<C>& p) {
  if (!g.is_symmetric()) throw DomainMismatch("act_perm: symmetric groups only");
  const int n = g.n_or_m;
  std::vector<MPoly<C>> images;
  images.reserve(static_cast<size_t>(n - 1));
  auto vvar = [&](int k) {  // v_k with v_n = 0
    return k == n ? MPoly<C>(p.vars())
                  : MPoly<C>::variable(p.vars(), static_cast<size_t>(k - 1));
  };
  for (int k = 1; k < n; ++k)
    images.push_back(vvar(w[static_cast<size_t>(k - 1)]) -
                     vvar(w[static_cast<size_t>(n - 1)]));
  return substitute(p, images);
}

/// I_2(m): rotation (refl = false, z -> zeta^j z) or reflection
/// (refl = true, z -> -zeta^j zb), acting monomial by monomial.
template <class C>
MPoly<C> act_dihedral(const GroupModel& g, bool refl, int j, const MPoly<C>& p) {
  if (!g.is_dihedral()) throw DomainMismatch("act_dihedral: dihedral groups only");
  const int m = g.n_or_m;
  MPoly<C> r(p.vars());
  for (const auto& [e, v] : p.terms()) {
    const int a = e[0], b = e[1];
    if (refl) {
      C s = ZetaScalar<C>::get(m, static_cast<long>(j) * (a - b));
      if ((a + b) % 2) s = -s;
      r.add_term(Exp{b, a}, v * s);
    } else {
      r.add_term(e, v * ZetaScalar<C>::get(m, static_cast<long>(j) * (a - b)));
    }
  }
  return r;
}

/// Action of one reflection (either kind).
template <class C>
MPoly<C> act_reflection(const GroupModel& g, const Reflection& s,
                        const MPoly<C>& p) {
  if (g.is_dihedral()) return act_dihedral(g, true, s.j, p);
  const int n = g.n_or_m;
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = i;
  std::swap(w[static_cast<size_t>(s.a - 1)], w[static_cast<size_t>(s.b - 1)]);
  return act_perm(g, w, p);
}

/// Action of a word in reflections (leftmost acts last, i.e. outermost).
template <class C>
MPoly<C> act_word(const GroupModel& g, const std::vector<int>& word,
                  const MPoly<C>& p) {
  MPoly<C> q = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    q = act_reflection(g, g.reflections.at(static_cast<size_t>(*it)), q);
  return q;
}

/// The swap T: P(z, zb) -> P(zb, z). For even m this is the reflection
/// s_{m/2}; for odd m it is an outer symmetry. Always rational.
template <class C>
MPoly<C> swap_z_zb(const MPoly<C>& p) {
  MPoly<C> r(p.vars());
  for (const auto& [e, v] : p.terms()) r.add_term(Exp{e[1], e[0]}, v);
  return r;
}

// --- Permutation helpers ----------------------------------------------------

std::vector<std::vector<int>> all_permutations(int n);
std::vector<int> cycle_type(const std::vector<int>& perm);
/// Transposition (a b) in S_n as a permutation vector.
std::vector<int> transposition(int n, int a, int b);

}  // namespace dunkl
