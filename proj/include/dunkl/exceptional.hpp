#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dunkl/matrix.hpp"
#include "dunkl/rng.hpp"

namespace dunkl {

/// Where a parameter-dependent matrix drops rank: the computational face of
/// the singular locus. Every confirmed value has been re-verified by direct
/// substitution.
struct ExceptionalLocus {
  size_t generic_rank = 0;
  /// Univariate in the parameter; its rational root set contains every
  /// rank-drop value (it is one or more maximal minors, gcd-reduced).
  CPoly defect_polynomial;
  struct Confirmed {
    Rat value;
    size_t rank;  // observed rank < generic_rank
  };
  std::vector<Confirmed> confirmed_values;
  /// Nonlinear leftover of the defect polynomial after removing the factors
  /// of confirmed values; reported, never evaluated.
  CPoly unevaluated_factor;
};

namespace detail {

inline CPoly pivot_minor(const Matrix<CPoly>& m,
                         const std::vector<size_t>& col_order) {
  Matrix<CPoly> shuffled(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      shuffled.at(i, j) = m.at(i, col_order[j]);
  Echelon<CPoly> e = bareiss(std::move(shuffled));
  if (e.pivots.empty()) return CPoly();
  return primitive_part(e.pivots.back());
}

}  // namespace detail

/// Generic rank and exceptional parameter values of a matrix over Q[c]
/// (single parameter; see the two-parameter slicing wrapper below).
///
/// The defect polynomial is the gcd of a few full-rank pivot minors taken
/// under shuffled column orders; deterministic under the given seed. Every
/// rank-drop value annihilates all maximal minors, hence divides the gcd,
/// so the rational root list is complete.
inline ExceptionalLocus rank_over_parameters(const Matrix<CPoly>& m,
                                             int param = 0,
                                             uint64_t seed = ProbeRng::kDefaultSeed,
                                             int extra_minors = 2) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j).deg_in(1 - param) > 0)
        throw DomainMismatch("rank_over_parameters: expected a single parameter");

  ExceptionalLocus loc;
  Echelon<CPoly> e = bareiss(m);
  loc.generic_rank = e.rank;
  if (e.rank == 0) {
    loc.defect_polynomial = CPoly::constant(Rat(1));
    loc.unevaluated_factor = loc.defect_polynomial;
    return loc;
  }
  CPoly defect = primitive_part(e.pivots.back());
  ProbeRng rng(seed);
  std::vector<size_t> order(m.cols());
  for (size_t j = 0; j < m.cols(); ++j) order[j] = j;
  for (int t = 0; t < extra_minors && !defect.is_constant(); ++t) {
    for (size_t j = m.cols(); j > 1; --j)
      std::swap(order[j - 1], order[rng.uint(j)]);
    defect = cpoly_gcd(defect, detail::pivot_minor(m, order));
  }
  loc.defect_polynomial = defect;

  CPoly leftover = defect;
  if (!defect.is_constant()) {
    for (const Rat& root : rational_roots(defect, param)) {
      Matrix<Rat> at = m.map([&](const CPoly& v) {
        return param == 0 ? v.eval(root, Rat(0)) : v.eval(Rat(0), root);
      });
      size_t r = rank(std::move(at));
      if (r < loc.generic_rank) {
        loc.confirmed_values.push_back({root, r});
        // Strip every copy of (c - root) from the leftover factor.
        CPoly lin = CPoly::param(param) - CPoly::constant(root);
        while (true) {
          CPoly g = cpoly_gcd(leftover, lin);
          if (g.is_constant()) break;
          leftover = cpoly_exact_div(leftover, lin);
        }
      }
    }
  }
  loc.unevaluated_factor = primitive_part(leftover);
  std::sort(loc.confirmed_values.begin(), loc.confirmed_values.end(),
            [](const auto& a, const auto& b) { return a.value < b.value; });
  return loc;
}

/// Two-parameter exceptional exploration: the matrix over Q[c1,c2] is
/// sliced along the line c1 = c2 and along affine lines c2 = a*c1 + b with
/// seeded rational a, b; each slice is handled by the univariate routine.
struct SlicedLocus {
  struct Slice {
    Rat a, b;       // c2 = a*c1 + b ; the diagonal uses a = 1, b = 0
    ExceptionalLocus locus;
  };
  std::vector<Slice> slices;
};

inline SlicedLocus rank_over_two_parameters(const Matrix<CPoly>& m,
                                            uint64_t seed = ProbeRng::kDefaultSeed,
                                            int lines = 3) {
  SlicedLocus out;
  ProbeRng rng(seed);
  std::vector<std::pair<Rat, Rat>> dirs{{Rat(1), Rat(0)}};
  for (int i = 0; i < lines; ++i) {
    Rat a = rng.rational(), b = rng.rational();
    if (a.is_zero()) a = Rat(1, 3);
    dirs.emplace_back(a, b);
  }
  for (const auto& [a, b] : dirs) {
    CPoly image = cpoly_c1() * a + CPoly::constant(b);
    Matrix<CPoly> sliced = m.map([&](const CPoly& v) {
      CPoly r;
      for (const auto& [e, coef] : v.terms()) {
        CPoly t = CPoly::monomial(PExp{e[0], 0}, coef);
        t *= image.pow(static_cast<unsigned>(e[1]));
        r += t;
      }
      return r;
    });
    out.slices.push_back({a, b, rank_over_parameters(sliced, 0, seed)});
  }
  return out;
}

}  // namespace dunkl
