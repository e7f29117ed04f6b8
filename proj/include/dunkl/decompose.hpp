#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/chartable.hpp"
#include "dunkl/group.hpp"
#include "dunkl/matrix.hpp"

namespace dunkl {

// Integer extraction from exact scalars (multiplicities must be integers).
inline long to_integer(const Rat& v) {
  if (!v.is_integer()) throw AlgebraError("expected an integer, got " + v.str());
  return static_cast<long>(v.num().get_si());
}
inline long to_integer(const RatFunc& v) {
  if (!v.is_polynomial() || !v.num().is_constant())
    throw AlgebraError("expected an integer, got " + v.str());
  return to_integer(v.num().constant_value());
}

/// Linear-algebra view of the span of a list of polynomials: membership,
/// coordinates, rank. Coordinates refer to the given basis order (dependent
/// inputs get free coordinates fixed to zero).
template <class D>
class SpanSolver {
 public:
  explicit SpanSolver(std::vector<MPoly<D>> basis) : basis_(std::move(basis)) {
    for (const auto& p : basis_)
      for (const auto& [e, v] : p.terms())
        if (index_.emplace(e, index_.size()).second) mono_.push_back(e);
    const size_t rows = mono_.size(), nb = basis_.size();
    red_ = Matrix<D>(rows, nb + rows);
    for (size_t j = 0; j < nb; ++j)
      for (const auto& [e, v] : basis_[j].terms()) red_.at(index_.at(e), j) = v;
    for (size_t i = 0; i < rows; ++i) red_.at(i, nb + i) = D(1);
    // Eliminate on the first nb columns only.
    size_t row = 0;
    for (size_t col = 0; col < nb && row < rows; ++col) {
      size_t sel = row;
      while (sel < rows && red_.at(sel, col).is_zero()) ++sel;
      if (sel == rows) continue;
      red_.swap_rows(sel, row);
      D inv = dom_inv(red_.at(row, col));
      for (size_t j = 0; j < red_.cols(); ++j) red_.at(row, j) = red_.at(row, j) * inv;
      for (size_t i = 0; i < rows; ++i) {
        if (i == row || red_.at(i, col).is_zero()) continue;
        D f = red_.at(i, col);
        for (size_t j = 0; j < red_.cols(); ++j)
          red_.at(i, j) = red_.at(i, j) - f * red_.at(row, j);
      }
      pivots_.emplace_back(row, col);
      ++row;
    }
  }

  size_t dim() const { return pivots_.size(); }
  size_t basis_count() const { return basis_.size(); }

  bool contains(const MPoly<D>& p) const { return coords(p).has_value(); }

  /// Coordinates of p in the original basis, or nullopt if p is outside.
  std::optional<std::vector<D>> coords(const MPoly<D>& p) const {
    const size_t nb = basis_.size(), rows = mono_.size();
    std::vector<D> b(rows, D(0));
    for (const auto& [e, v] : p.terms()) {
      auto it = index_.find(e);
      if (it == index_.end()) return std::nullopt;
      b[it->second] = v;
    }
    // y = E b, with E recorded in the augmented columns.
    std::vector<D> y(rows, D(0));
    for (size_t i = 0; i < rows; ++i) {
      D acc(0);
      for (size_t j = 0; j < rows; ++j) {
        if (b[j].is_zero()) continue;
        acc += red_.at(i, nb + j) * b[j];
      }
      y[i] = acc;
    }
    std::vector<D> x(nb, D(0));
    for (const auto& [row, col] : pivots_) x[col] = y[row];
    for (size_t i = pivots_.size(); i < rows; ++i)
      if (!y[i].is_zero()) return std::nullopt;
    return x;
  }

 private:
  std::vector<MPoly<D>> basis_;
  std::vector<Exp> mono_;
  std::map<Exp, size_t, ExpGrlexDesc> index_;
  Matrix<D> red_;
  std::vector<std::pair<size_t, size_t>> pivots_;
};

/// Greedy maximal independent sublist.
template <class D>
std::vector<MPoly<D>> independent_subset(const std::vector<MPoly<D>>& polys) {
  std::vector<MPoly<D>> out;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (out.empty()) {
      out.push_back(p);
      continue;
    }
    SpanSolver<D> solver(out);
    if (!solver.contains(p)) out.push_back(p);
  }
  return out;
}

/// Keeps only the terms whose gamma-weight (a - b mod m) equals e.
/// Monomial filtering realizes the eigenspace projection of the rotation
/// gamma without leaving the rational world.
template <class D>
MPoly<D> gamma_filter(const MPoly<D>& p, int m, int e) {
  MPoly<D> r(p.vars());
  for (const auto& [ex, v] : p.terms()) {
    int w = ((ex[0] - ex[1]) % m + m) % m;
    if (w == e) r.add_term(ex, v);
  }
  return r;
}

namespace detail {

template <class D>
void check_stability(const GroupModel& g, const std::vector<MPoly<D>>& basis,
                     const SpanSolver<D>& span) {
  if (g.is_symmetric()) {
    for (const auto& s : g.reflections)
      for (const auto& p : basis)
        if (!span.contains(act_reflection(g, s, p)))
          throw NotStable("span is not stable under reflection " + std::to_string(s.id));
  } else {
    const int m = g.n_or_m;
    // s0 and gamma generate the dihedral group; gamma-stability via filters.
    for (const auto& p : basis) {
      if (!span.contains(act_dihedral(g, true, 0, p)))
        throw NotStable("span is not stable under s0");
      for (int e = 0; e < m; ++e) {
        MPoly<D> f = gamma_filter(p, m, e);
        if (!f.is_zero() && !span.contains(f))
          throw NotStable("span is not stable under the rotation gamma");
      }
    }
  }
}

}  // namespace detail

/// Multiplicities of the irreducibles in the span of `basis` (which must be
/// W-stable; checked). Keys are partition labels for S_n and
/// triv/eps/mu1/mu2/Zk for I_2(m).
template <class D>
std::map<std::string, long> decompose_module(const GroupModel& g,
                                             const std::vector<MPoly<D>>& basis) {
  std::map<std::string, long> mult;
  if (basis.empty()) return mult;
  SpanSolver<D> span(basis);
  detail::check_stability(g, basis, span);

  if (g.is_symmetric()) {
    const SymCharTable& table = sym_char_table(g.n_or_m);
    // Trace of each class representative on the span.
    std::vector<D> traces;
    for (const auto& cl : table.classes) {
      D tr(0);
      for (size_t i = 0; i < basis.size(); ++i) {
        auto c = span.coords(act_perm(g, cl.rep, basis[i]));
        if (!c) throw NotStable("span is not stable under a class representative");
        tr += (*c)[i];
      }
      traces.push_back(tr);
    }
    for (size_t t = 0; t < table.irrep_partitions.size(); ++t) {
      D acc(0);
      for (size_t c = 0; c < table.classes.size(); ++c)
        acc += traces[c] * D(static_cast<int>(table.classes[c].size)) *
               D(static_cast<int>(table.chi[t][c]));
      long m2 = to_integer(acc);
      if (m2 % g.order != 0)
        throw AlgebraError("decompose_module: non-integral multiplicity");
      long mt = m2 / g.order;
      if (mt != 0) mult[partition_label(table.irrep_partitions[t])] = mt;
    }
    return mult;
  }

  // Dihedral: gamma-weight splitting, then s0 on the ambiguous weights.
  const int m = g.n_or_m;
  std::vector<size_t> wdim(static_cast<size_t>(m), 0);
  std::vector<std::vector<MPoly<D>>> parts(static_cast<size_t>(m));
  for (int e = 0; e < m; ++e) {
    for (const auto& p : basis) {
      MPoly<D> f = gamma_filter(p, m, e);
      if (!f.is_zero()) parts[static_cast<size_t>(e)].push_back(f);
    }
    parts[static_cast<size_t>(e)] =
        independent_subset(parts[static_cast<size_t>(e)]);
    wdim[static_cast<size_t>(e)] = parts[static_cast<size_t>(e)].size();
  }
  size_t total = 0;
  for (size_t e = 0; e < static_cast<size_t>(m); ++e) total += wdim[e];
  if (total != span.dim())
    throw NotStable("gamma splitting does not fill the span");

  auto s0_split = [&](const std::vector<MPoly<D>>& fs) {
    std::vector<MPoly<D>> plus, minus;
    for (const auto& f : fs) {
      MPoly<D> sf = act_dihedral(g, true, 0, f);
      plus.push_back(f + sf);
      minus.push_back(f - sf);
    }
    return std::make_pair(independent_subset(plus).size(),
                          independent_subset(minus).size());
  };

  auto [trivd, epsd] = s0_split(parts[0]);
  if (trivd) mult["triv"] = static_cast<long>(trivd);
  if (epsd) mult["eps"] = static_cast<long>(epsd);
  if (m % 2 == 0) {
    auto [mu1d, mu2d] = s0_split(parts[static_cast<size_t>(m / 2)]);
    if (mu1d) mult["mu1"] = static_cast<long>(mu1d);
    if (mu2d) mult["mu2"] = static_cast<long>(mu2d);
  }
  for (int k = 1; 2 * k < m; ++k) {
    size_t dk = wdim[static_cast<size_t>(k)];
    if (dk != wdim[static_cast<size_t>(m - k)])
      throw NotStable("gamma weights k and m-k have different dimensions");
    if (dk) mult["Z" + std::to_string(k)] = static_cast<long>(dk);
  }
  return mult;
}

/// Dimension of an irreducible by its label.
inline long irrep_dim(const GroupModel& g, const std::string& label) {
  if (g.is_dihedral()) {
    const DihCharTable& t = dih_char_table(g.n_or_m);
    return t.irrep_dims[t.irrep_index(label)];
  }
  const SymCharTable& t = sym_char_table(g.n_or_m);
  for (size_t i = 0; i < t.irrep_partitions.size(); ++i)
    if (partition_label(t.irrep_partitions[i]) == label)
      return t.irrep_dims[i];
  throw AlgebraError("unknown irrep label " + label);
}

/// Basis of the isotypic component of `irrep` inside the span.
/// Dihedral groups use the gamma-weight splitting; S_n uses the exact
/// character projector (rational, since S_n characters are integers).
template <class D>
std::vector<MPoly<D>> isotypic_basis(const GroupModel& g,
                                     const std::vector<MPoly<D>>& basis,
                                     const std::string& irrep) {
  if (basis.empty()) return {};
  if (g.is_dihedral()) {
    const int m = g.n_or_m;
    std::vector<MPoly<D>> collected;
    auto filtered = [&](int e) {
      std::vector<MPoly<D>> fs;
      for (const auto& p : basis) {
        MPoly<D> f = gamma_filter(p, m, e);
        if (!f.is_zero()) fs.push_back(f);
      }
      return fs;
    };
    if (irrep.size() > 1 && irrep[0] == 'Z') {
      int k = std::stoi(irrep.substr(1));
      for (auto& f : filtered(k)) collected.push_back(std::move(f));
      for (auto& f : filtered(((m - k) % m + m) % m)) collected.push_back(std::move(f));
    } else {
      int e = (irrep == "triv" || irrep == "eps") ? 0 : m / 2;
      int sign = (irrep == "triv" || irrep == "mu1") ? +1 : -1;
      for (const auto& f : filtered(e)) {
        MPoly<D> sf = act_dihedral(g, true, 0, f);
        collected.push_back(sign > 0 ? f + sf : f - sf);
      }
    }
    return independent_subset(collected);
  }
  const SymCharTable& table = sym_char_table(g.n_or_m);
  // Parse "[a,b,...]" label back into a partition.
  std::vector<int> part;
  std::string inner = irrep.substr(1, irrep.size() - 2);
  size_t pos = 0;
  while (pos < inner.size()) {
    size_t comma = inner.find(',', pos);
    if (comma == std::string::npos) comma = inner.size();
    part.push_back(std::stoi(inner.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  const size_t ti = table.irrep_index(part);
  std::vector<MPoly<D>> collected;
  for (const auto& p : basis) {
    MPoly<D> acc(p.vars());
    for (const auto& w : all_permutations(g.n_or_m)) {
      long chi = table.chi[ti][table.class_of(w)];
      if (chi == 0) continue;
      acc += act_perm(g, w, p).scaled(D(static_cast<int>(chi)));
    }
    if (!acc.is_zero()) collected.push_back(std::move(acc));
  }
  return independent_subset(collected);
}

}  // namespace dunkl
