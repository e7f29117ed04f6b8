#include "dunkl/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dunkl {

GroupModel GroupModel::symmetric(int n) {
  if (n < 2) throw AlgebraError("symmetric(n): need n >= 2");
  GroupModel g;
  g.kind = GroupKind::symmetric;
  g.n_or_m = n;
  g.rank = n - 1;
  g.order = 1;
  for (int i = 2; i <= n; ++i) g.order *= i;

  std::vector<std::string> names;
  for (int i = 1; i < n; ++i) names.push_back("v" + std::to_string(i));
  g.vars = make_vars(std::move(names));

  // pi(x_i) = v_i - (v_1 + ... + v_{n-1})/n  (v_n = 0), so that the images
  // sum to zero and pi(x_i - x_j) = v_i - v_j.
  MPoly<Rat> vsum(g.vars);
  for (int i = 1; i < n; ++i) vsum += MPoly<Rat>::variable(g.vars, static_cast<size_t>(i - 1));
  MPoly<Rat> shift = vsum.scaled(Rat(-1, n));
  for (int i = 1; i <= n; ++i) {
    MPoly<Rat> xi = shift;
    if (i < n) xi += MPoly<Rat>::variable(g.vars, static_cast<size_t>(i - 1));
    g.coord_images.push_back(std::move(xi));
  }

  int id = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      Reflection s;
      s.id = id++;
      s.class_index = 0;
      s.a = a;
      s.b = b;
      g.reflections.push_back(s);
      g.root_polys.push_back(g.coord_images[static_cast<size_t>(a - 1)] -
                             g.coord_images[static_cast<size_t>(b - 1)]);
    }
  g.class_count = 1;

  for (int d = 2; d <= n; ++d) g.degrees.push_back(d);
  g.coxeter_number = n;

  // Elementary symmetric polynomials of the coordinate images.
  std::vector<MPoly<Rat>> e(static_cast<size_t>(n) + 1, MPoly<Rat>(g.vars));
  e[0] = MPoly<Rat>::constant(g.vars, Rat(1));
  for (int i = 0; i < n; ++i)
    for (int k = std::min(i + 1, n); k >= 1; --k)
      e[static_cast<size_t>(k)] +=
          e[static_cast<size_t>(k - 1)] * g.coord_images[static_cast<size_t>(i)];
  for (int d = 2; d <= n; ++d) g.invariant_generators.push_back(e[static_cast<size_t>(d)]);
  return g;
}

GroupModel GroupModel::dihedral(int m) {
  if (m < 3) throw AlgebraError("dihedral(m): need m >= 3");
  GroupModel g;
  g.kind = GroupKind::dihedral;
  g.n_or_m = m;
  g.rank = 2;
  g.order = 2L * m;
  g.vars = make_vars({"z", "zb"});
  for (int j = 0; j < m; ++j) {
    Reflection s;
    s.id = j;
    s.j = j;
    s.class_index = (m % 2 == 0) ? (j % 2) : 0;
    g.reflections.push_back(s);
  }
  g.class_count = (m % 2 == 0) ? 2 : 1;
  g.degrees = {2, m};
  g.coxeter_number = m;
  auto z = MPoly<Rat>::variable(g.vars, 0);
  auto zb = MPoly<Rat>::variable(g.vars, 1);
  g.invariant_generators.push_back(z * zb);
  g.invariant_generators.push_back(z.pow(static_cast<unsigned>(m)) +
                                   zb.pow(static_cast<unsigned>(m)));
  return g;
}

GroupModel GroupModel::from_descriptor(const std::string& desc) {
  auto colon = desc.find(':');
  if (colon == std::string::npos)
    throw AlgebraError("group descriptor must look like Sn:4 or I2:5");
  const std::string kind = desc.substr(0, colon);
  const int size = std::stoi(desc.substr(colon + 1));
  if (kind == "Sn" || kind == "sn" || kind == "S") return symmetric(size);
  if (kind == "I2" || kind == "i2" || kind == "I") return dihedral(size);
  throw AlgebraError("unsupported group kind '" + kind + "'");
}

std::string GroupModel::descriptor() const {
  return (is_symmetric() ? "Sn:" : "I2:") + std::to_string(n_or_m);
}

std::vector<Exp> GroupModel::monomials_of_degree(int n) const {
  std::vector<Exp> out;
  const size_t nv = vars->size();
  Exp e(nv, 0);
  std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
    if (pos + 1 == nv) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  if (n < 0) return out;
  rec(0, n);
  std::sort(out.begin(), out.end(), ExpGrlexDesc{});
  return out;
}

std::vector<MPoly<Rat>> GroupModel::invariant_basis(int k) const {
  std::vector<MPoly<Rat>> out;
  const size_t ng = invariant_generators.size();
  std::vector<int> expo(ng, 0);
  std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
    if (pos == ng) {
      if (left != 0) return;
      MPoly<Rat> prod = MPoly<Rat>::constant(vars, Rat(1));
      for (size_t i = 0; i < ng; ++i)
        if (expo[i]) prod *= invariant_generators[i].pow(static_cast<unsigned>(expo[i]));
      out.push_back(std::move(prod));
      return;
    }
    const int d = degrees[pos];
    for (int c = 0; c * d <= left; ++c) {
      expo[pos] = c;
      rec(pos + 1, left - c * d);
    }
    expo[pos] = 0;
  };
  if (k == 0) {
    out.push_back(MPoly<Rat>::constant(vars, Rat(1)));
    return out;
  }
  if (k > 0) rec(0, k);
  return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  const size_t n = perm.size();
  std::vector<bool> seen(n + 1, false);
  std::vector<int> type;
  for (size_t i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<size_t>(perm[j - 1]);
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::vector<int> transposition(int n, int a, int b) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[static_cast<size_t>(a - 1)], w[static_cast<size_t>(b - 1)]);
  return w;
}

}  // namespace dunkl
