#include "dunkl/chartable.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dunkl {

namespace {

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

long factorial_l(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long class_size(int n, const std::vector<int>& mu) {
  // n! / z_mu with z_mu = prod i^{m_i} m_i!.
  std::map<int, int> mult;
  for (int p : mu) mult[p]++;
  long z = 1;
  for (const auto& [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    z *= factorial_l(m);
  }
  return factorial_l(n) / z;
}

/// Murnaghan-Nakayama via beta-numbers: remove a border strip of length k
/// from lambda by lowering one beta-number, sign by the number of
/// beta-numbers jumped over.
long mn_char(std::vector<int> lambda, std::vector<int> rho,
             std::map<std::pair<std::vector<int>, std::vector<int>>, long>& memo) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, rho);
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  const int k = rho.front();
  std::vector<int> rest(rho.begin() + 1, rho.end());
  const int l = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.rbegin(), lambda.rend());  // ascending
  for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] += i;

  long total = 0;
  for (int i = 0; i < l; ++i) {
    const int b = beta[static_cast<size_t>(i)];
    const int t = b - k;
    if (t < 0) continue;
    if (std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
    int jumped = 0;
    for (int j = 0; j < l; ++j)
      if (beta[static_cast<size_t>(j)] > t && beta[static_cast<size_t>(j)] < b) ++jumped;
    std::vector<int> nb = beta;
    nb[static_cast<size_t>(i)] = t;
    std::sort(nb.begin(), nb.end());
    std::vector<int> nl(nb.size());
    for (size_t j = 0; j < nb.size(); ++j)
      nl[j] = nb[j] - static_cast<int>(j);
    std::vector<int> next(nl.rbegin(), nl.rend());
    long sub = mn_char(next, rest, memo);
    total += (jumped % 2 ? -sub : sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

std::vector<int> class_rep_perm(int n, const std::vector<int>& mu) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  int start = 1;
  for (int part : mu) {
    for (int i = 0; i < part; ++i)
      w[static_cast<size_t>(start - 1 + i)] = start + (i + 1) % part;
    start += part;
  }
  return w;
}

}  // namespace

std::string partition_label(const std::vector<int>& partition) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < partition.size(); ++i) {
    if (i) os << ",";
    os << partition[i];
  }
  os << "]";
  return os.str();
}

size_t SymCharTable::class_of(const std::vector<int>& perm) const {
  std::vector<int> type = cycle_type(perm);
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].partition == type) return i;
  throw AlgebraError("SymCharTable: unknown cycle type");
}

size_t SymCharTable::irrep_index(const std::vector<int>& partition) const {
  for (size_t i = 0; i < irrep_partitions.size(); ++i)
    if (irrep_partitions[i] == partition) return i;
  throw AlgebraError("SymCharTable: unknown irrep partition");
}

const SymCharTable& sym_char_table(int n) {
  static std::map<int, SymCharTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  SymCharTable t;
  t.n = n;
  auto parts = partitions_of(n);
  for (const auto& muP : parts)
    t.classes.push_back({muP, class_size(n, muP), class_rep_perm(n, muP)});
  t.irrep_partitions = parts;
  std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;
  for (const auto& lam : parts) {
    std::vector<long> row;
    row.reserve(parts.size());
    for (const auto& muP : parts) row.push_back(mn_char(lam, muP, memo));
    t.chi.push_back(std::move(row));
  }
  std::vector<int> identity(static_cast<size_t>(n), 1);
  size_t idclass = 0;
  for (size_t i = 0; i < t.classes.size(); ++i)
    if (t.classes[i].partition == identity) idclass = i;
  for (const auto& row : t.chi) t.irrep_dims.push_back(row[idclass]);
  return cache.emplace(n, std::move(t)).first->second;
}

size_t DihCharTable::irrep_index(const std::string& name) const {
  for (size_t i = 0; i < irrep_names.size(); ++i)
    if (irrep_names[i] == name) return i;
  throw AlgebraError("DihCharTable: unknown irrep " + name);
}

const DihCharTable& dih_char_table(int m) {
  static std::map<int, DihCharTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  DihCharTable t;
  t.m = m;
  const bool even = (m % 2 == 0);
  // Classes: identity, rotations r_j ~ r_{-j}, (m even: r_{m/2}),
  // reflections in one class (m odd) or two (m even).
  t.classes.push_back({false, 0, 1, "e"});
  for (int j = 1; 2 * j < m; ++j)
    t.classes.push_back({false, j, 2, "r" + std::to_string(j)});
  if (even) t.classes.push_back({false, m / 2, 1, "r" + std::to_string(m / 2)});
  if (even) {
    t.classes.push_back({true, 0, m / 2, "s_even"});
    t.classes.push_back({true, 1, m / 2, "s_odd"});
  } else {
    t.classes.push_back({true, 0, m, "s"});
  }

  auto add_onedim = [&](const std::string& name, auto value) {
    t.irrep_names.push_back(name);
    t.irrep_dims.push_back(1);
    std::vector<Cyclo> row;
    for (const auto& cl : t.classes) row.push_back(value(cl));
    t.chi.push_back(std::move(row));
  };
  add_onedim("triv", [](const DihCharTable::Class&) { return Cyclo(1); });
  add_onedim("eps", [](const DihCharTable::Class& cl) {
    return cl.refl ? Cyclo(-1) : Cyclo(1);
  });
  if (even) {
    // mu1: s_even -> +1, s_odd -> -1; on rotations r_j -> (-1)^j.
    add_onedim("mu1", [](const DihCharTable::Class& cl) {
      return (cl.j % 2 == 0) ? Cyclo(1) : Cyclo(-1);
    });
    add_onedim("mu2", [](const DihCharTable::Class& cl) {
      if (cl.refl) return (cl.j % 2 == 0) ? Cyclo(-1) : Cyclo(1);
      return (cl.j % 2 == 0) ? Cyclo(1) : Cyclo(-1);
    });
  }
  for (int k = 1; 2 * k < m; ++k) {
    t.irrep_names.push_back("Z" + std::to_string(k));
    t.irrep_dims.push_back(2);
    std::vector<Cyclo> row;
    for (const auto& cl : t.classes) {
      if (cl.refl) {
        row.push_back(Cyclo(0));
      } else {
        row.push_back(Cyclo::zeta_power(m, static_cast<long>(k) * cl.j) +
                      Cyclo::zeta_power(m, -static_cast<long>(k) * cl.j));
      }
    }
    t.chi.push_back(std::move(row));
  }
  return cache.emplace(m, std::move(t)).first->second;
}

std::string defining_irrep_label(const GroupModel& g) {
  if (g.is_dihedral()) return "Z1";
  std::vector<int> p{g.n_or_m - 1, 1};
  return partition_label(p);
}

std::string trivial_irrep_label(const GroupModel& g) {
  if (g.is_dihedral()) return "triv";
  return partition_label({g.n_or_m});
}

std::string sign_irrep_label(const GroupModel& g) {
  if (g.is_dihedral()) return "eps";
  std::vector<int> p(static_cast<size_t>(g.n_or_m), 1);
  return partition_label(p);
}

}  // namespace dunkl
