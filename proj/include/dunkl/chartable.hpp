#pragma once

#include <string>
#include <vector>

#include "dunkl/cyclo.hpp"
#include "dunkl/group.hpp"

namespace dunkl {

/// Character table of S_n. Irreducibles and conjugacy classes are both
/// labeled by partitions of n (descending). Values via the
/// Murnaghan-Nakayama rule; intended for n <= 6.
struct SymCharTable {
  int n = 0;
  struct Class {
    std::vector<int> partition;
    long size = 0;
    std::vector<int> rep;  // one representative permutation
  };
  std::vector<Class> classes;
  std::vector<std::vector<int>> irrep_partitions;
  std::vector<long> irrep_dims;
  std::vector<std::vector<long>> chi;  // chi[irrep][class]

  size_t class_of(const std::vector<int>& perm) const;
  size_t irrep_index(const std::vector<int>& partition) const;
};

const SymCharTable& sym_char_table(int n);

std::string partition_label(const std::vector<int>& partition);

/// Character table of I_2(m) over the cyclotomic field Q(zeta_m).
/// Irreducibles: triv, eps (all m), mu1, mu2 (m even), Z_k for
/// 1 <= k < m/2.
struct DihCharTable {
  int m = 0;
  struct Class {
    bool refl = false;
    int j = 0;  // rotation r_j or reflection s_j representative
    long size = 0;
    std::string label;
  };
  std::vector<Class> classes;
  std::vector<std::string> irrep_names;
  std::vector<int> irrep_dims;
  std::vector<std::vector<Cyclo>> chi;  // chi[irrep][class]

  size_t irrep_index(const std::string& name) const;
};

const DihCharTable& dih_char_table(int m);

/// Irreducible labels used across modules.
std::string defining_irrep_label(const GroupModel& g);   // "[n-1,1]" or "Z1"
std::string trivial_irrep_label(const GroupModel& g);
std::string sign_irrep_label(const GroupModel& g);

/// Class function: one exact value per conjugacy class (spec type).
struct ClassFunction {
  std::vector<std::string> class_labels;
  std::vector<Cyclo> values;
};

}  // namespace dunkl
