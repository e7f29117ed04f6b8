#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "dunkl/rat.hpp"

namespace dunkl {

/// Deterministic source of "random rational" probe values. All generic
/// checks draw from {p/q : |p| <= 50, 1 <= q <= 50}, skipping excluded
/// (confirmed singular) values; the sequence is fixed by the seed.
class ProbeRng {
 public:
  explicit ProbeRng(uint64_t seed = kDefaultSeed) : eng_(seed) {}

  static constexpr uint64_t kDefaultSeed = 20240917ull;

  uint64_t uint(uint64_t bound) { return eng_() % bound; }

  Rat rational() {
    long p = static_cast<long>(eng_() % 101) - 50;  // -50..50
    long q = static_cast<long>(eng_() % 50) + 1;    // 1..50
    return Rat(p, q);
  }

  /// A probe value outside `excluded`, distinct from earlier draws made
  /// through this helper.
  Rat rational_excluding(const std::vector<Rat>& excluded) {
    for (int tries = 0; tries < 10000; ++tries) {
      Rat r = rational();
      bool bad = seen_.count(r.str()) > 0;
      for (const auto& x : excluded)
        if (x == r) bad = true;
      if (!bad) {
        seen_.insert(r.str());
        return r;
      }
    }
    throw AlgebraError("ProbeRng: exhausted probe candidates");
  }

  void reset_seen() { seen_.clear(); }

 private:
  std::mt19937_64 eng_;
  std::set<std::string> seen_;
};

}  // namespace dunkl
