// Small bit-twiddling helpers used by the exhaustive searches.
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ucdnf {

inline int popcount64(std::uint64_t x) { return std::popcount(x); }

// Visits every subset of `free` (including 0 and free itself).
// fn(sub) is called once per subset; order: descending in the submask lattice
// walk, deterministic.
template <typename Fn>
inline void for_each_submask(std::uint64_t free, Fn&& fn) {
  std::uint64_t sub = free;
  while (true) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
}

// Lexicographic k-combinations of {0,..,n-1}. comb starts as {0,1,..,k-1};
// returns false when exhausted. k=0 yields the single empty combination.
inline bool next_combination(std::vector<int>& comb, int n) {
  int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < n - (k - i)) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::uint64_t mask_of(const std::vector<int>& idxs) {
  std::uint64_t m = 0;
  for (int i : idxs) m |= (std::uint64_t{1} << i);
  return m;
}

inline int ceil_log2(std::uint64_t v) {
  int b = 0;
  while ((std::uint64_t{1} << b) < v) ++b;
  return b;
}

}  // namespace ucdnf
