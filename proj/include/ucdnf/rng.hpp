// Deterministic randomness. Bounded draws and subset sampling are hand-rolled
// (rejection + partial Fisher-Yates) so results do not depend on the standard
// library's distribution internals; reports must be bit-reproducible.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace ucdnf {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound). Rejection sampling; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % bound;
  }

  // k distinct values from pool, uniform, order discarded (result sorted).
  // Partial Fisher-Yates on a copy of the pool.
  std::vector<int> sample(std::vector<int> pool, std::size_t k) {
    if (k > pool.size()) k = pool.size();
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + static_cast<std::size_t>(below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ucdnf
