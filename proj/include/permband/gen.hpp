#pragma once

#include <cstdint>

#include "permband/permutation.hpp"

namespace permband {

// PRNG algorithm identifier reported in generator metadata; the sequence is
// pinned so instances reproduce across runs and compilers.
inline constexpr const char* kPrngId = "splitmix64";

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // next() % m, m > 0.
  std::uint64_t bounded(std::uint64_t m);

 private:
  std::uint64_t state_;
};

struct GenConfig {
  int n = 0;
  int w = 0;
  std::uint64_t seed = 0;
  Flavor flavor = Flavor::finite;
};

// Deterministic banded instance generator. Finite flavor: scan positions
// left to right; a value at its last feasible position is placed
// immediately, otherwise one of the unused in-window values is drawn.
// Cyclic flavor: the same windows mod n with backtracking. The distribution
// is not uniform over banded permutations. Cyclic configs require
// w <= floor(n/2).
Permutation random_banded(const GenConfig& cfg);

}  // namespace permband
