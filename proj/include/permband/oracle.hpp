#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "permband/permutation.hpp"

namespace permband {

// All distinct bandwidth-1 permutations of size n, identity included. The
// cyclic flavor also holds the shifts S and S^{-1}. For n >= 3 the member
// count is Fibonacci(n+1) (finite) or Lucas(n) + 2 (cyclic); for n < 3 some
// index sets coincide as permutations and are deduplicated.
struct GeneratorSet {
  int n = 0;
  Flavor flavor = Flavor::finite;
  std::vector<Permutation> members;
};

GeneratorSet enumerate_generators(int n, Flavor flavor, int max_n = 20);

struct BfsResult {
  Permutation target;
  int min_length = 0;
  std::vector<int> witness_indices;       // into the generator set used
  std::vector<Permutation> witness;       // recomposes to target, left first
};

// Exact minimal number of bandwidth-1 factors: BFS distance from the
// identity in the Cayley graph on the non-identity generators. Size caps
// keep the search tractable (defaults: 9 finite, 8 cyclic); exceeding the
// cap throws std::invalid_argument.
BfsResult min_factors(const Permutation& p, Flavor flavor,
                      std::optional<int> max_n = std::nullopt);

// One BFS sweep over all of S_n: distance of every permutation from the
// identity, keyed by pack_one_line. Supported for n <= 9.
std::unordered_map<std::uint64_t, int> bfs_distances(int n, Flavor flavor);

// One-line form packed 4 bits per position; requires n <= 16.
std::uint64_t pack_one_line(const Permutation& p);

// sigma = [w+1 .. 2w, 1 .. w, 2w+1 .. n]: bandwidth w, and no product of
// fewer than 2w-1 bandwidth-1 factors equals it. Requires n >= 2w, w >= 1.
Permutation tight_example(int w, int n);

// Deletes pairs of letters at which the same two strands cross twice
// (scanning left to right, removing the leftmost second crossing and its
// match) until no pair crosses twice. The result evaluates to the same
// permutation and its length equals the inversion count.
Word reduce_word(const Word& w);

}  // namespace permband
