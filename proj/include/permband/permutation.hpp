#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace permband {

enum class Flavor { finite, cyclic };

std::string to_string(Flavor f);

// A permutation of {1..n} in one-line notation: position i (1-based) maps to
// pi_i. Immutable value type; all free operations below are pure.
class Permutation {
 public:
  Permutation() = default;  // the empty permutation (n = 0)

  static Permutation identity(int n);

  // Validates that `values` is a bijection on {1..n}; throws
  // std::invalid_argument naming the offending value otherwise.
  static Permutation from_one_line(std::vector<int> values);

  int size() const { return static_cast<int>(map_.size()); }

  // Image of position i, 1-based.
  int operator()(int i) const { return map_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& one_line() const { return map_; }

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : map_(std::move(values)) {}

  std::vector<int> map_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation cyclic_shift(int, int);
  friend Permutation apply_word(const struct Word&);
};

// Apply `a` first, then `b`: the result maps x to b(a(x)). This matches the
// matrix product AB under the row-permutation convention, so a product
// written g1 g2 ... gl acts with g1 first. Throws on size mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& p);

// The cyclic shift S^k: i -> i + k (mod n, values in 1..n). cyclic_shift(n, 1)
// has one-line form [2, 3, ..., n, 1].
Permutation cyclic_shift(int n, int k);

// max_i |pi_i - i|.
int bandwidth(const Permutation& p);

// All pairs (i, j) with i < j and pi_i > pi_j, lexicographically sorted.
// Runs in O(n*w + output) for a bandwidth-w input.
std::vector<std::pair<int, int>> inversions(const Permutation& p);

// The set M = { pi_j - i : (i, j) an inversion }, sorted ascending.
std::vector<int> mset(const Permutation& p);

// A word in the simple transpositions s_1 .. s_{n-1}; letters act left to
// right under the composition convention above.
struct Word {
  int n = 0;
  std::vector<int> letters;

  friend bool operator==(const Word&, const Word&) = default;
};

// Evaluates a word. Throws if a letter is outside 1..n-1.
Permutation apply_word(const Word& w);

// A product of pairwise nonadjacent simple transpositions: every position
// moves by at most one (cyclically for the cyclic flavor). Index 0 is the
// cyclic transposition s_0 = s_n swapping positions n and 1; cyclic index
// sets must be nonadjacent mod n, so {0, n-1} is rejected.
class Bandwidth1Factor {
 public:
  Bandwidth1Factor() = default;

  // `indices` may arrive unsorted; stored sorted. Throws
  // std::invalid_argument on an out-of-range, duplicate, or adjacent index.
  Bandwidth1Factor(int n, Flavor flavor, std::vector<int> indices);

  int size() const { return n_; }
  Flavor flavor() const { return flavor_; }
  const std::vector<int>& indices() const { return indices_; }

  Permutation as_permutation() const;

  friend bool operator==(const Bandwidth1Factor&, const Bandwidth1Factor&) = default;

 private:
  int n_ = 0;
  Flavor flavor_ = Flavor::finite;
  std::vector<int> indices_;
};

}  // namespace permband
