#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "permband/gen.hpp"
#include "permband/permutation.hpp"

namespace permband::test {

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline Permutation random_perm(int n, SplitMix64& rng) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  for (size_t t = v.size(); t > 1; --t)
    std::swap(v[t - 1], v[rng.bounded(t)]);
  return Permutation::from_one_line(std::move(v));
}

// Definition-level oracle, independent of the banded scan in the library.
inline std::vector<std::pair<int, int>> naive_inversions(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p(i) > p(j)) out.emplace_back(i, j);
  return out;
}

inline long long fib(int k) {
  long long a = 1, b = 1;  // F(1) = F(2) = 1
  for (int t = 2; t < k; ++t) {
    const long long c = a + b;
    a = b;
    b = c;
  }
  return k <= 2 ? 1 : b;
}

inline long long lucas(int k) {
  long long a = 1, b = 3;  // L(1) = 1, L(2) = 3
  if (k == 1) return a;
  for (int t = 2; t < k; ++t) {
    const long long c = a + b;
    a = b;
    b = c;
  }
  return b;
}

inline size_t count_substr(const std::string& text, const std::string& needle) {
  size_t count = 0;
  for (size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++count;
  return count;
}

}  // namespace permband::test
