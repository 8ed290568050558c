#include "permband/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace permband {

std::string to_string(Flavor f) {
  return f == Flavor::finite ? "finite" : "cyclic";
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation size must be nonnegative");
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::from_one_line(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(values.size(), 0);
  for (int v : values) {
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    if (seen[v - 1])
      throw std::invalid_argument("duplicate value " + std::to_string(v));
    seen[v - 1] = 1;
  }
  return Permutation(std::move(values), Unchecked{});
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (map_[i] != i + 1) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("compose: size mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  std::vector<int> v(a.map_.size());
  for (size_t x = 0; x < v.size(); ++x) v[x] = b.map_[a.map_[x] - 1];
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<int> v(p.map_.size());
  for (int i = 1; i <= p.size(); ++i) v[p.map_[i - 1] - 1] = i;
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation cyclic_shift(int n, int k) {
  if (n < 0) throw std::invalid_argument("cyclic_shift: size must be nonnegative");
  if (n == 0) return Permutation();
  const int r = ((k % n) + n) % n;
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = (i + r) % n + 1;
  return Permutation(std::move(v), Permutation::Unchecked{});
}

int bandwidth(const Permutation& p) {
  int w = 0;
  for (int i = 1; i <= p.size(); ++i) w = std::max(w, std::abs(p(i) - i));
  return w;
}

std::vector<std::pair<int, int>> inversions(const Permutation& p) {
  const int n = p.size();
  const int w = bandwidth(p);
  std::vector<std::pair<int, int>> out;
  if (w == 0) return out;
  const Permutation pinv = inverse(p);
  // A crossing at column c in row i needs pi^-1_c > i, impossible once
  // c <= i - w, so each row scans at most 2w - 1 columns.
  for (int i = 1; i <= n; ++i)
    for (int c = std::max(1, i - w + 1); c < p(i); ++c)
      if (pinv(c) > i) out.emplace_back(i, pinv(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> mset(const Permutation& p) {
  const int n = p.size();
  const int w = bandwidth(p);
  std::vector<int> out;
  if (w == 0) return out;
  const Permutation pinv = inverse(p);
  std::vector<char> seen(static_cast<size_t>(2 * w - 1), 0);
  for (int i = 1; i <= n; ++i)
    for (int c = std::max(1, i - w + 1); c < p(i); ++c)
      if (pinv(c) > i) seen[c - i + w - 1] = 1;
  for (int k = -w + 1; k <= w - 1; ++k)
    if (seen[k + w - 1]) out.push_back(k);
  return out;
}

Permutation apply_word(const Word& w) {
  for (int l : w.letters)
    if (l < 1 || l > w.n - 1)
      throw std::invalid_argument("word letter " + std::to_string(l) +
                                  " out of range 1.." + std::to_string(w.n - 1));
  std::vector<int> cur(static_cast<size_t>(w.n)), pos(static_cast<size_t>(w.n));
  std::iota(cur.begin(), cur.end(), 1);
  std::iota(pos.begin(), pos.end(), 1);
  // Appending s_l swaps the values l and l+1 wherever they currently sit.
  for (int l : w.letters) {
    const int x = pos[l - 1], y = pos[l];
    std::swap(cur[x - 1], cur[y - 1]);
    std::swap(pos[l - 1], pos[l]);
  }
  return Permutation(std::move(cur), Permutation::Unchecked{});
}

Bandwidth1Factor::Bandwidth1Factor(int n, Flavor flavor, std::vector<int> indices)
    : n_(n), flavor_(flavor), indices_(std::move(indices)) {
  if (n_ < 0) throw std::invalid_argument("factor size must be nonnegative");
  std::sort(indices_.begin(), indices_.end());
  const int lo = flavor_ == Flavor::finite ? 1 : 0;
  for (size_t t = 0; t < indices_.size(); ++t) {
    const int idx = indices_[t];
    if (idx < lo || idx > n_ - 1)
      throw std::invalid_argument("transposition index " + std::to_string(idx) +
                                  " out of range " + std::to_string(lo) + ".." +
                                  std::to_string(n_ - 1));
    if (t > 0 && idx - indices_[t - 1] < 2)
      throw std::invalid_argument("transposition indices " +
                                  std::to_string(indices_[t - 1]) + " and " +
                                  std::to_string(idx) + " are adjacent");
  }
  if (flavor_ == Flavor::cyclic && indices_.size() >= 2 &&
      indices_.front() + n_ - indices_.back() < 2)
    throw std::invalid_argument("transposition indices " +
                                std::to_string(indices_.back()) + " and " +
                                std::to_string(indices_.front()) +
                                " are adjacent mod " + std::to_string(n_));
}

Permutation Bandwidth1Factor::as_permutation() const {
  std::vector<int> v(static_cast<size_t>(n_));
  std::iota(v.begin(), v.end(), 1);
  for (int idx : indices_) {
    if (idx == 0)
      std::swap(v[n_ - 1], v[0]);
    else
      std::swap(v[idx - 1], v[idx]);
  }
  return Permutation::from_one_line(std::move(v));
}

}  // namespace permband
