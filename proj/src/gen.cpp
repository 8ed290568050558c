#include "permband/gen.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace permband {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::bounded(std::uint64_t m) { return next() % m; }

namespace {

Permutation gen_finite(const GenConfig& cfg, SplitMix64& rng) {
  const int n = cfg.n, w = cfg.w;
  std::vector<int> out(static_cast<size_t>(n), 0);
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  std::vector<int> cand;
  for (int i = 1; i <= n; ++i) {
    // Value i-w has no feasible position after i, so it goes here.
    const int forced = i - w;
    if (forced >= 1 && !used[forced]) {
      out[i - 1] = forced;
      used[forced] = 1;
      continue;
    }
    cand.clear();
    for (int v = std::max(1, i - w); v <= std::min(n, i + w); ++v)
      if (!used[v]) cand.push_back(v);
    if (cand.empty())
      throw std::logic_error("banded generator: empty candidate window");
    const int v = cand[rng.bounded(cand.size())];
    out[i - 1] = v;
    used[v] = 1;
  }
  return Permutation::from_one_line(std::move(out));
}

Permutation gen_cyclic(const GenConfig& cfg, SplitMix64& rng) {
  const int n = cfg.n, w = cfg.w;
  std::vector<int> out(static_cast<size_t>(n), 0);
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);

  struct Frame {
    std::vector<int> cand;
    size_t next = 0;
    int placed = 0;
  };
  auto make_frame = [&](int i) {
    Frame f;
    if (2 * w + 1 >= n) {
      for (int v = 1; v <= n; ++v)
        if (!used[v]) f.cand.push_back(v);
    } else {
      for (int d = -w; d <= w; ++d) {
        const int v = ((i - 1 + d) % n + n) % n + 1;
        if (!used[v]) f.cand.push_back(v);
      }
    }
    for (size_t t = f.cand.size(); t > 1; --t)
      std::swap(f.cand[t - 1], f.cand[rng.bounded(t)]);
    return f;
  };

  std::vector<Frame> stack;
  stack.reserve(static_cast<size_t>(n));
  stack.push_back(make_frame(1));
  bool done = n == 0;
  while (!done && !stack.empty()) {
    Frame& f = stack.back();
    const int i = static_cast<int>(stack.size());
    if (f.placed) {
      used[f.placed] = 0;
      out[i - 1] = 0;
      f.placed = 0;
    }
    if (f.next >= f.cand.size()) {
      stack.pop_back();
      continue;
    }
    const int v = f.cand[f.next++];
    f.placed = v;
    out[i - 1] = v;
    used[v] = 1;
    if (i == n)
      done = true;
    else
      stack.push_back(make_frame(i + 1));
  }
  if (!done)
    throw std::logic_error("cyclic banded generator: search exhausted");
  return Permutation::from_one_line(std::move(out));
}

}  // namespace

Permutation random_banded(const GenConfig& cfg) {
  if (cfg.n < 0) throw std::invalid_argument("gen: n must be nonnegative");
  if (cfg.w < 0) throw std::invalid_argument("gen: w must be nonnegative");
  if (cfg.flavor == Flavor::cyclic && cfg.w > cfg.n / 2)
    throw std::invalid_argument("gen: cyclic flavor requires w <= floor(n/2), got w = " +
                                std::to_string(cfg.w) + ", n = " + std::to_string(cfg.n));
  if (cfg.n == 0) return Permutation();
  SplitMix64 rng(cfg.seed);
  return cfg.flavor == Flavor::finite ? gen_finite(cfg, rng) : gen_cyclic(cfg, rng);
}

}  // namespace permband
