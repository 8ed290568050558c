#include "permband/hook.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace permband {

HookDiagram build_hook_diagram(const Permutation& p) {
  HookDiagram d;
  d.perm_ = p;
  const int n = p.size();
  const int w = bandwidth(p);
  if (w == 0) return d;
  const Permutation pinv = inverse(p);
  std::vector<std::vector<Crossing>> buckets(static_cast<size_t>(2 * w - 1));
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    const int pi = p(i);
    for (int c = std::max(1, i - w + 1); c < pi; ++c) {
      const int j = pinv(c);
      if (j > i) {
        Crossing x;
        x.i = i;
        x.j = j;
        x.row = i;
        x.col = c;
        x.diagonal = c - i;
        buckets[x.diagonal + w - 1].push_back(x);
        ++count;
      }
    }
  }
  for (int k = -w + 1; k <= w - 1; ++k) {
    auto& b = buckets[k + w - 1];
    if (!b.empty()) d.diagonals_.emplace_back(k, std::move(b));
  }
  d.crossing_count_ = count;
  return d;
}

int crossing_index(const Permutation& p, const Crossing& c) {
  const int n = p.size();
  if (c.i < 1 || c.j > n || c.i >= c.j || p(c.i) <= p(c.j) || c.row != c.i ||
      c.col != p(c.j) || c.diagonal != c.col - c.row)
    throw std::invalid_argument("crossing does not belong to the permutation");
  int above = 0;
  for (int t = 1; t < c.i; ++t)
    if (p(t) >= c.col) ++above;
  return c.col + above;
}

Factorization hook_factor(HookDiagram& diagram, bool pad) {
  const Permutation& p = diagram.perm_;
  const int n = p.size();
  Factorization f;
  f.n = n;
  f.flavor = Flavor::finite;
  std::vector<int> pos(static_cast<size_t>(n) + 1);
  std::iota(pos.begin(), pos.end(), 0);
  for (auto& [k, crossings] : diagram.diagonals_) {
    std::vector<int> indices;
    indices.reserve(crossings.size());
    for (Crossing& c : crossings) {
      if (pos[c.i] + 1 != pos[c.j])
        throw std::logic_error("hook simulation: lines " + std::to_string(c.i) +
                               " and " + std::to_string(c.j) +
                               " not adjacent at their crossing");
      const int idx = pos[c.i];
      c.transposition_index = idx;
      indices.push_back(idx);
      std::swap(pos[c.i], pos[c.j]);
    }
    std::sort(indices.begin(), indices.end());
    f.layers.push_back(Layer{k, Bandwidth1Factor(n, Flavor::finite, std::move(indices))});
  }
  for (int t = 1; t <= n; ++t)
    if (pos[t] != p(t))
      throw std::logic_error("hook simulation: line " + std::to_string(t) +
                             " did not reach its target");
  if (pad) pad_layers(f, bandwidth(p));
  return f;
}

Factorization hook_factor(const Permutation& p, bool pad) {
  HookDiagram d = build_hook_diagram(p);
  return hook_factor(d, pad);
}

StrangBound check_strang_bound(const Permutation& p) {
  StrangBound r;
  r.bandwidth = bandwidth(p);
  r.layer_count = static_cast<int>(mset(p).size());
  r.bound_ok = r.layer_count <= std::max(0, 2 * r.bandwidth - 1);
  return r;
}

Word to_word(const Factorization& f) {
  if (f.flavor != Flavor::finite)
    throw std::invalid_argument("to_word: finite factorizations only");
  Word w;
  w.n = f.n;
  for (const Layer& layer : f.layers)
    for (int idx : layer.factor.indices()) w.letters.push_back(idx);
  return w;
}

}  // namespace permband
