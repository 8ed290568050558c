#include "permband/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace permband {

namespace {

bool mask_nonadjacent(unsigned mask) { return (mask & (mask << 1)) == 0; }

bool mask_nonadjacent_cyclic(unsigned mask, int n) {
  for (int b = 0; b < n; ++b)
    if ((mask >> b & 1u) && (mask >> ((b + 1) % n) & 1u)) return false;
  return true;
}

int default_cap(Flavor flavor) { return flavor == Flavor::finite ? 9 : 8; }

}  // namespace

std::uint64_t pack_one_line(const Permutation& p) {
  if (p.size() > 16)
    throw std::invalid_argument("pack_one_line supports n <= 16");
  std::uint64_t code = 0;
  const auto& v = p.one_line();
  for (size_t i = 0; i < v.size(); ++i)
    code |= static_cast<std::uint64_t>(v[i] - 1) << (4 * i);
  return code;
}

GeneratorSet enumerate_generators(int n, Flavor flavor, int max_n) {
  if (n < 1) throw std::invalid_argument("enumerate_generators requires n >= 1");
  if (n > max_n || n > 16)
    throw std::invalid_argument("enumerate_generators: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(std::min(max_n, 16)));
  GeneratorSet g;
  g.n = n;
  g.flavor = flavor;
  std::unordered_set<std::uint64_t> seen;
  auto add = [&](const Permutation& p) {
    if (seen.insert(pack_one_line(p)).second) g.members.push_back(p);
  };
  if (flavor == Flavor::finite) {
    const int bits = n - 1;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
      if (!mask_nonadjacent(mask)) continue;
      std::vector<int> idx;
      for (int b = 0; b < bits; ++b)
        if (mask >> b & 1u) idx.push_back(b + 1);
      add(Bandwidth1Factor(n, Flavor::finite, std::move(idx)).as_permutation());
    }
  } else {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (!mask_nonadjacent_cyclic(mask, n)) continue;
      std::vector<int> idx;
      for (int b = 0; b < n; ++b)
        if (mask >> b & 1u) idx.push_back(b);
      add(Bandwidth1Factor(n, Flavor::cyclic, std::move(idx)).as_permutation());
    }
    add(cyclic_shift(n, 1));
    add(cyclic_shift(n, -1));
  }
  return g;
}

BfsResult min_factors(const Permutation& p, Flavor flavor, std::optional<int> max_n) {
  const int n = p.size();
  const int cap = max_n.value_or(default_cap(flavor));
  if (n > cap)
    throw std::invalid_argument("min_factors: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap) +
                                " (raise with max_n)");
  BfsResult r;
  r.target = p;
  if (n == 0 || p.is_identity()) return r;

  const GeneratorSet gens = enumerate_generators(n, flavor, cap);
  std::vector<int> edges;
  for (size_t gi = 0; gi < gens.members.size(); ++gi)
    if (!gens.members[gi].is_identity()) edges.push_back(static_cast<int>(gi));

  const std::uint64_t target = pack_one_line(p);
  const Permutation id = Permutation::identity(n);
  const std::uint64_t start = pack_one_line(id);
  // code -> (predecessor code, generator index appended to reach it)
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> parent;
  parent.emplace(start, std::make_pair(start, -1));
  std::queue<Permutation> frontier;
  frontier.push(id);
  bool found = false;
  while (!frontier.empty() && !found) {
    const Permutation cur = std::move(frontier.front());
    frontier.pop();
    const std::uint64_t cur_code = pack_one_line(cur);
    for (int gi : edges) {
      Permutation nxt = compose(cur, gens.members[gi]);
      const std::uint64_t code = pack_one_line(nxt);
      if (!parent.try_emplace(code, cur_code, gi).second) continue;
      if (code == target) {
        found = true;
        break;
      }
      frontier.push(std::move(nxt));
    }
  }
  if (!found && parent.find(target) == parent.end())
    throw std::logic_error("min_factors: target not reached");

  std::vector<int> rev;
  for (std::uint64_t code = target; code != start;) {
    const auto& [prev, gi] = parent.at(code);
    rev.push_back(gi);
    code = prev;
  }
  r.min_length = static_cast<int>(rev.size());
  r.witness_indices.assign(rev.rbegin(), rev.rend());
  Permutation check = Permutation::identity(n);
  for (int gi : r.witness_indices) {
    r.witness.push_back(gens.members[gi]);
    check = compose(check, gens.members[gi]);
  }
  if (!(check == p))
    throw std::logic_error("min_factors: witness failed recomposition");
  return r;
}

std::unordered_map<std::uint64_t, int> bfs_distances(int n, Flavor flavor) {
  if (n < 1 || n > 9)
    throw std::invalid_argument("bfs_distances: n out of supported range 1..9");
  const GeneratorSet gens = enumerate_generators(n, flavor);
  std::vector<int> edges;
  for (size_t gi = 0; gi < gens.members.size(); ++gi)
    if (!gens.members[gi].is_identity()) edges.push_back(static_cast<int>(gi));

  std::unordered_map<std::uint64_t, int> dist;
  const Permutation id = Permutation::identity(n);
  dist.emplace(pack_one_line(id), 0);
  std::queue<Permutation> frontier;
  frontier.push(id);
  while (!frontier.empty()) {
    const Permutation cur = std::move(frontier.front());
    frontier.pop();
    const int d = dist.at(pack_one_line(cur));
    for (int gi : edges) {
      Permutation nxt = compose(cur, gens.members[gi]);
      if (dist.try_emplace(pack_one_line(nxt), d + 1).second)
        frontier.push(std::move(nxt));
    }
  }
  return dist;
}

Permutation tight_example(int w, int n) {
  if (w < 1) throw std::invalid_argument("tight_example: w >= 1 required");
  if (n < 2 * w)
    throw std::invalid_argument("tight_example: n >= 2w required (n = " +
                                std::to_string(n) + ", w = " + std::to_string(w) + ")");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= w; ++i) v.push_back(w + i);
  for (int i = 1; i <= w; ++i) v.push_back(i);
  for (int i = 2 * w + 1; i <= n; ++i) v.push_back(i);
  return Permutation::from_one_line(std::move(v));
}

Word reduce_word(const Word& w) {
  for (int l : w.letters)
    if (l < 1 || l > w.n - 1)
      throw std::invalid_argument("word letter " + std::to_string(l) +
                                  " out of range 1.." + std::to_string(w.n - 1));
  std::vector<int> letters = w.letters;
  for (;;) {
    std::vector<int> at(static_cast<size_t>(w.n));  // at[pos-1] = strand
    std::iota(at.begin(), at.end(), 1);
    std::map<std::pair<int, int>, int> open;  // strand pair -> unmatched crossing
    int del_a = -1, del_b = -1;
    for (int t = 0; t < static_cast<int>(letters.size()); ++t) {
      const int l = letters[t];
      const std::pair<int, int> key{std::min(at[l - 1], at[l]), std::max(at[l - 1], at[l])};
      if (auto it = open.find(key); it != open.end()) {
        del_a = it->second;
        del_b = t;
        break;
      }
      open.emplace(key, t);
      std::swap(at[l - 1], at[l]);
    }
    if (del_a < 0) break;
    letters.erase(letters.begin() + del_b);
    letters.erase(letters.begin() + del_a);
  }
  return Word{w.n, std::move(letters)};
}

}  // namespace permband
