#include "permband/cyclic.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace permband {

long long PeriodicLift::apply(long long i) const {
  const long long n = size();
  long long q = (i - 1) / n;
  if ((i - 1) % n < 0) --q;
  const long long r = i - q * n;  // representative in 1..n
  return i + disp[static_cast<size_t>(r - 1)];
}

PeriodicLift lift(const Permutation& p) {
  const int n = p.size();
  if (n < 1) throw std::invalid_argument("lift requires n >= 1");
  PeriodicLift L;
  L.base = p;
  L.disp.resize(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int d = ((p(i) - i) % n + n) % n;
    if (2 * d >= n) d -= n;  // smallest |d|; tie at n/2 goes negative
    L.disp[i - 1] = d;
    L.band = std::max(L.band, std::abs(d));
  }
  return L;
}

int cyclic_bandwidth(const Permutation& p) {
  if (p.size() == 0) return 0;
  return lift(p).band;
}

int shifting_index(const PeriodicLift& L) {
  const int n = L.size();
  int entering = 0;
  for (int i = 1; i <= n; ++i)
    if (L.apply(i) >= n + 1) ++entering;
  int leaving = 0;
  for (int i = n + 1; i <= n + L.band; ++i)
    if (L.apply(i) <= n) ++leaving;
  const int by_boundary = entering - leaving;
  const long long sum = std::accumulate(L.disp.begin(), L.disp.end(), 0LL);
  if (sum % n != 0 || sum / n != by_boundary)
    throw std::logic_error(
        "shifting index: boundary count and displacement sum disagree (" +
        std::to_string(by_boundary) + " vs sum " + std::to_string(sum) + "/" +
        std::to_string(n) + ")");
  return by_boundary;
}

Factorization cyclic_factor(const Permutation& p, bool pad) {
  const int n = p.size();
  Factorization f;
  f.n = n;
  f.flavor = Flavor::cyclic;
  if (n == 0) return f;

  const PeriodicLift L = lift(p);
  const int w = L.band;
  const int shift = shifting_index(L);

  if (w > 0) {
    // Crossing classes: representative pairs (i, j), 1 <= i <= n,
    // i < j <= i + n - 1, psi(i) > psi(j). A crossing needs j - i < 2w,
    // and 2w <= n for the canonical lift.
    struct ClassPair {
      int i;
      int j;
    };
    std::vector<std::vector<ClassPair>> buckets(static_cast<size_t>(2 * w - 1));
    const int span = std::min(2 * w, n);
    for (int i = 1; i <= n; ++i) {
      const long long pi = L.apply(i);
      for (int j = i + 1; j <= i + span - 1; ++j) {
        const long long pj = L.apply(j);
        if (pi > pj) {
          const int k = static_cast<int>(pj - i);
          buckets[k + w - 1].push_back(ClassPair{i, j});
        }
      }
    }

    std::vector<long long> pos(static_cast<size_t>(n) + 1);
    std::iota(pos.begin(), pos.end(), 0LL);
    for (int k = -w + 1; k <= w - 1; ++k) {
      const auto& b = buckets[k + w - 1];
      if (b.empty()) continue;
      std::vector<int> indices;
      indices.reserve(b.size());
      for (const ClassPair& c : b) {
        const int jr = (c.j - 1) % n + 1;
        const long long off = c.j - jr;  // 0 or n
        const long long pj = pos[jr] + off;
        if (pos[c.i] + 1 != pj)
          throw std::logic_error("cyclic simulation: line classes " +
                                 std::to_string(c.i) + " and " + std::to_string(c.j) +
                                 " not adjacent at their crossing");
        const long long raw = pos[c.i];
        indices.push_back(static_cast<int>(((raw % n) + n) % n));
        pos[c.i] = pj;
        pos[jr] = raw - off;
      }
      std::sort(indices.begin(), indices.end());
      f.layers.push_back(Layer{k, Bandwidth1Factor(n, Flavor::cyclic, std::move(indices))});
    }

    const long long residual = L.apply(1) - pos[1];
    for (int t = 1; t <= n; ++t)
      if (L.apply(t) - pos[t] != residual)
        throw std::logic_error("cyclic simulation: residual is not a uniform shift");
    if (residual != shift)
      throw std::logic_error("cyclic simulation: residual shift " +
                             std::to_string(residual) +
                             " disagrees with shifting index " + std::to_string(shift));
  }

  f.shift_exponent = shift;
  if (pad) pad_layers(f, w);
  return f;
}

int conjugate_index_by_shift(int i, int n) {
  if (n < 1) throw std::invalid_argument("conjugate_index_by_shift: n >= 1 required");
  if (i < 0 || i > n - 1)
    throw std::invalid_argument("transposition index " + std::to_string(i) +
                                " out of range 0.." + std::to_string(n - 1));
  return (i - 1 + n) % n;
}

}  // namespace permband
