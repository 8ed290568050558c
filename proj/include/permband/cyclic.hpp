#pragma once

#include <vector>

#include "permband/factorization.hpp"

namespace permband {

// The canonical periodic lift psi of a cyclically banded permutation:
// psi(i) = i + disp[i-1] for i in 1..n, extended over the integers by
// psi(i + n) = psi(i) + n. Displacements are the residue representatives of
// pi_i - i with smallest absolute value; a tie at exactly n/2 breaks toward
// -n/2, so every disp lies in [-floor(n/2), ceil(n/2) - 1].
struct PeriodicLift {
  Permutation base;
  std::vector<int> disp;
  int band = 0;  // max |disp|, at most floor(n/2)

  int size() const { return base.size(); }

  // psi over the integers.
  long long apply(long long i) const;
};

// Requires n >= 1.
PeriodicLift lift(const Permutation& p);

// Band of the canonical lift; 0 for the empty permutation.
int cyclic_bandwidth(const Permutation& p);

// p - q, where p counts lines entering the block below (psi(i) >= n+1 for
// i <= n) and q counts lines leaving it (psi(i) <= n for i > n). Computed
// both ways (boundary count and sum(disp)/n); std::logic_error if the two
// disagree.
int shifting_index(const PeriodicLift& L);

// Factors p into at most 2w-1 cyclic bandwidth-1 layers (w the cyclic
// bandwidth) followed by the residual shift S^k with k = shifting_index.
// The simulation runs over line classes mod n; crossings of classes must be
// adjacent as integers, and the residual must be a uniform shift equal to
// the shifting index (std::logic_error otherwise).
Factorization cyclic_factor(const Permutation& p, bool pad = false);

// Index of S s_i S^{-1}: (i - 1) mod n. Requires i in 0..n-1.
int conjugate_index_by_shift(int i, int n);

}  // namespace permband
