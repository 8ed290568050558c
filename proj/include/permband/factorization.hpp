#pragma once

#include <vector>

#include "permband/permutation.hpp"

namespace permband {

struct Layer {
  int diagonal = 0;
  Bandwidth1Factor factor;

  friend bool operator==(const Layer&, const Layer&) = default;
};

// An ordered product of bandwidth-1 layers, one per hook-diagram diagonal
// (diagonals strictly ascending), plus a residual shift exponent for the
// cyclic flavor. Recomposing the layers left to right and then the shift,
// under the apply-left-first convention, reproduces the factored permutation.
struct Factorization {
  int n = 0;
  Flavor flavor = Flavor::finite;
  std::vector<Layer> layers;
  int shift_exponent = 0;  // always 0 for the finite flavor

  int nonempty_layer_count() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

Permutation recompose(const Factorization& f);

// True iff recomposing f yields p exactly. Size or flavor inconsistencies
// return false rather than throwing.
bool verify_factorization(const Permutation& p, const Factorization& f);

// Inserts empty layers so the diagonals run -w+1 .. w-1 without gaps (the
// fixed-depth 2w-1 form). Throws std::logic_error if an existing diagonal
// falls outside that range.
void pad_layers(Factorization& f, int w);

}  // namespace permband
