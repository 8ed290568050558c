#pragma once

#include <utility>
#include <vector>

#include "permband/factorization.hpp"

namespace permband {

// An inversion (i, j) of pi, located at hook-diagram grid point
// (row, col) = (i, pi_j) on diagonal col - row.
struct Crossing {
  int i = 0;
  int j = 0;
  int row = 0;
  int col = 0;
  int diagonal = 0;
  int transposition_index = 0;  // filled in by hook_factor

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Crossings of the hook diagram of a permutation, grouped by diagonal
// (ascending) and sorted by row within each diagonal.
class HookDiagram {
 public:
  using DiagonalEntry = std::pair<int, std::vector<Crossing>>;

  const Permutation& perm() const { return perm_; }
  const std::vector<DiagonalEntry>& diagonals() const { return diagonals_; }
  int crossing_count() const { return crossing_count_; }

 private:
  friend HookDiagram build_hook_diagram(const Permutation&);
  friend Factorization hook_factor(HookDiagram&, bool);

  Permutation perm_;
  std::vector<DiagonalEntry> diagonals_;
  int crossing_count_ = 0;
};

// O(n*w + n) for a bandwidth-w input; the diagonal keys equal mset(p).
HookDiagram build_hook_diagram(const Permutation& p);

// Closed-form transposition index of a crossing:
//   col + #{ t < i : pi_t >= col }.
// Cross-checks the simulation in hook_factor. Throws std::invalid_argument
// if c is not a crossing of p.
int crossing_index(const Permutation& p, const Crossing& c);

// Factors p into one bandwidth-1 layer per nonempty diagonal by simulating
// line positions through the hook diagram: lines are swapped at each
// crossing, in ascending diagonal order, and must be adjacent when they
// cross (std::logic_error otherwise). With pad, empty layers are inserted so
// exactly max(0, 2w-1) layers come out.
Factorization hook_factor(const Permutation& p, bool pad = false);

// Same, filling in each crossing's transposition_index.
Factorization hook_factor(HookDiagram& diagram, bool pad = false);

struct StrangBound {
  int bandwidth = 0;
  int layer_count = 0;
  bool bound_ok = false;

  friend bool operator==(const StrangBound&, const StrangBound&) = default;
};

// layer_count = #mset(p); bound_ok iff layer_count <= max(0, 2w - 1).
StrangBound check_strang_bound(const Permutation& p);

// Concatenates layer indices in layer order (ascending within a layer).
// Finite flavor only; throws std::invalid_argument on a cyclic input.
Word to_word(const Factorization& f);

}  // namespace permband
