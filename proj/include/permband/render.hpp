#pragma once

#include <string>

#include "permband/permutation.hpp"

namespace permband {

enum class RenderFormat { svg, ascii };

struct RenderOptions {
  RenderFormat format = RenderFormat::ascii;
  bool show_indices = false;    // label each crossing with its transposition index
  bool show_diagonals = false;  // dashed diagonals col - row = k for k in mset
  double scale = 24.0;          // svg units per grid cell
};

// Matrix-orientation hook diagram: one hook per line i with corner at
// (i, pi_i) and segments to (i, 0) and (0, pi_i); a marker at every
// crossing (i, pi_j). Deterministic output.
std::string render_hook(const Permutation& p, const RenderOptions& opts);

// Left-to-right wiring diagram of a word: the k-th letter is drawn as a
// crossing in column k at its letter's height. Non-reduced words render
// with a warning annotation.
std::string render_wiring(const Word& w, const RenderOptions& opts);

}  // namespace permband
