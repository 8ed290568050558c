#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permband/factorization.hpp"

namespace permband {

// Whitespace-separated one-line form. Whitespace-only input is the empty
// permutation; any non-numeric token, out-of-range value, or duplicate is an
// std::invalid_argument naming the offender.
Permutation parse_permutation(std::string_view text);

// Whitespace-separated integers (used for word letters).
std::vector<int> parse_int_list(std::string_view text);

// Dense 0/1 permutation matrix, one row per line. Must be square with
// exactly one 1 per row and column; violations report row/column
// coordinates (1-based).
Permutation parse_matrix(std::string_view text);

struct GeneratorMeta {
  std::string prng;
  std::uint64_t seed = 0;

  friend bool operator==(const GeneratorMeta&, const GeneratorMeta&) = default;
};

// Serializable factorization with its conventions and provenance. The JSON
// form round-trips byte-stably through to_json/document_from_json.
struct FactorizationDocument {
  int n = 0;
  Flavor flavor = Flavor::finite;
  int w = 0;                 // bandwidth (cyclic bandwidth for that flavor)
  std::vector<int> mset;     // diagonals carrying crossings, ascending
  Factorization factorization;
  std::optional<GeneratorMeta> generator;
};

FactorizationDocument make_document(const Permutation& p, const Factorization& f,
                                    std::optional<GeneratorMeta> generator = std::nullopt);

// Pinned text form, ASCII, one layer per line:
//   k=<int>: s<i> s<i> ...
// then `shift: <int>` for the cyclic flavor. Trailing newline on every line.
std::string to_text(const Factorization& f);

std::string to_json(const FactorizationDocument& d);
FactorizationDocument document_from_json(std::string_view text);

}  // namespace permband
