#include "permband/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "permband/cyclic.hpp"
#include "permband/hook.hpp"

namespace permband {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int_token(const std::string& tok) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw std::invalid_argument("invalid token '" + tok + "': expected an integer");
  return value;
}

Flavor flavor_from_string(const std::string& s) {
  if (s == "finite") return Flavor::finite;
  if (s == "cyclic") return Flavor::cyclic;
  throw std::invalid_argument("unknown flavor '" + s + "'");
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  for (const std::string& tok : tokenize(text)) values.push_back(parse_int_token(tok));
  return Permutation::from_one_line(std::move(values));
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  for (const std::string& tok : tokenize(text)) values.push_back(parse_int_token(tok));
  return values;
}

Permutation parse_matrix(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls{line};
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      const int v = parse_int_token(tok);
      if (v != 0 && v != 1)
        throw std::invalid_argument("matrix entry at row " + std::to_string(rows.size() + 1) +
                                    " column " + std::to_string(row.size() + 1) +
                                    " must be 0 or 1, got '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  std::vector<int> one_line(static_cast<size_t>(n), 0);
  std::vector<int> col_owner(static_cast<size_t>(n) + 1, 0);
  for (int r = 1; r <= n; ++r) {
    const auto& row = rows[r - 1];
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix row " + std::to_string(r) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(n));
    int found = 0;
    for (int c = 1; c <= n; ++c) {
      if (row[c - 1] != 1) continue;
      if (found)
        throw std::invalid_argument("matrix row " + std::to_string(r) +
                                    " has more than one 1 (columns " +
                                    std::to_string(found) + " and " + std::to_string(c) + ")");
      found = c;
    }
    if (!found)
      throw std::invalid_argument("matrix row " + std::to_string(r) + " has no 1");
    if (col_owner[found])
      throw std::invalid_argument("matrix column " + std::to_string(found) +
                                  " has more than one 1 (rows " +
                                  std::to_string(col_owner[found]) + " and " +
                                  std::to_string(r) + ")");
    col_owner[found] = r;
    one_line[r - 1] = found;
  }
  return Permutation::from_one_line(std::move(one_line));
}

FactorizationDocument make_document(const Permutation& p, const Factorization& f,
                                    std::optional<GeneratorMeta> generator) {
  FactorizationDocument d;
  d.n = f.n;
  d.flavor = f.flavor;
  d.w = f.flavor == Flavor::finite ? bandwidth(p) : cyclic_bandwidth(p);
  for (const Layer& l : f.layers)
    if (!l.factor.indices().empty()) d.mset.push_back(l.diagonal);
  d.factorization = f;
  d.generator = std::move(generator);
  return d;
}

std::string to_text(const Factorization& f) {
  std::string out;
  for (const Layer& l : f.layers) {
    out += "k=" + std::to_string(l.diagonal) + ":";
    for (int idx : l.factor.indices()) out += " s" + std::to_string(idx);
    out += "\n";
  }
  if (f.flavor == Flavor::cyclic)
    out += "shift: " + std::to_string(f.shift_exponent) + "\n";
  return out;
}

std::string to_json(const FactorizationDocument& d) {
  nlohmann::json j;
  j["convention"] = "apply-left-first";
  j["n"] = d.n;
  j["flavor"] = to_string(d.flavor);
  j["w"] = d.w;
  j["mset"] = d.mset;
  nlohmann::json layers = nlohmann::json::array();
  for (const Layer& l : d.factorization.layers) {
    nlohmann::json layer;
    layer["diagonal"] = l.diagonal;
    layer["indices"] = l.factor.indices();
    layers.push_back(std::move(layer));
  }
  j["layers"] = std::move(layers);
  j["shift_exponent"] = d.factorization.shift_exponent;
  if (d.generator) {
    nlohmann::json meta;
    meta["prng"] = d.generator->prng;
    meta["seed"] = d.generator->seed;
    j["generator"] = std::move(meta);
  }
  return j.dump(2) + "\n";
}

FactorizationDocument document_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  try {
    FactorizationDocument d;
    d.n = j.at("n").get<int>();
    d.flavor = flavor_from_string(j.at("flavor").get<std::string>());
    d.w = j.at("w").get<int>();
    d.mset = j.at("mset").get<std::vector<int>>();
    if (j.at("convention").get<std::string>() != "apply-left-first")
      throw std::invalid_argument("unsupported composition convention '" +
                                  j.at("convention").get<std::string>() + "'");
    d.factorization.n = d.n;
    d.factorization.flavor = d.flavor;
    d.factorization.shift_exponent = j.at("shift_exponent").get<int>();
    int prev_diagonal = 0;
    bool first = true;
    for (const auto& layer : j.at("layers")) {
      const int diagonal = layer.at("diagonal").get<int>();
      if (!first && diagonal <= prev_diagonal)
        throw std::invalid_argument("layer diagonals must be strictly ascending");
      first = false;
      prev_diagonal = diagonal;
      d.factorization.layers.push_back(
          Layer{diagonal, Bandwidth1Factor(d.n, d.flavor,
                                           layer.at("indices").get<std::vector<int>>())});
    }
    if (d.flavor == Flavor::finite && d.factorization.shift_exponent != 0)
      throw std::invalid_argument("finite factorizations cannot carry a shift");
    if (auto it = j.find("generator"); it != j.end()) {
      GeneratorMeta meta;
      meta.prng = it->at("prng").get<std::string>();
      meta.seed = it->at("seed").get<std::uint64_t>();
      d.generator = std::move(meta);
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed factorization document: ") + e.what());
  }
}

}  // namespace permband
