#include "permband/factorization.hpp"

#include <stdexcept>
#include <utility>

namespace permband {

int Factorization::nonempty_layer_count() const {
  int count = 0;
  for (const Layer& l : layers)
    if (!l.factor.indices().empty()) ++count;
  return count;
}

Permutation recompose(const Factorization& f) {
  Permutation acc = Permutation::identity(f.n);
  for (const Layer& layer : f.layers)
    acc = compose(acc, layer.factor.as_permutation());
  if (f.flavor == Flavor::cyclic && f.n > 0)
    acc = compose(acc, cyclic_shift(f.n, f.shift_exponent));
  return acc;
}

bool verify_factorization(const Permutation& p, const Factorization& f) {
  if (p.size() != f.n) return false;
  if (f.flavor == Flavor::finite && f.shift_exponent != 0) return false;
  for (const Layer& layer : f.layers)
    if (layer.factor.size() != f.n || layer.factor.flavor() != f.flavor)
      return false;
  return recompose(f) == p;
}

void pad_layers(Factorization& f, int w) {
  if (w <= 0) {
    if (!f.layers.empty()) throw std::logic_error("pad_layers: layers on a band-0 permutation");
    return;
  }
  std::vector<Layer> out;
  out.reserve(static_cast<size_t>(2 * w - 1));
  auto it = f.layers.begin();
  for (int k = -w + 1; k <= w - 1; ++k) {
    if (it != f.layers.end() && it->diagonal == k) {
      out.push_back(std::move(*it));
      ++it;
    } else {
      out.push_back(Layer{k, Bandwidth1Factor(f.n, f.flavor, {})});
    }
  }
  if (it != f.layers.end())
    throw std::logic_error("pad_layers: diagonal " + std::to_string(it->diagonal) +
                           " outside band range");
  f.layers = std::move(out);
}

}  // namespace permband
