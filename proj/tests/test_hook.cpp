#include <stdexcept>

#include "doctest.h"
#include "permband/hook.hpp"
#include "test_util.hpp"

using namespace permband;
using test::all_permutations;
using test::naive_inversions;

namespace {

Permutation P(std::vector<int> v) { return Permutation::from_one_line(std::move(v)); }

const Permutation kFig2 = P({5, 4, 7, 1, 9, 2, 3, 10, 8, 6});

std::vector<std::pair<int, std::vector<int>>> layer_indices(const Factorization& f) {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (const Layer& l : f.layers) out.emplace_back(l.diagonal, l.factor.indices());
  return out;
}

}  // namespace

TEST_CASE("hook diagram structure") {
  const HookDiagram d = build_hook_diagram(kFig2);
  std::vector<int> keys;
  for (const auto& [k, crossings] : d.diagonals()) {
    keys.push_back(k);
    for (size_t t = 1; t < crossings.size(); ++t)
      CHECK(crossings[t - 1].row < crossings[t].row);
  }
  CHECK(keys == std::vector<int>{-3, -2, -1, 0, 1, 2, 3});
  CHECK(d.crossing_count() == 18);

  CHECK(build_hook_diagram(Permutation::identity(8)).diagonals().empty());

  const HookDiagram small = build_hook_diagram(P({2, 3, 1}));
  REQUIRE(small.diagonals().size() == 2);
  CHECK(small.diagonals()[0].first == -1);
  const Crossing& a = small.diagonals()[0].second.at(0);
  CHECK(a.i == 2);
  CHECK(a.j == 3);
  CHECK(a.row == 2);
  CHECK(a.col == 1);
  CHECK(small.diagonals()[1].first == 0);
  const Crossing& b = small.diagonals()[1].second.at(0);
  CHECK(b.i == 1);
  CHECK(b.j == 3);
  CHECK(b.row == 1);
  CHECK(b.col == 1);
}

TEST_CASE("hook diagram keys equal mset, crossings equal inversions") {
  auto check_one = [](const Permutation& p) {
    const HookDiagram d = build_hook_diagram(p);
    std::vector<int> keys;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [k, crossings] : d.diagonals()) {
      keys.push_back(k);
      CHECK(!crossings.empty());
      for (const Crossing& c : crossings) {
        CHECK(c.col == p(c.j));
        CHECK(c.row == c.i);
        CHECK(c.diagonal == c.col - c.row);
        pairs.emplace_back(c.i, c.j);
      }
    }
    CHECK(keys == mset(p));
    std::sort(pairs.begin(), pairs.end());
    CHECK(pairs == naive_inversions(p));
    CHECK(d.crossing_count() == static_cast<int>(pairs.size()));
  };
  for (int n = 0; n <= 6; ++n)
    for (const Permutation& p : all_permutations(n)) check_one(p);
  for (std::uint64_t seed = 0; seed < 25; ++seed)
    check_one(random_banded({80, 5, seed, Flavor::finite}));
}

TEST_CASE("crossing index closed form") {
  Crossing c;
  c.i = 1;
  c.j = 2;
  c.row = 1;
  c.col = 1;
  c.diagonal = 0;
  CHECK(crossing_index(P({2, 1}), c) == 1);

  Crossing f2a{9, 10, 9, 6, -3, 0};
  CHECK(crossing_index(kFig2, f2a) == 9);
  Crossing f2b{5, 6, 5, 2, -3, 0};
  CHECK(crossing_index(kFig2, f2b) == 5);

  Crossing bad{1, 2, 1, 2, 1, 0};  // not an inversion point of 21
  CHECK_THROWS_AS(crossing_index(P({2, 1}), bad), std::invalid_argument);
  Crossing not_inv{1, 2, 1, 2, 1, 0};
  CHECK_THROWS_AS(crossing_index(P({1, 2}), not_inv), std::invalid_argument);
}

TEST_CASE("hook factorization examples") {
  CHECK(layer_indices(hook_factor(P({2, 3, 1}))) ==
        std::vector<std::pair<int, std::vector<int>>>{{-1, {2}}, {0, {1}}});
  CHECK(layer_indices(hook_factor(P({3, 2, 1}))) ==
        std::vector<std::pair<int, std::vector<int>>>{{-1, {2}}, {0, {1}}, {1, {2}}});
  CHECK(layer_indices(hook_factor(kFig2)) ==
        std::vector<std::pair<int, std::vector<int>>>{{-3, {5, 9}},
                                                      {-2, {3, 6, 8}},
                                                      {-1, {2, 4}},
                                                      {0, {1, 3, 5, 9}},
                                                      {1, {2, 4, 7}},
                                                      {2, {3}},
                                                      {3, {4, 6, 8}}});
  CHECK(hook_factor(Permutation::identity(6)).layers.empty());
  CHECK(hook_factor(Permutation::identity(0)).layers.empty());
}

TEST_CASE("simulation agrees with the closed form and stays reduced") {
  for (int n = 0; n <= 7; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      HookDiagram d = build_hook_diagram(p);
      Factorization f;
      REQUIRE_NOTHROW(f = hook_factor(d));
      for (const auto& [k, crossings] : d.diagonals()) {
        (void)k;
        for (const Crossing& c : crossings)
          CHECK(c.transposition_index == crossing_index(p, c));
      }
      CHECK(verify_factorization(p, f));
      CHECK(static_cast<int>(f.layers.size()) ==
            static_cast<int>(mset(p).size()));
      const Word word = to_word(f);
      CHECK(word.letters.size() == naive_inversions(p).size());
      CHECK(apply_word(word) == p);
      for (const Layer& l : f.layers)
        for (size_t t = 1; t < l.factor.indices().size(); ++t)
          CHECK(l.factor.indices()[t] - l.factor.indices()[t - 1] >= 2);
    }
  }
}

TEST_CASE("random banded instances recompose") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int w = 1 + static_cast<int>(seed % 8);
    const Permutation p = random_banded({200, w, seed, Flavor::finite});
    const Factorization f = hook_factor(p);
    CHECK(verify_factorization(p, f));
    CHECK(static_cast<int>(f.layers.size()) <= 2 * w - 1);
  }
}

TEST_CASE("incremental counter recurrence") {
  SplitMix64 rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    const Permutation p = test::random_perm(25, rng);
    const Permutation pinv = inverse(p);
    const int n = p.size();
    auto s = [&](int i, int j) {  // #{ t < i : pi_t < j }
      int count = 0;
      for (int t = 1; t < i; ++t)
        if (p(t) < j) ++count;
      return count;
    };
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        CHECK(s(i, j + 1) == s(i, j) + (pinv(j) < i ? 1 : 0));
  }
}

TEST_CASE("strang bound record") {
  CHECK(check_strang_bound(kFig2) == StrangBound{4, 7, true});
  CHECK(check_strang_bound(P({3, 4, 1, 2})) == StrangBound{2, 3, true});
  CHECK(check_strang_bound(Permutation::identity(9)) == StrangBound{0, 0, true});
}

TEST_CASE("to_word") {
  CHECK(to_word(hook_factor(P({3, 2, 1}))).letters == std::vector<int>{2, 1, 2});
  CHECK(to_word(hook_factor(Permutation::identity(4))).letters.empty());
  CHECK(to_word(hook_factor(P({2, 3, 1}))).letters == std::vector<int>{2, 1});
  Factorization cyclic;
  cyclic.n = 3;
  cyclic.flavor = Flavor::cyclic;
  CHECK_THROWS_AS(to_word(cyclic), std::invalid_argument);
}

TEST_CASE("verify_factorization") {
  const Permutation p = P({2, 1});
  Factorization ok;
  ok.n = 2;
  ok.layers.push_back(Layer{0, Bandwidth1Factor(2, Flavor::finite, {1})});
  CHECK(verify_factorization(p, ok));
  Factorization empty;
  empty.n = 2;
  CHECK_FALSE(verify_factorization(p, empty));
  CHECK_FALSE(verify_factorization(Permutation::identity(3), ok));
}

TEST_CASE("padding emits the full diagonal range") {
  const Permutation p = P({2, 3, 1});  // w = 2, mset {-1, 0}
  const Factorization f = hook_factor(p, true);
  REQUIRE(f.layers.size() == 3);
  CHECK(f.layers[0].diagonal == -1);
  CHECK(f.layers[1].diagonal == 0);
  CHECK(f.layers[2].diagonal == 1);
  CHECK(f.layers[2].factor.indices().empty());
  CHECK(f.nonempty_layer_count() == 2);
  CHECK(verify_factorization(p, f));
  CHECK(hook_factor(Permutation::identity(5), true).layers.empty());

  const Factorization f2 = hook_factor(kFig2, true);
  CHECK(f2.layers.size() == 7);
  CHECK(verify_factorization(kFig2, f2));
}
