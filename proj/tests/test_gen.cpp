#include <set>
#include <stdexcept>

#include "doctest.h"
#include "permband/cyclic.hpp"
#include "permband/gen.hpp"
#include "test_util.hpp"

using namespace permband;
using test::all_permutations;

TEST_CASE("band constraint holds across the grid") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int n = 4 + static_cast<int>(seed % 61);
    const int w = static_cast<int>(seed % 9);
    const Permutation p = random_banded({n, w, seed, Flavor::finite});
    CHECK(p.size() == n);
    CHECK(bandwidth(p) <= w);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 40);
    const int w = static_cast<int>(seed % (n / 2 + 1));
    const Permutation p = random_banded({n, w, seed, Flavor::cyclic});
    CHECK(cyclic_bandwidth(p) <= w);
  }
}

TEST_CASE("determinism") {
  const GenConfig cfg{20, 3, 12345, Flavor::finite};
  CHECK(random_banded(cfg) == random_banded(cfg));
  const GenConfig cyc{17, 4, 999, Flavor::cyclic};
  CHECK(random_banded(cyc) == random_banded(cyc));
  // Different seeds should not all collide.
  std::set<std::vector<int>> seen;
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    seen.insert(random_banded({20, 3, seed, Flavor::finite}).one_line());
  CHECK(seen.size() > 1);
}

TEST_CASE("degenerate bands") {
  CHECK(random_banded({5, 0, 77, Flavor::finite}).is_identity());
  CHECK(random_banded({5, 0, 77, Flavor::cyclic}).is_identity());
  CHECK(random_banded({0, 0, 1, Flavor::finite}).size() == 0);
  const Permutation p = random_banded({6, 9, 3, Flavor::finite});  // w >= n-1
  CHECK(bandwidth(p) <= 5);
  CHECK_THROWS_AS(random_banded({4, 3, 0, Flavor::cyclic}), std::invalid_argument);
  CHECK_THROWS_AS(random_banded({4, -1, 0, Flavor::finite}), std::invalid_argument);
}

TEST_CASE("support covers every banded permutation") {
  for (int n = 5; n <= 6; ++n) {
    std::set<std::vector<int>> want;
    for (const Permutation& p : all_permutations(n))
      if (bandwidth(p) <= 2) want.insert(p.one_line());
    std::set<std::vector<int>> seen;
    std::uint64_t seed = 0;
    while (seen.size() < want.size() && seed < 400000) {
      seen.insert(random_banded({n, 2, seed, Flavor::finite}).one_line());
      ++seed;
    }
    CHECK(seen == want);
  }
}

TEST_CASE("splitmix64 sequence is pinned") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  SplitMix64 rng2(42);
  CHECK(rng2.next() == 0xBDD732262FEB6E95ULL);
}
