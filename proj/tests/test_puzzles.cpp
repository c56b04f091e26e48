#include <doctest.h>

#include <functional>
#include <vector>

#include "pipedreams/classes.hpp"
#include "pipedreams/core.hpp"
#include "pipedreams/dreams.hpp"
#include "pipedreams/puzzles.hpp"

using namespace pipedreams;

namespace {

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> parts(rows, 0);
  std::function<void(int, int)> gen = [&](int row, int maxp) {
    if (row == rows) {
      out.push_back(Partition(std::vector<int>(parts)));
      return;
    }
    for (int v = 0; v <= maxp; ++v) {
      parts[row] = v;
      gen(row + 1, v);
    }
  };
  gen(0, cols);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long long puzzle_count(const Partition& lam, const Partition& mu,
                       const Partition& nu, int k, int n) {
  PuzzleBoundary b;
  b.nw = partition_to_string(lam, k, n);
  b.ne = partition_to_string(mu, k, n);
  b.s = partition_to_string(nu, k, n);
  return static_cast<long long>(enumerate_puzzles(b, false).size());
}

}  // namespace

TEST_CASE("partition string encoding round trips") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& lam : partitions_in_box(k, n - k)) {
        auto s = partition_to_string(lam, k, n);
        int ones = 0;
        for (int x : s) ones += x;
        CHECK(ones == k);
        CHECK(string_to_partition(s) == lam);
      }
}

TEST_CASE("littlewood-richardson basics") {
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}, 2, 4) == 1);
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{1, 1}, 2, 4) == 1);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{}, Partition{2, 1}, 2, 4) ==
        1);
  // degree mismatch
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2, 1}, 2, 4) ==
        0);
  // the first multiplicity-2 case lives in a 3x3 box
  CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1},
                       3, 6) == 2);
}

TEST_CASE("puzzle counts: identity and unit cases") {
  // k = 0: empty boundary strings, exactly one (all-0) puzzle of weight 1
  for (int n = 1; n <= 3; ++n) {
    auto puzzles = enumerate_puzzles(
        {std::vector<int>(n, 0), std::vector<int>(n, 0),
         std::vector<int>(n, 0)},
        true);
    REQUIRE(puzzles.size() == 1);
    CHECK(puzzles[0].second == SparsePoly::constant(n, 1));
  }
  // nu = lambda, mu = empty: one puzzle
  CHECK(puzzle_count(Partition{2, 1}, Partition{}, Partition{2, 1}, 2, 4) ==
        1);
  // the two Gr_2(4) products from the spec of the puzzle module
  CHECK(puzzle_count(Partition{1}, Partition{1}, Partition{2}, 2, 4) == 1);
  CHECK(puzzle_count(Partition{1}, Partition{1}, Partition{1, 1}, 2, 4) == 1);
}

TEST_CASE("nonequivariant puzzle counts equal LR numbers") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      auto box = partitions_in_box(k, n - k);
      for (const auto& lam : box)
        for (const auto& mu : box)
          for (const auto& nu : box)
            CHECK(puzzle_count(lam, mu, nu, k, n) ==
                  lr_coefficient(lam, mu, nu, k, n));
    }
}

TEST_CASE("rotational symmetry of nonequivariant counts") {
  // count(a, b, c) = count(reverse c, a, reverse b); fails equivariantly.
  auto reversed = [](std::vector<int> v) {
    std::reverse(v.begin(), v.end());
    return v;
  };
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      auto box = partitions_in_box(k, n - k);
      for (const auto& lam : box)
        for (const auto& mu : box)
          for (const auto& nu : box) {
            PuzzleBoundary b;
            b.nw = partition_to_string(lam, k, n);
            b.ne = partition_to_string(mu, k, n);
            b.s = partition_to_string(nu, k, n);
            PuzzleBoundary rot;
            rot.nw = reversed(b.s);
            rot.ne = b.nw;
            rot.s = reversed(b.ne);
            CHECK(enumerate_puzzles(b, false).size() ==
                  enumerate_puzzles(rot, false).size());
          }
    }
  // the partition-level statement: c_{lam,mu}^{nu*} = c_{mu,nu}^{lam*}
  const int n = 4, k = 2;
  auto box = partitions_in_box(k, n - k);
  for (const auto& lam : box)
    for (const auto& mu : box)
      for (const auto& nu : box)
        CHECK(puzzle_count(lam, mu, nu.complement_in_box(k, n - k), k, n) ==
              puzzle_count(mu, nu, lam.complement_in_box(k, n - k), k, n));
}

TEST_CASE("equivariant puzzle weights match the dream weights") {
  PartialPermutation f(4, {{1, 2}, {3, 4}});
  for (const PipeDream& p : enumerate_dreams(f, TheoryMode::HT)) {
    Puzzle z = dream_to_puzzle(p);
    CHECK(puzzle_weight(z) == wt_H(p));
  }
}

TEST_CASE("dream to puzzle rejects K-tiles") {
  PartialPermutation f(4, {{1, 2}, {3, 4}});
  for (const PipeDream& p : enumerate_dreams(f, TheoryMode::KT))
    if (p.has_k_tiles()) {
      CHECK_THROWS(dream_to_puzzle(p));
      return;
    }
  FAIL("no K dream found");
}

TEST_CASE("round trip through puzzles is the identity") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : all_partial_permutations(n)) {
      if (!richardson_envelope(extend_to_juggling(f)).is_exact) continue;
      for (const PipeDream& p : enumerate_dreams(f, TheoryMode::HT)) {
        Puzzle z = dream_to_puzzle(p);
        PipeDream back = puzzle_to_dream(z);
        CHECK(back == p);
      }
    }
}

TEST_CASE("puzzle boundary strings of a converted dream") {
  // lambda on the north/NW side; mu, nu read off the east and south Rs.
  PartialPermutation f(4, {{1, 2}, {3, 4}});
  auto env = richardson_envelope(extend_to_juggling(f));
  for (const PipeDream& p : enumerate_dreams(f, TheoryMode::H)) {
    Puzzle z = dream_to_puzzle(p);
    std::vector<int> nw(4), ne(4), s(4);
    for (int i = 1; i <= 4; ++i) {
      nw[4 - i] = z.up[i - 1][0].l == P1 ? 1 : 0;
      ne[i - 1] = z.up[i - 1][i - 1].r == P1 ? 1 : 0;
    }
    for (int pp = 1; pp <= 4; ++pp) s[pp - 1] = z.up[3][pp - 1].b == P1;
    CHECK(string_to_partition(nw) == p.lambda());
    CHECK(string_to_partition(ne) == env.mu);
    CHECK(string_to_partition(s) == env.nu);
  }
}
