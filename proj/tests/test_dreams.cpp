#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "pipedreams/core.hpp"
#include "pipedreams/dreams.hpp"
#include "pipedreams/shifts.hpp"

using namespace pipedreams;

namespace {

const PartialPermutation kFigure(4, {{1, 2}, {3, 4}});
const Label A = letter(1);
const Label B = letter(2);

std::multiset<Partition> lambda_multiset(const std::vector<PipeDream>& dreams) {
  std::multiset<Partition> out;
  for (const auto& p : dreams) out.insert(p.lambda());
  return out;
}

}  // namespace

TEST_CASE("tile classification") {
  // crossing over a vertical zero word
  auto cross = make_tile(kOne, {}, kOne, {});
  REQUIRE(cross);
  CHECK(cross->kind == TileKind::Crossing);
  // a vertical word containing 1 admits only horizontal 0s
  CHECK(!make_tile(A, {kOne}, A, {kOne}));
  CHECK(make_tile(kZero, {kOne}, kZero, {kOne}));
  // horizontal 1 may cross a lettered word
  CHECK(make_tile(kOne, {A}, kOne, {A}));
  // dot, fusor, displacer, equivariant
  auto dot = make_tile(A, {A}, kZero, {});
  REQUIRE(dot);
  CHECK(dot->kind == TileKind::Dot);
  auto fus = make_tile(kZero, {}, kOne, {A, kOne});
  REQUIRE(fus);
  CHECK(fus->kind == TileKind::Fusor);
  CHECK(fus->fused_count == 1);
  auto disp = make_tile(kOne, {A, kOne}, A, {A});
  REQUIRE(disp);
  CHECK(disp->kind == TileKind::Displacer);
  auto eq = make_tile(kZero, {}, kZero, {});
  REQUIRE(eq);
  CHECK(eq->kind == TileKind::Equivariant);
  // malformed words
  CHECK(!valid_word({kOne, A}));   // 1 must be last
  CHECK(!valid_word({A, A}));      // repeats
  CHECK(!valid_word({kZero}));     // 0 not allowed inside a word
}

TEST_CASE("initial slice boundary labels") {
  Slice s = initial_slice(kFigure);
  CHECK(s.south_boundary == std::vector<Label>{kOne, A, kOne, B});
  CHECK(s.east_boundary == std::vector<Label>{A, kZero, B, kZero});

  Slice empty = initial_slice(PartialPermutation::empty(3));
  CHECK(empty.south_boundary == std::vector<Label>(3, kOne));
  CHECK(empty.east_boundary == std::vector<Label>(3, kZero));

  Slice id = initial_slice(PartialPermutation::identity(3));
  CHECK(id.south_boundary == std::vector<Label>{A, B, letter(3)});
  CHECK(id.east_boundary == std::vector<Label>{A, B, letter(3)});
}

TEST_CASE("initial slices are viable with permutation f") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : all_partial_permutations(n)) {
      Slice s = initial_slice(f);
      REQUIRE(viable(s));
      CHECK(slice_permutation(s).perm == f);
    }
}

TEST_CASE("non-viable slices") {
  // a vertical letter occurrence with no horizontal partner
  Slice s = initial_slice(kFigure);
  s.h[1] = kOne;  // overwrite the horizontal A
  CHECK(!viable(s));
  CHECK_THROWS(slice_permutation(s));

  // horizontal partner northeast of the vertical one: f with dot (1,2)
  // has its A on east row 1; moving the horizontal A east of column 4
  // cannot happen, so instead put the vertical A below the horizontal one.
  PartialPermutation g(3, {{2, 3}});
  Slice t = initial_slice(g);
  // vertical A sits on row 2; hoist the horizontal A from column 3 to
  // column 1 where it meets no ray from row 2
  t.h[2] = kOne;
  t.h[0] = A;
  CHECK(!viable(t));
}

TEST_CASE("unique fills leave the slice permutation unchanged") {
  Slice s = initial_slice(kFigure);
  while (!s.terminal()) {
    auto adms = admitted_tiles(s, TheoryMode::KT);
    REQUIRE(!adms.empty());
    if (adms.size() > 1) break;
    auto before = slice_permutation(s).perm;
    auto after = slice_permutation(adms[0].next).perm;
    CHECK(before == after);
    s = adms[0].next;
  }
  CHECK(s.i == 2);  // the figure example branches at (2,4)
  CHECK(s.j == 4);
}

TEST_CASE("branch admissions at the figure kink") {
  Slice s = initial_slice(kFigure);
  while (!s.terminal()) {
    auto adms = admitted_tiles(s, TheoryMode::KT);
    if (adms.size() > 1) {
      // equivariant first, then fusor sublists of C = (A, 1) in
      // lexicographic index order: (A), (A 1), (1)
      REQUIRE(adms.size() == 4);
      CHECK(adms[0].tile.kind == TileKind::Equivariant);
      CHECK(adms[1].tile.west == Word{A});
      CHECK(adms[2].tile.west == Word{A, kOne});
      CHECK(adms[3].tile.west == Word{kOne});
      CHECK(branch_letter_list(s) == std::vector<Label>{A, kOne});
      return;
    }
    s = adms[0].next;
  }
  FAIL("no branch found");
}

TEST_CASE("figure enumeration counts and partitions") {
  auto ht = enumerate_dreams(kFigure, TheoryMode::HT);
  REQUIRE(ht.size() == 4);
  CHECK(lambda_multiset(ht) ==
        std::multiset<Partition>{Partition{2}, Partition{1, 1},
                                 Partition{2, 1}, Partition{2, 1}});
  auto kt = enumerate_dreams(kFigure, TheoryMode::KT);
  CHECK(kt.size() == 6);
  auto k = enumerate_dreams(kFigure, TheoryMode::K);
  REQUIRE(k.size() == 3);
  CHECK(lambda_multiset(k) ==
        std::multiset<Partition>{Partition{2}, Partition{1, 1}, Partition{1}});
  auto h = enumerate_dreams(kFigure, TheoryMode::H);
  CHECK(h.size() == 2);
}

TEST_CASE("degenerate enumerations") {
  // k = 0: a single forced dream
  for (int n = 1; n <= 4; ++n) {
    auto dreams =
        enumerate_dreams(PartialPermutation::identity(n), TheoryMode::KT);
    REQUIRE(dreams.size() == 1);
    CHECK(dreams[0].lambda() == Partition{});
  }
  // whole Grassmannian, n = 2, k = 2
  auto dreams =
      enumerate_dreams(PartialPermutation::empty(2), TheoryMode::KT);
  REQUIRE(dreams.size() == 1);
  CHECK(dreams[0].lambda() == Partition{});
  for (int j = 1; j <= 2; ++j)
    CHECK(dreams[0].tile(1, j).kind == TileKind::Crossing);
}

TEST_CASE("lambda reading of the north boundary") {
  auto kt = enumerate_dreams(kFigure, TheoryMode::KT);
  for (const auto& p : kt) {
    if (p.north_labels() == std::vector<Label>{kOne, kZero, kZero, kOne})
      CHECK(p.lambda() == Partition{2});
    if (p.north_labels() == std::vector<Label>{kZero, kOne, kOne, kZero})
      CHECK(p.lambda() == Partition{1, 1});
    if (p.north_labels() == std::vector<Label>{kOne, kZero, kOne, kZero})
      CHECK(p.lambda() == Partition{2, 1});
  }
}

TEST_CASE("enumeration is deterministic and the parallel variant agrees") {
  for (const auto& f : all_partial_permutations(3)) {
    for (auto mode : {TheoryMode::H, TheoryMode::HT, TheoryMode::K,
                      TheoryMode::KT}) {
      auto a = enumerate_dreams(f, mode);
      auto b = enumerate_dreams(f, mode);
      auto c = enumerate_dreams_parallel(f, mode);
      CHECK(a == b);
      CHECK(a == c);
    }
  }
  auto a = enumerate_dreams(kFigure, TheoryMode::KT);
  auto c = enumerate_dreams_parallel(kFigure, TheoryMode::KT);
  CHECK(a == c);
}

TEST_CASE("all enumerated dreams validate") {
  for (const auto& f : all_partial_permutations(4)) {
    for (const auto& p : enumerate_dreams(f, TheoryMode::KT)) {
      CHECK_NOTHROW(p.validate());
      CHECK(p.f() == f);
    }
  }
}

TEST_CASE("terminal slice permutation names the opposite Schubert variety") {
  for (const auto& f : all_partial_permutations(4)) {
    Slice s = initial_slice(f);
    // walk every path, checking the terminal g against lambda
    std::function<void(const Slice&)> walk = [&](const Slice& cur) {
      if (cur.terminal()) {
        auto g = slice_permutation(cur).perm;
        auto lam = opposite_schubert_partition(g);
        REQUIRE(lam.has_value());
        Partition from_north;
        {
          std::vector<int> parts;
          for (int p = 0; p < cur.n; ++p) {
            if (cur.h[p] != kOne) continue;
            int zeros = 0;
            for (int q = p + 1; q < cur.n; ++q)
              if (cur.h[q] == kZero) ++zeros;
            parts.push_back(zeros);
          }
          from_north = Partition(parts);
        }
        CHECK(*lam == from_north);
        return;
      }
      for (const auto& adm : admitted_tiles(cur, TheoryMode::KT))
        walk(adm.next);
    };
    walk(s);
  }
}

TEST_CASE("jordan curve law for all curve pairs") {
  for (const auto& f : all_partial_permutations(4)) {
    for (const auto& p : enumerate_dreams(f, TheoryMode::KT)) {
      CurveData data = trace_curves(p);
      std::map<std::pair<int, int>, int> count;
      for (auto [a, b] : data.crossings) {
        auto key = std::minmax(a, b);
        ++count[{key.first, key.second}];
      }
      for (size_t a = 0; a < data.curves.size(); ++a)
        for (size_t b = a + 1; b < data.curves.size(); ++b) {
          int crossings = 0;
          auto it = count.find({static_cast<int>(a), static_cast<int>(b)});
          if (it != count.end()) crossings = it->second;
          bool interleave = endpoints_interleave(
              data.curves[a], data.curves[b], p.n());
          CHECK(crossings == (interleave ? 1 : 0));
        }
    }
  }
}

TEST_CASE("oracle equals enumeration on the figure example") {
  for (auto mode : {TheoryMode::HT, TheoryMode::KT}) {
    std::multiset<std::string> a, b;
    for (const auto& p : enumerate_dreams(kFigure, mode)) a.insert(p.key());
    for (const auto& p : brute_force_enumerate(kFigure, mode))
      b.insert(p.key());
    CHECK(a == b);
  }
}

TEST_CASE("oracle refuses large inputs") {
  CHECK_THROWS_AS(brute_force_enumerate(PartialPermutation::empty(6),
                                        TheoryMode::H),
                  std::length_error);
}

TEST_CASE("all-zero west edges law with the west rule disabled") {
  // Over tilings satisfying everything but the west-edge rule, the west
  // edges end up all zero exactly when the letter counts on the south and
  // east boundaries agree.
  OracleOptions opts;
  opts.enforce_west_zero = false;

  // balanced boundary: one letter on each side
  {
    std::vector<Label> south{kOne, A}, east{A, kZero};
    for (const auto& p : brute_force_tilings(2, south, east, TheoryMode::KT,
                                             opts)) {
      bool all_zero = true;
      for (int i = 1; i <= 2; ++i)
        if (!p.tile(i, i).west.empty()) all_zero = false;
      CHECK(all_zero);
    }
  }
  // unbalanced: a letter on the south side only
  {
    std::vector<Label> south{kOne, A}, east{kZero, kZero};
    auto tilings =
        brute_force_tilings(2, south, east, TheoryMode::KT, opts);
    for (const auto& p : tilings) {
      bool all_zero = true;
      for (int i = 1; i <= 2; ++i)
        if (!p.tile(i, i).west.empty()) all_zero = false;
      CHECK(!all_zero);
    }
  }
}

TEST_CASE("dream json and ascii renderings exist for every dream") {
  for (const auto& p : enumerate_dreams(kFigure, TheoryMode::KT)) {
    CHECK(!p.key().empty());
    CHECK(p.equivariant_tile_count() ==
          static_cast<int>(p.equivariant_positions().size()));
  }
}
