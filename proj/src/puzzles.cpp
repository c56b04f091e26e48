#include "pipedreams/puzzles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

namespace pipedreams {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

// Vertical-edge label rotation of the bijection: R -> 1 -> 0 -> R going
// from the dream to the puzzle, so the R-free puzzle boundary receives the
// 1-free east edges; horizontal labels are carried over unchanged (R as a
// dream label is the single folded letter).
int puzzle_to_dream_vertical(int v) {
  switch (v) {
    case P0: return letter(1);
    case P1: return kZero;
    case PR: return kOne;
  }
  fail("bad vertical label");
}

int dream_to_puzzle_vertical(Label l) {
  if (l == letter(1)) return P0;
  if (l == kZero) return P1;
  if (l == kOne) return PR;
  fail("bad dream label");
}

int puzzle_to_dream_horizontal(int v) {
  switch (v) {
    case P0: return kZero;
    case P1: return kOne;
    case PR: return letter(1);
  }
  fail("bad horizontal label");
}

int dream_to_puzzle_horizontal(Label l) {
  if (l == kZero) return P0;
  if (l == kOne) return P1;
  if (l == letter(1)) return PR;
  fail("bad dream label");
}

// Piece catalogue: every triangle must be one of these.  Derived from the
// ten admissible one-letter tiles through the shear; the equivariant
// rhombus glues along the PEQ diagonal.
constexpr std::array<Puzzle::Up, 6> kUpPieces = {{
    {P0, P0, P0},
    {PR, P1, P0},
    {P0, PR, P1},
    {P1, P1, P1},
    {P1, P0, PR},
    {P0, P1, PEQ},
}};
constexpr std::array<Puzzle::Down, 6> kDownPieces = {{
    {P0, P0, P0},
    {P0, P1, PR},
    {P1, PR, P0},
    {P1, P1, P1},
    {PR, P0, P1},
    {PEQ, P1, P0},
}};

bool up_ok(const Puzzle::Up& u) {
  return std::find(kUpPieces.begin(), kUpPieces.end(), u) != kUpPieces.end();
}
bool down_ok(const Puzzle::Down& d) {
  return std::find(kDownPieces.begin(), kDownPieces.end(), d) !=
         kDownPieces.end();
}

}  // namespace

std::vector<int> partition_to_string(const Partition& lambda, int k, int n) {
  if (!lambda.fits_in_box(k, n - k)) fail("partition does not fit the box");
  std::vector<int> s(n, 0);
  for (int m = 1; m <= k; ++m) s[(n - k) - lambda.part(m) + m - 1] = 1;
  return s;
}

Partition string_to_partition(const std::vector<int>& s) {
  std::vector<int> parts;
  const int n = static_cast<int>(s.size());
  for (int p = 0; p < n; ++p) {
    if (s[p] != 1) continue;
    int zeros = 0;
    for (int q = p + 1; q < n; ++q)
      if (s[q] == 0) ++zeros;
    parts.push_back(zeros);
  }
  return Partition(std::move(parts));
}

std::vector<std::pair<Puzzle, SparsePoly>> enumerate_puzzles(
    const PuzzleBoundary& b, bool equivariant) {
  const int n = static_cast<int>(b.nw.size());
  if (static_cast<int>(b.ne.size()) != n || static_cast<int>(b.s.size()) != n)
    fail("boundary sides must have equal length");
  int ones = 0;
  for (int x : b.nw) ones += x;
  for (const auto& side : {b.ne, b.s}) {
    int o = 0;
    for (int x : side) o += x;
    if (o != ones) fail("boundary sides must carry equally many 1s");
  }

  Puzzle z;
  z.n = n;
  z.up.resize(n);
  z.down.resize(n);
  for (int i = 1; i <= n; ++i) {
    z.up[i - 1].resize(i);
    z.down[i - 1].resize(i - 1);
  }

  std::vector<std::pair<Puzzle, SparsePoly>> out;

  // Fill row by row, up triangles left to right; each down triangle is
  // fully determined by its neighbours and only needs a catalogue check.
  std::function<void(int, int)> rec = [&](int i, int p) {
    if (p > i) {
      if (i == n) {
        SparsePoly w = puzzle_weight(z);
        out.emplace_back(z, std::move(w));
        return;
      }
      rec(i + 1, 1);
      return;
    }
    // Pinned edges of up(i,p): left from the NW boundary or the previous
    // down triangle; bottom from the S boundary when i == n.
    for (const Puzzle::Up& u : kUpPieces) {
      if (!equivariant && (u.b == PEQ || u.l == PEQ || u.r == PEQ)) continue;
      if (p == 1) {
        if (u.l != (b.nw[n - i] == 1 ? P1 : P0)) continue;
      }
      if (i == n) {
        if (u.b != (b.s[p - 1] == 1 ? P1 : P0)) continue;
      }
      if (p == i) {
        if (u.r != (b.ne[i - 1] == 1 ? P1 : P0)) continue;
      }
      // The down triangle between up(i,p-1) and up(i,p) becomes determined
      // once this up triangle is chosen.
      if (p > 1) {
        Puzzle::Down d{z.up[i - 2][p - 2].b, z.up[i - 1][p - 2].r, u.l};
        if (!down_ok(d)) continue;
        z.down[i - 1][p - 2] = d;
      }
      z.up[i - 1][p - 1] = u;
      rec(i, p + 1);
    }
  };
  rec(1, 1);
  return out;
}

SparsePoly puzzle_weight(const Puzzle& z) {
  const int n = z.n;
  SparsePoly w = SparsePoly::constant(n, 1);
  for (int i = 1; i < n; ++i)
    for (int p = 1; p <= i; ++p)
      if (z.up[i - 1][p - 1].b == PEQ)
        w = w * y_minus_y(n, p, n - i + p);
  return w;
}

namespace {

// A one-letter view of a dream tile: folds every letter to the single
// letter R; rejects K-tiles.
struct FoldedTile {
  Label south, north, east, west;
};

FoldedTile fold_tile(const Tile& t) {
  if (t.kind == TileKind::Displacer || t.fused_count > 0)
    fail("dream uses K-tiles");
  auto fold = [](Label l) { return is_letter(l) ? letter(1) : l; };
  auto fold_word = [&](const Word& w) {
    if (w.empty()) return kZero;
    if (w.size() > 1) fail("dream uses K-tiles");
    return fold(w[0]);
  };
  return {fold(t.south), fold(t.north), fold_word(t.east), fold_word(t.west)};
}

}  // namespace

Puzzle dream_to_puzzle(const PipeDream& p) {
  const int n = p.n();
  // Folding is permitted only when no two lettered pipes cross.
  CurveData curves = trace_curves(p);
  for (auto [a, b] : curves.crossings)
    if (is_letter(curves.curves[a].label) && is_letter(curves.curves[b].label))
      fail("letter pipes cross; the dream does not fold to one letter");

  Puzzle z;
  z.n = n;
  z.up.resize(n);
  z.down.resize(n);
  for (int i = 1; i <= n; ++i) {
    z.up[i - 1].resize(i);
    z.down[i - 1].resize(i - 1);
  }
  // Box (r,c), r < c, maps to the vertical rhombus {up(i,p), down(i+1,p)}
  // with i = n-c+r, p = r: north -> up.l, east -> up.r, south -> down.r,
  // west -> down.l; the diagonal is determined by the (l, r) pair.
  auto diag_of = [](const Puzzle::Up& u) -> int {
    for (const Puzzle::Up& cand : kUpPieces)
      if (cand.l == u.l && cand.r == u.r) return cand.b;
    fail("no catalogue piece for the sheared tile");
  };
  for (int r = 1; r <= n; ++r)
    for (int c = r; c <= n; ++c) {
      FoldedTile t = fold_tile(p.tile(r, c));
      if (r == c) {
        // Diagonal boxes become the bottom row of up triangles; the bottom
        // edge carries 1 exactly where the south boundary does.
        Puzzle::Up u;
        u.l = dream_to_puzzle_horizontal(t.north);
        u.r = dream_to_puzzle_vertical(t.east);
        u.b = t.south == kOne ? P1 : P0;
        if (!up_ok(u)) fail("diagonal box does not map to a puzzle piece");
        z.up[n - 1][r - 1] = u;
        continue;
      }
      const int i = n - c + r, pp = r;
      Puzzle::Up u;
      u.l = dream_to_puzzle_horizontal(t.north);
      u.r = dream_to_puzzle_vertical(t.east);
      u.b = diag_of(u);
      Puzzle::Down d;
      d.t = u.b;
      d.l = dream_to_puzzle_vertical(t.west);
      d.r = dream_to_puzzle_horizontal(t.south);
      if (!up_ok(u) || !down_ok(d)) fail("box does not map to a puzzle piece");
      z.up[i - 1][pp - 1] = u;
      z.down[i][pp - 1] = d;
    }
  return z;
}

PipeDream puzzle_to_dream(const Puzzle& z) {
  const int n = z.n;
  for (int i = 1; i <= n; ++i) {
    for (int p = 1; p <= i; ++p)
      if (!up_ok(z.up[i - 1][p - 1])) fail("unknown up piece");
    for (int p = 1; p < i; ++p)
      if (!down_ok(z.down[i - 1][p - 1])) fail("unknown down piece");
  }

  // Recover the folded edge labels per box.
  std::map<std::pair<int, int>, FoldedTile> folded;
  for (int r = 1; r <= n; ++r)
    for (int c = r; c <= n; ++c) {
      if (r == c) {
        const Puzzle::Up& u = z.up[n - 1][r - 1];
        FoldedTile t{};
        t.north = puzzle_to_dream_horizontal(u.l);
        t.east = puzzle_to_dream_vertical(u.r);
        t.west = kZero;
        // The forced diagonal tile: a dot when the east label is lettered
        // or 1, otherwise the crossing over a vertical 0.
        t.south = t.east == kZero ? t.north : t.east;
        folded[{r, c}] = t;
      } else {
        const int i = n - c + r, pp = r;
        const Puzzle::Up& u = z.up[i - 1][pp - 1];
        const Puzzle::Down& d = z.down[i][pp - 1];
        if (u.b != d.t) fail("rhombus halves disagree on the diagonal");
        FoldedTile t{};
        t.north = puzzle_to_dream_horizontal(u.l);
        t.east = puzzle_to_dream_vertical(u.r);
        t.south = puzzle_to_dream_horizontal(d.r);
        t.west = puzzle_to_dream_vertical(d.l);
        folded[{r, c}] = t;
      }
    }

  // Unfold: the q-th R pipe from the left on the south boundary is the q-th
  // letter in reading order (the pipes are mutually non-crossing).
  std::vector<Label> south(n, kOne), east(n, kZero);
  {
    int m = 0;
    for (int c = 1; c <= n; ++c)
      if (folded[{c, c}].south == letter(1)) south[c - 1] = letter(++m);
    m = 0;
    for (int r = 1; r <= n; ++r)
      if (folded[{r, n}].east == letter(1)) east[r - 1] = letter(++m);
  }
  // Trace each letter pipe through the folded grid to assign letters to
  // individual edges.
  std::map<std::pair<int, int>, Label> south_letter, east_letter;  // per box
  for (int m0 = 1; m0 <= n; ++m0) {
    if (!is_letter(south[m0 - 1])) continue;
    Label lab = south[m0 - 1];
    int i = m0, j = m0;
    bool from_south = true;
    while (true) {
      FoldedTile& t = folded.at({i, j});
      bool exit_east;
      // crossing: straight through; dot: south->east; fusor: west->north
      if (t.south == letter(1) && t.east == letter(1) && from_south)
        exit_east = true;  // dot tile
      else if (from_south)
        exit_east = false;  // crossing, continue north
      else
        exit_east = !(t.west == letter(1) && t.north == letter(1));
      if (from_south) south_letter[{i, j}] = lab;
      if (exit_east) {
        east_letter[{i, j}] = lab;
        if (j == n) break;
        ++j;
        from_south = false;
      } else {
        if (i == 1) fail("letter pipe exits the north boundary");
        --i;
        from_south = true;
      }
    }
  }

  std::map<std::pair<int, int>, Tile> tiles;
  for (int r = 1; r <= n; ++r)
    for (int c = r; c <= n; ++c) {
      const FoldedTile& t = folded.at({r, c});
      auto lift_h = [&](Label l, bool is_south) -> Label {
        if (l != letter(1)) return l;
        auto it = is_south ? south_letter.find({r, c}) : south_letter.find({r - 1, c});
        if (is_south) return it != south_letter.end() ? it->second : l;
        return it != south_letter.end() ? it->second : l;
      };
      auto lift_v = [&](Label l, bool is_east) -> Word {
        if (l == kZero) return {};
        if (l != letter(1)) return {l};
        auto it = is_east ? east_letter.find({r, c}) : east_letter.find({r, c - 1});
        return {it != east_letter.end() ? it->second : l};
      };
      Label s_lab = lift_h(t.south, true);
      Label n_lab = lift_h(t.north, false);
      Word e = lift_v(t.east, true);
      Word w = lift_v(t.west, false);
      auto tile = make_tile(s_lab, e, n_lab, w);
      if (!tile) fail("sheared puzzle does not assemble into tiles");
      tiles[{r, c}] = *tile;
    }

  // f from the boundary: letter m's pipe connects east row to south column.
  std::vector<std::pair<int, int>> dots;
  for (int r = 1; r <= n; ++r)
    if (is_letter(east[r - 1]))
      for (int c = 1; c <= n; ++c)
        if (south[c - 1] == east[r - 1]) dots.emplace_back(r, c);
  PipeDream dream(PartialPermutation(n, dots), south, east, std::move(tiles));
  dream.validate();
  return dream;
}

long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu, int k, int n) {
  if (!lambda.fits_in_box(k, n - k) || !mu.fits_in_box(k, n - k) ||
      !nu.fits_in_box(k, n - k))
    fail("partition does not fit the box");
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!nu.contains(lambda)) return 0;

  // Fill the skew shape nu/lambda row by row, right to left, keeping the
  // reading word a lattice word and rows/columns semistandard.
  const int rows = nu.length();
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(nu.part(r + 1), 0);
  std::vector<int> remaining(mu.length() + 1, 0);
  for (int m = 1; m <= mu.length(); ++m) remaining[m] = mu.part(m);
  std::vector<int> word_count(mu.length() + 2, 0);

  long long count = 0;
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      ++count;
      return;
    }
    int lo = lambda.part(r + 1);
    if (c < lo) {
      rec(r + 1, nu.part(r + 2) - 1);
      return;
    }
    for (int v = 1; v <= mu.length(); ++v) {
      if (remaining[v] == 0) continue;
      // lattice: after placing v, #v must not exceed #(v-1)
      if (v > 1 && word_count[v] + 1 > word_count[v - 1]) continue;
      // weakly increasing along the row (filled right to left)
      if (c + 1 < nu.part(r + 1) && fill[r][c + 1] < v) continue;
      // strictly increasing down the column (boxes above inside lambda are
      // empty and impose nothing)
      if (r > 0 && c < nu.part(r) && c >= lambda.part(r) && fill[r - 1][c] >= v)
        continue;
      fill[r][c] = v;
      ++word_count[v];
      --remaining[v];
      rec(r + (c == lo ? 1 : 0), c == lo ? nu.part(r + 2) - 1 : c - 1);
      fill[r][c] = 0;
      --word_count[v];
      ++remaining[v];
    }
  };
  if (rows == 0) return 1;
  rec(0, nu.part(1) - 1);
  return count;
}

std::string render_puzzle_ascii(const Puzzle& z) {
  auto ch = [](int l) {
    switch (l) {
      case P0: return '0';
      case P1: return '1';
      case PR: return 'R';
      case PEQ: return 'E';
    }
    return '?';
  };
  std::ostringstream out;
  for (int i = 1; i <= z.n; ++i) {
    out << std::string(z.n - i, ' ');
    for (int p = 1; p <= i; ++p) {
      const auto& u = z.up[i - 1][p - 1];
      out << ch(u.l) << ch(u.b) << ch(u.r);
      if (p < i) {
        const auto& d = z.down[i - 1][p - 1];
        out << '[' << ch(d.t) << ']';
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace pipedreams
