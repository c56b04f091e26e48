#include "pipedreams/dreams.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pipedreams {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

bool contains(const Word& w, Label l) {
  return std::find(w.begin(), w.end(), l) != w.end();
}

}  // namespace

char label_char(Label l) {
  if (l == kZero) return '0';
  if (l == kOne) return '1';
  int m = l - 2;
  if (m < 26) return static_cast<char>('A' + m);
  if (m < 52) return static_cast<char>('a' + m - 26);
  return '?';
}

std::string label_name(Label l) { return std::string(1, label_char(l)); }

std::string word_name(const Word& w) {
  if (w.empty()) return "0";
  std::string s;
  for (Label l : w) s += label_char(l);
  return s;
}

bool valid_word(const Word& w) {
  for (size_t a = 0; a < w.size(); ++a) {
    if (w[a] == kZero) return false;
    if (w[a] == kOne && a + 1 != w.size()) return false;
    for (size_t b = a + 1; b < w.size(); ++b)
      if (w[a] == w[b]) return false;
  }
  return true;
}

std::optional<Tile> make_tile(Label south, const Word& east, Label north,
                              const Word& west) {
  if (!valid_word(east) || !valid_word(west)) return std::nullopt;
  Tile t;
  t.south = south;
  t.north = north;
  t.east = east;
  t.west = west;

  // Equivariant: all four edges 0.
  if (south == kZero && north == kZero && east.empty() && west.empty()) {
    t.kind = TileKind::Equivariant;
    return t;
  }
  // Dot: south = east = single non-zero b, north = west = 0.
  if (south != kZero && east.size() == 1 && east[0] == south &&
      north == kZero && west.empty()) {
    t.kind = TileKind::Dot;
    return t;
  }
  // Fusor: south = east = 0, west nonempty, north = last(west).
  if (south == kZero && east.empty() && !west.empty() &&
      north == west.back()) {
    t.kind = TileKind::Fusor;
    t.fused_count = static_cast<int>(west.size()) - 1;
    return t;
  }
  // Displacer: east = W.c with |W| >= 1, south = c, west = W,
  // north = last(W).
  if (east.size() >= 2 && south == east.back() &&
      west.size() + 1 == east.size() &&
      std::equal(west.begin(), west.end(), east.begin()) &&
      north == west.back()) {
    t.kind = TileKind::Displacer;
    return t;
  }
  // Crossing: north = south = a, west = east = V, a not in V, and a
  // vertical word containing 1 only crosses horizontal 0s.
  if (north == south && east == west && !contains(east, south) &&
      !(contains(east, kOne) && south != kZero)) {
    t.kind = TileKind::Crossing;
    return t;
  }
  return std::nullopt;
}

std::string mode_name(TheoryMode m) {
  switch (m) {
    case TheoryMode::H: return "H";
    case TheoryMode::HT: return "HT";
    case TheoryMode::K: return "K";
    case TheoryMode::KT: return "KT";
  }
  return "?";
}

std::optional<TheoryMode> mode_from_name(const std::string& s) {
  if (s == "H") return TheoryMode::H;
  if (s == "HT") return TheoryMode::HT;
  if (s == "K") return TheoryMode::K;
  if (s == "KT") return TheoryMode::KT;
  return std::nullopt;
}

// --- slices -----------------------------------------------------------------

Slice initial_slice(const PartialPermutation& f) {
  const int n = f.n();
  Slice s;
  s.n = n;
  s.i = n;
  s.j = n;
  s.south_boundary.assign(n, kOne);
  s.east_boundary.assign(n, kZero);
  int m = 0;
  for (auto [a, b] : f.dots()) {
    ++m;  // dot m in reading order owns letter m
    s.south_boundary[b - 1] = letter(m);
    s.east_boundary[a - 1] = letter(m);
  }
  s.h = s.south_boundary;
  Label e = s.east_boundary[n - 1];
  s.kink_east = e == kZero ? Word{} : Word{e};
  return s;
}

namespace {

// Advances a slice by one placed tile.
Slice advance(const Slice& s, const Tile& t) {
  Slice next = s;
  next.h[s.j - 1] = t.north;
  if (s.j > s.i) {
    next.j = s.j - 1;
    next.kink_east = t.west;
  } else {
    next.i = s.i - 1;
    next.j = s.n;
    if (next.i >= 1) {
      Label e = s.east_boundary[next.i - 1];
      next.kink_east = e == kZero ? Word{} : Word{e};
    } else {
      next.kink_east.clear();
    }
  }
  return next;
}

// Reduces a multi-letter kink word by auto-placing the forced displacer and
// crossing tiles (which leave the associated permutation unchanged).
// Returns the reduced slice, or nullopt when the walk gets stuck.
std::optional<Slice> reduce_kink_word(Slice s) {
  while (s.kink_east.size() >= 2) {
    if (s.j <= s.i) return std::nullopt;  // word may not reach the diagonal
    Label south = s.h[s.j - 1];
    const Word& v = s.kink_east;
    std::optional<Tile> t;
    if (south == v.back()) {
      Word w(v.begin(), v.end() - 1);
      t = make_tile(south, v, w.back(), w);  // displacer
    } else if (!contains(v, south)) {
      t = make_tile(south, v, south, v);  // crossing; checks the 1-rule
    }
    if (!t) return std::nullopt;
    s = advance(s, *t);
  }
  return s;
}

struct Occurrence {
  int row = 0;
  int col = 0;
};

// The ray/dot construction on a slice whose kink word has at most one label.
std::optional<SlicePermutation> rays_and_dots(const Slice& s) {
  const int n = s.n;
  const int i = s.i;
  const int j = s.j;
  std::vector<LabeledDot> dots;

  Label kink_label = s.kink_east.empty() ? kZero : s.kink_east[0];

  // Horizontal occurrences per label.
  std::map<Label, std::vector<Occurrence>> horiz;  // columns ascend
  for (int m = 1; m <= n; ++m) {
    Label l = s.h[m - 1];
    int row = s.row_of(m);
    if (m < i && l == kZero) return std::nullopt;  // diagonal edges carry no 0s
    horiz[l].push_back({row, m});
  }

  // Vertical letter occurrences: east boundary rows < i, then the kink.
  std::map<Label, std::vector<Occurrence>> vert;  // rows ascend
  for (int r = 1; r < i; ++r) {
    Label l = s.east_boundary[r - 1];
    if (is_letter(l)) vert[l].push_back({r, n});
  }
  if (is_letter(kink_label)) vert[kink_label].push_back({i, j});

  // Letters pair planarly: p-th from the left with p-th from the bottom.
  for (auto& [l, vs] : vert) {
    auto it = horiz.find(l);
    size_t hcount = it == horiz.end() ? 0 : it->second.size();
    if (hcount != vs.size()) return std::nullopt;
    for (size_t p = 0; p < vs.size(); ++p) {
      const Occurrence& h = it->second[p];
      const Occurrence& v = vs[vs.size() - 1 - p];
      if (h.row < v.row || h.col > v.col) return std::nullopt;
      dots.push_back({v.row, h.col, l});
    }
  }
  for (auto& [l, hs] : horiz) {
    if (!is_letter(l)) continue;
    if (!vert.count(l) && !hs.empty()) return std::nullopt;
  }

  // A 1 on the kink's east edge pairs with the rightmost horizontal 1 on the
  // bottom edge; the labels between them must all be 0.
  if (kink_label == kOne) {
    int cstar = 0;
    for (int m = i; m <= j; ++m)
      if (s.h[m - 1] == kOne) cstar = m;
    if (cstar == 0) return std::nullopt;
    for (int m = cstar + 1; m <= j; ++m)
      if (s.h[m - 1] != kZero) return std::nullopt;
    dots.push_back({i, cstar, kOne});
  }

  // 0-dots: when the kink's east edge is 0, its east-pointing ray may catch
  // the westmost south ray coming from the row i-1 edges; all other south
  // rays settle into rows i+1, i+2, ... in column order.
  std::vector<int> zero_cols;
  for (int m = 1; m <= n; ++m)
    if (s.h[m - 1] == kZero) zero_cols.push_back(m);
  {
    std::vector<int> rest;
    if (kink_label == kZero && s.kink_east.empty()) {
      int row_i_col = 0;
      for (int m : zero_cols)
        if (m > j) {
          row_i_col = m;
          break;
        }
      if (row_i_col != 0) {
        dots.push_back({i, row_i_col, kZero});
        for (int m : zero_cols)
          if (m != row_i_col) rest.push_back(m);
      } else {
        rest = zero_cols;
      }
    } else {
      rest = zero_cols;
    }
    int row = i + 1;
    for (int m : rest) {
      if (row > n) return std::nullopt;
      dots.push_back({row++, m, kZero});
    }
  }

  // The dots must form an upper triangular partial permutation.
  std::vector<bool> row_used(n + 1, false), col_used(n + 1, false);
  std::vector<std::pair<int, int>> positions;
  for (const auto& d : dots) {
    if (d.row < 1 || d.col < d.row || d.col > n) return std::nullopt;
    if (row_used[d.row] || col_used[d.col]) return std::nullopt;
    row_used[d.row] = col_used[d.col] = true;
    positions.emplace_back(d.row, d.col);
  }
  std::sort(dots.begin(), dots.end(),
            [](const LabeledDot& a, const LabeledDot& b) { return a.row < b.row; });
  return SlicePermutation{PartialPermutation(n, positions), dots};
}

std::optional<SlicePermutation> slice_permutation_impl(const Slice& s) {
  auto reduced = reduce_kink_word(s);
  if (!reduced) return std::nullopt;
  return rays_and_dots(*reduced);
}

}  // namespace

bool viable(const Slice& s) { return slice_permutation_impl(s).has_value(); }

SlicePermutation slice_permutation(const Slice& s) {
  auto g = slice_permutation_impl(s);
  if (!g) fail("slice is not viable");
  return *g;
}

std::vector<Label> branch_letter_list(const Slice& s) {
  const int i = s.i, j = s.j;
  auto g = slice_permutation(s);

  // Letter dots of g(s) strictly northwest of the kink in columns [i, j-1],
  // minimal: no other letter dot strictly inside the open rectangle.
  std::vector<LabeledDot> letters;
  for (const auto& d : g.dots)
    if (is_letter(d.label) && d.row < i) letters.push_back(d);
  std::vector<LabeledDot> minimal;
  for (const auto& d : letters) {
    if (d.col < i || d.col >= j) continue;
    bool blocked = false;
    for (const auto& e : letters)
      if (e.row > d.row && e.row < i && e.col > d.col && e.col < j)
        blocked = true;
    if (!blocked) minimal.push_back(d);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const LabeledDot& a, const LabeledDot& b) { return a.col < b.col; });

  std::vector<Label> c;
  for (const auto& d : minimal) c.push_back(d.label);

  // Append 1 when the row-i labels west of the kink end "1 0^m".
  Label rightmost = kZero;
  for (int m = i; m <= j - 1; ++m)
    if (s.h[m - 1] != kZero) rightmost = s.h[m - 1];
  if (rightmost == kOne) c.push_back(kOne);
  return c;
}

namespace {

void lex_sublists(int size, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    for (int a = from; a < size; ++a) {
      cur.push_back(a);
      out.push_back(cur);
      rec(a + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

bool tile_respects_boundaries(const Slice& s, const Tile& t) {
  if (s.i == 1 && is_letter(t.north)) return false;  // north edge: 0/1 only
  if (s.j == s.i && !t.west.empty()) return false;   // west edge: 0 only
  return true;
}

}  // namespace

std::vector<Admission> admitted_tiles(const Slice& s, TheoryMode mode) {
  std::vector<Admission> out;
  if (s.terminal()) return out;
  if (!viable(s)) return out;
  const Word& v = s.kink_east;
  Label south = s.h[s.j - 1];

  auto push_if_viable = [&](const Tile& t) {
    if (!tile_respects_boundaries(s, t)) return;
    Slice next = advance(s, t);
    if (viable(next)) out.push_back({t, std::move(next)});
  };

  if (v.size() >= 2) {
    // Forced: displacer when the south label ends the word, else crossing.
    std::optional<Tile> t;
    if (south == v.back()) {
      Word w(v.begin(), v.end() - 1);
      t = make_tile(south, v, w.back(), w);
    } else if (!contains(v, south)) {
      t = make_tile(south, v, south, v);
    }
    if (t) push_if_viable(*t);
    return out;
  }

  Label east = v.empty() ? kZero : v[0];
  if (south == east && south != kZero) {
    push_if_viable(*make_tile(south, v, kZero, {}));  // dot
    return out;
  }
  if (south != kZero || east != kZero) {
    auto t = make_tile(south, v, south, v);  // crossing
    if (t) push_if_viable(*t);
    return out;
  }

  // 0/0 kink: the equivariant tile plus one fusor per nonempty sublist of C.
  if (mode == TheoryMode::HT || mode == TheoryMode::KT)
    push_if_viable(*make_tile(kZero, {}, kZero, {}));
  std::vector<Label> c = branch_letter_list(s);
  std::vector<std::vector<int>> sublists;
  lex_sublists(static_cast<int>(c.size()), sublists);
  for (const auto& idx : sublists) {
    if (idx.size() >= 2 &&
        (mode == TheoryMode::H || mode == TheoryMode::HT))
      continue;
    Word w;
    for (int a : idx) w.push_back(c[a]);
    auto t = make_tile(kZero, {}, w.back(), w);
    if (t) push_if_viable(*t);
  }
  return out;
}

// --- pipe dreams ---------------------------------------------------------------

PipeDream::PipeDream(PartialPermutation f, std::vector<Label> south_boundary,
                     std::vector<Label> east_boundary,
                     std::map<std::pair<int, int>, Tile> tiles)
    : f_(std::move(f)),
      south_boundary_(std::move(south_boundary)),
      east_boundary_(std::move(east_boundary)),
      tiles_(std::move(tiles)) {
  north_.resize(n());
  for (int j = 1; j <= n(); ++j) north_[j - 1] = tile(1, j).north;
}

const Tile& PipeDream::tile(int i, int j) const {
  auto it = tiles_.find({i, j});
  if (it == tiles_.end()) fail("no tile at the requested box");
  return it->second;
}

Partition PipeDream::lambda() const {
  // lambda_m = number of 0s to the right of the m-th 1 on the north side.
  std::vector<int> parts;
  for (int p = 0; p < n(); ++p) {
    if (north_[p] != kOne) continue;
    int zeros = 0;
    for (int q = p + 1; q < n(); ++q)
      if (north_[q] == kZero) ++zeros;
    parts.push_back(zeros);
  }
  return Partition(std::move(parts));
}

Partition lambda_of(const PipeDream& p) { return p.lambda(); }

int PipeDream::fusing() const {
  int total = 0;
  for (const auto& [box, t] : tiles_) total += t.fused_count;
  return total;
}

int PipeDream::equivariant_tile_count() const {
  return static_cast<int>(equivariant_positions().size());
}

std::vector<Box> PipeDream::equivariant_positions() const {
  std::vector<Box> out;
  for (const auto& [box, t] : tiles_)
    if (t.kind == TileKind::Equivariant) out.push_back({box.first, box.second});
  return out;
}

std::vector<Box> PipeDream::fusor_positions() const {
  std::vector<Box> out;
  for (const auto& [box, t] : tiles_)
    if (t.kind == TileKind::Fusor) out.push_back({box.first, box.second});
  return out;
}

bool PipeDream::has_k_tiles() const {
  for (const auto& [box, t] : tiles_)
    if (t.kind == TileKind::Displacer || t.fused_count > 0) return true;
  return false;
}

void PipeDream::validate() const {
  const int nn = n();
  for (int i = 1; i <= nn; ++i)
    for (int j = i; j <= nn; ++j) {
      const Tile& t = tile(i, j);
      if (!make_tile(t.south, t.east, t.north, t.west)) fail("illegal tile");
      // adjacency and boundary
      if (j < nn) {
        if (t.east != tile(i, j + 1).west) fail("east/west edge mismatch");
      } else {
        Word expect = east_boundary_[i - 1] == kZero
                          ? Word{}
                          : Word{east_boundary_[i - 1]};
        if (t.east != expect) fail("east boundary mismatch");
        if (contains(t.east, kOne)) fail("1 on the east boundary");
      }
      if (i == 1) {
        if (is_letter(t.north)) fail("letter on the north boundary");
      } else {
        if (t.north != tile(i - 1, j).south) fail("north/south edge mismatch");
      }
      if (j == i) {
        if (t.south != south_boundary_[j - 1]) fail("south boundary mismatch");
        if (t.south == kZero) fail("0 on the south boundary");
        if (!t.west.empty()) fail("nonzero west edge");
      } else {
        if (t.south != tile(i + 1, j).north) fail("south/north edge mismatch");
      }
    }
}

std::string PipeDream::key() const {
  std::ostringstream out;
  for (const auto& [box, t] : tiles_)
    out << box.first << ',' << box.second << ':' << label_char(t.south)
        << word_name(t.east) << label_char(t.north) << word_name(t.west)
        << ';';
  return out.str();
}

// --- enumeration ----------------------------------------------------------------

namespace {

void enumerate_rec(const Slice& s, TheoryMode mode,
                   std::map<std::pair<int, int>, Tile>& placed,
                   const PartialPermutation& f,
                   const std::vector<Label>& south_bdry,
                   const std::vector<Label>& east_bdry,
                   std::vector<PipeDream>& out) {
  if (s.terminal()) {
    out.emplace_back(f, south_bdry, east_bdry, placed);
    return;
  }
  for (const Admission& adm : admitted_tiles(s, mode)) {
    placed[{s.i, s.j}] = adm.tile;
    enumerate_rec(adm.next, mode, placed, f, south_bdry, east_bdry, out);
    placed.erase({s.i, s.j});
  }
}

}  // namespace

std::vector<PipeDream> enumerate_dreams(const PartialPermutation& f,
                                        TheoryMode mode) {
  Slice s = initial_slice(f);
  std::vector<PipeDream> out;
  std::map<std::pair<int, int>, Tile> placed;
  enumerate_rec(s, mode, placed, f, s.south_boundary, s.east_boundary, out);
  return out;
}

std::vector<PipeDream> enumerate_dreams_parallel(const PartialPermutation& f,
                                                 TheoryMode mode) {
  // Walk the forced prefix; the independent subtrees hanging off the first
  // branch point are explored concurrently and merged in canonical order.
  Slice s = initial_slice(f);
  std::map<std::pair<int, int>, Tile> placed;
  while (!s.terminal()) {
    auto adms = admitted_tiles(s, mode);
    if (adms.size() != 1) {
      std::vector<std::vector<PipeDream>> parts(adms.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (size_t a = 0; a < adms.size(); ++a) {
        auto sub = placed;
        sub[{s.i, s.j}] = adms[a].tile;
        enumerate_rec(adms[a].next, mode, sub, f, s.south_boundary,
                      s.east_boundary, parts[a]);
      }
      std::vector<PipeDream> out;
      for (auto& part : parts)
        for (auto& p : part) out.push_back(std::move(p));
      return out;
    }
    placed[{s.i, s.j}] = adms[0].tile;
    s = adms[0].next;
  }
  std::vector<PipeDream> out;
  out.emplace_back(f, s.south_boundary, s.east_boundary, placed);
  return out;
}

// --- curve tracing -----------------------------------------------------------

CurveData trace_curves(const PipeDream& p) {
  const int n = p.n();
  CurveData data;
  // vertical/horizontal passer per box, -1 when none
  std::map<std::pair<int, int>, int> vpass, hpass;
  // horizontal strand per east edge of a box
  std::map<std::pair<int, int>, int> estrand;

  for (int m = 1; m <= n; ++m) {
    Label start = p.south_boundary()[m - 1];
    if (start == kZero) continue;
    int id = static_cast<int>(data.curves.size());
    Curve c;
    c.label = start;
    c.start_hyp = m;
    int i = m, j = m;
    enum class From { South, West } from = From::South;
    Label cur = start;
    while (true) {
      const Tile& t = p.tile(i, j);
      enum class Exit { North, East } exit = Exit::North;
      switch (t.kind) {
        case TileKind::Crossing:
          exit = from == From::South ? Exit::North : Exit::East;
          break;
        case TileKind::Dot:
          exit = Exit::East;
          break;
        case TileKind::Fusor:
          exit = Exit::North;
          break;
        case TileKind::Displacer:
          exit = from == From::South ? Exit::East : Exit::North;
          break;
        case TileKind::Equivariant:
          fail("curve entered an equivariant tile");
      }
      if (from == From::South)
        vpass[{i, j}] = id;
      else
        hpass[{i, j}] = id;
      if (exit == Exit::North) {
        cur = t.north;
        if (i == 1) {
          c.ends_north = true;
          c.end_pos = j;
          break;
        }
        --i;
        from = From::South;
      } else {
        cur = t.east.empty() ? kZero : t.east.back();
        estrand[{i, j}] = id;
        if (j == n) {
          c.ends_north = false;
          c.end_pos = i;
          break;
        }
        ++j;
        from = From::West;
      }
      if (cur == kZero) fail("curve degenerated to a 0 label");
    }
    data.curves.push_back(c);
  }

  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const Tile& t = p.tile(i, j);
      if (t.kind == TileKind::Crossing) {
        auto vi = vpass.find({i, j});
        auto hi = hpass.find({i, j});
        if (vi != vpass.end() && hi != hpass.end())
          data.crossings.emplace_back(vi->second, hi->second);
      }
      if (t.east.size() >= 2) {
        std::vector<int> group;
        for (size_t a = 0; a + 1 < t.east.size(); ++a) {
          // non-terminal members are letters, each owning one curve
          for (size_t c = 0; c < data.curves.size(); ++c)
            if (data.curves[c].label == t.east[a])
              group.push_back(static_cast<int>(c));
        }
        auto si = estrand.find({i, j});
        if (si != estrand.end()) group.push_back(si->second);
        data.word_groups.push_back(std::move(group));
      }
    }
  return data;
}

bool endpoints_interleave(const Curve& a, const Curve& b, int n) {
  // Boundary circle: north positions 1..n, east rows 1..n, hypotenuse
  // positions n..1.
  auto pos = [&](bool is_start, const Curve& c) -> int {
    if (is_start) return 2 * n + (n - c.start_hyp);  // hypotenuse
    return c.ends_north ? (c.end_pos - 1) : (n + c.end_pos - 1);
  };
  int a1 = pos(true, a), a2 = pos(false, a);
  int b1 = pos(true, b), b2 = pos(false, b);
  auto between = [&](int lo, int hi, int x) {
    // strictly between lo and hi going clockwise on a circle of size 3n
    int len = ((hi - lo) % (3 * n) + 3 * n) % (3 * n);
    int off = ((x - lo) % (3 * n) + 3 * n) % (3 * n);
    return off > 0 && off < len;
  };
  return between(a1, a2, b1) != between(a1, a2, b2);
}

// --- brute force oracle ---------------------------------------------------------

namespace {

// All valid words over the given letters (plus optional trailing 1):
// distinct entries, 1 only at the end.
std::vector<Word> all_words(const std::vector<Label>& letters) {
  std::vector<Word> out;
  std::vector<Label> cur;
  std::vector<bool> used(letters.size(), false);
  std::function<void()> rec = [&]() {
    if (!cur.empty()) {
      out.push_back(cur);
      Word with_one = cur;
      with_one.push_back(kOne);
      out.push_back(std::move(with_one));
    }
    for (size_t a = 0; a < letters.size(); ++a) {
      if (used[a]) continue;
      used[a] = true;
      cur.push_back(letters[a]);
      rec();
      cur.pop_back();
      used[a] = false;
    }
  };
  rec();
  out.push_back(Word{kOne});
  return out;
}

bool passes_nonlocal(const PipeDream& p) {
  CurveData data = trace_curves(p);
  std::map<std::pair<int, int>, int> cross_count;
  for (auto [a, b] : data.crossings) {
    auto key = std::minmax(a, b);
    ++cross_count[{key.first, key.second}];
  }
  for (const auto& [pair, count] : cross_count)
    if (count > 1) return false;  // no two pipes cross twice
  std::set<std::pair<int, int>> word_pairs;
  for (const auto& group : data.word_groups)
    for (size_t a = 0; a < group.size(); ++a)
      for (size_t b = a + 1; b < group.size(); ++b) {
        auto key = std::minmax(group[a], group[b]);
        word_pairs.insert({key.first, key.second});
      }
  for (const auto& pair : word_pairs) {
    auto it = cross_count.find(pair);
    if (it == cross_count.end() || it->second != 1)
      return false;  // same-word pipes must cross exactly once
  }
  return true;
}

bool mode_allows(const PipeDream& p, TheoryMode mode) {
  bool equivariant = p.equivariant_tile_count() > 0;
  bool fused = p.fusing() > 0;
  switch (mode) {
    case TheoryMode::H: return !equivariant && !fused;
    case TheoryMode::HT: return !fused;
    case TheoryMode::K: return !equivariant;
    case TheoryMode::KT: return true;
  }
  return false;
}

}  // namespace

std::vector<PipeDream> brute_force_tilings(int n,
                                           const std::vector<Label>& south,
                                           const std::vector<Label>& east,
                                           TheoryMode mode,
                                           OracleOptions opts) {
  if (n > 5) throw std::length_error("brute force oracle refuses n > 5");
  std::vector<Label> letters;
  for (Label l : south)
    if (is_letter(l)) letters.push_back(l);
  for (Label l : east)
    if (is_letter(l) && std::find(letters.begin(), letters.end(), l) ==
                            letters.end())
      letters.push_back(l);
  std::sort(letters.begin(), letters.end());
  if (static_cast<int>(letters.size()) > opts.max_letters_in_words)
    throw std::length_error("too many letters for the oracle");
  std::vector<Word> words = all_words(letters);

  std::vector<PipeDream> out;
  std::map<std::pair<int, int>, Tile> placed;
  // frontier horizontal labels, as in the slice machinery
  std::vector<Label> h(south);
  // candidate tiles at a box given its south and east edges
  auto candidates = [&](int i, int j, Label s_lab, const Word& e) {
    std::vector<Tile> tiles;
    auto try_tile = [&](Label north, const Word& west) {
      auto t = make_tile(s_lab, e, north, west);
      if (!t) return;
      if (i == 1 && is_letter(t->north)) return;
      if (opts.enforce_west_zero && j == i && !t->west.empty()) return;
      if (std::find(tiles.begin(), tiles.end(), *t) != tiles.end()) return;
      tiles.push_back(*t);
    };
    if (e.size() >= 2) {
      Word w(e.begin(), e.end() - 1);
      try_tile(w.back(), w);  // displacer
      try_tile(s_lab, e);     // crossing
      return tiles;
    }
    try_tile(kZero, {});   // dot or equivariant
    try_tile(s_lab, e);    // crossing
    if (s_lab == kZero && e.empty())
      for (const Word& w : words) try_tile(w.back(), w);  // fusors
    return tiles;
  };

  std::function<void(int, int, Word)> rec = [&](int i, int j, Word e) {
    if (i == 0) {
      PipeDream p(PartialPermutation::empty(n), south, east, placed);
      try {
        if (opts.enforce_west_zero) p.validate();
      } catch (const std::exception&) {
        return;
      }
      if (!passes_nonlocal(p)) return;
      if (!mode_allows(p, mode)) return;
      out.push_back(std::move(p));
      return;
    }
    Label s_lab = h[j - 1];
    for (const Tile& t : candidates(i, j, s_lab, e)) {
      Label saved = h[j - 1];
      h[j - 1] = t.north;
      placed[{i, j}] = t;
      if (j > i) {
        rec(i, j - 1, t.west);
      } else {
        Word next_e;
        if (i - 1 >= 1 && east[i - 2] != kZero) next_e = {east[i - 2]};
        rec(i - 1, n, std::move(next_e));
      }
      placed.erase({i, j});
      h[j - 1] = saved;
    }
  };
  Word e0;
  if (east[n - 1] != kZero) e0 = {east[n - 1]};
  rec(n, n, std::move(e0));
  return out;
}

std::vector<PipeDream> brute_force_enumerate(const PartialPermutation& f,
                                             TheoryMode mode,
                                             OracleOptions opts) {
  Slice s = initial_slice(f);
  auto tilings =
      brute_force_tilings(f.n(), s.south_boundary, s.east_boundary, mode, opts);
  // Rebuild with the true f so downstream consumers see it.
  std::vector<PipeDream> out;
  for (auto& p : tilings) {
    std::map<std::pair<int, int>, Tile> tiles;
    for (int i = 1; i <= f.n(); ++i)
      for (int j = i; j <= f.n(); ++j) tiles[{i, j}] = p.tile(i, j);
    out.emplace_back(f, s.south_boundary, s.east_boundary, std::move(tiles));
  }
  return out;
}

}  // namespace pipedreams
