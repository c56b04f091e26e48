#include "pipedreams/shifts.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pipedreams {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

// --- Collection ---------------------------------------------------------------

Collection::Collection(int n, int k, std::vector<uint32_t> masks)
    : n_(n), k_(k), masks_(std::move(masks)) {
  for (uint32_t m : masks_) {
    if (__builtin_popcount(m) != k_) fail("subset of the wrong size");
    if (m >= (1u << n_)) fail("subset element out of range");
  }
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

uint32_t Collection::mask_of(const std::vector<int>& subset) {
  uint32_t m = 0;
  for (int x : subset) m |= 1u << (x - 1);
  return m;
}

std::vector<int> Collection::subset_of(uint32_t mask) {
  std::vector<int> out;
  for (int x = 1; mask; ++x, mask >>= 1)
    if (mask & 1u) out.push_back(x);
  return out;
}

bool Collection::contains(uint32_t mask) const {
  return std::binary_search(masks_.begin(), masks_.end(), mask);
}

std::vector<std::vector<int>> Collection::subsets() const {
  std::vector<std::vector<int>> out;
  for (uint32_t m : masks_) out.push_back(subset_of(m));
  return out;
}

Collection Collection::unite(const Collection& other) const {
  if (n_ != other.n_ || k_ != other.k_) fail("collection shape mismatch");
  std::vector<uint32_t> all = masks_;
  all.insert(all.end(), other.masks_.begin(), other.masks_.end());
  return Collection(n_, k_, std::move(all));
}

// --- combinatorial shifting ------------------------------------------------------

int shift_element(ShiftOp op, int m) { return m == op.i ? op.j : m; }

uint32_t shift_set(ShiftOp op, uint32_t subset) {
  uint32_t bi = 1u << (op.i - 1), bj = 1u << (op.j - 1);
  if (!(subset & bi)) return subset;
  if (subset & bj) return subset;  // something's in the way
  return (subset & ~bi) | bj;
}

Collection shift_collection(ShiftOp op, const Collection& c) {
  std::vector<uint32_t> out;
  for (uint32_t s : c.masks()) {
    uint32_t shifted = shift_set(op, s);
    if (shifted != s && c.contains(shifted))
      out.push_back(s);  // something's in the way
    else
      out.push_back(shifted);
  }
  return Collection(c.n(), c.k(), std::move(out));
}

// --- matroids ---------------------------------------------------------------------

namespace {

// Bipartite matching of the dots into the elements of S, each dot (a,b)
// acceptable on positions m with a <= m <= b.
bool dots_matchable(const std::vector<std::pair<int, int>>& dots,
                    const std::vector<int>& s) {
  std::vector<int> owner(s.size(), -1);
  std::function<bool(int, std::vector<bool>&)> augment =
      [&](int d, std::vector<bool>& seen) {
        for (size_t x = 0; x < s.size(); ++x) {
          if (seen[x]) continue;
          if (s[x] < dots[d].first || s[x] > dots[d].second) continue;
          seen[x] = true;
          if (owner[x] == -1 || augment(owner[x], seen)) {
            owner[x] = d;
            return true;
          }
        }
        return false;
      };
  for (size_t d = 0; d < dots.size(); ++d) {
    std::vector<bool> seen(s.size(), false);
    if (!augment(static_cast<int>(d), seen)) return false;
  }
  return true;
}

}  // namespace

Collection matroid_of(const PartialPermutation& f) {
  const int n = f.n();
  const int k = f.k();
  auto dots = f.dots();
  std::vector<uint32_t> bases;
  for (uint32_t b = 0; b < (1u << n); ++b) {
    if (__builtin_popcount(b) != k) continue;
    uint32_t complement = ~b & ((1u << n) - 1);
    if (dots_matchable(dots, Collection::subset_of(complement)))
      bases.push_back(b);
  }
  return Collection(n, k, std::move(bases));
}

Collection matroid_of(const BoundedAffinePermutation& j) {
  PartialPermutation f = j.left_half();
  if (extend_to_juggling(f) != j)
    fail("pattern is not an interval positroid pattern");
  return matroid_of(f);
}

Collection matroid_of_pattern(const BoundedAffinePermutation& j) {
  const int n = j.n();
  const int k = j.ball_number();
  std::vector<uint32_t> bases;
  for (uint32_t b = 0; b < (1u << n); ++b) {
    if (__builtin_popcount(b) != k) continue;
    bool ok = true;
    for (int x = 1; x <= n && ok; ++x)
      for (long y = x; y < x + n && ok; ++y) {
        int members = 0;
        for (long m = x; m <= y; ++m) {
          int col = static_cast<int>((m - 1) % n);
          if (b & (1u << col)) ++members;
        }
        if (members > rank_of_pattern(j, x, y)) ok = false;
      }
    if (ok) bases.push_back(b);
  }
  return Collection(n, k, std::move(bases));
}

bool interval_deficiency(const PartialPermutation& f, uint32_t s_mask) {
  auto dots = f.dots();
  const int n = f.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      int inside = 0;
      for (auto [r, c] : dots)
        if (a <= r && c <= b) ++inside;
      int members = 0;
      for (int m = a; m <= b; ++m)
        if (s_mask & (1u << (m - 1))) ++members;
      if (members < inside) return true;
    }
  return false;
}

Collection basic_variety_matroid(int n, int k, uint32_t s_mask, int r) {
  std::vector<uint32_t> bases;
  for (uint32_t b = 0; b < (1u << n); ++b) {
    if (__builtin_popcount(b) != k) continue;
    if (__builtin_popcount(b & s_mask) <= r) bases.push_back(b);
  }
  return Collection(n, k, std::move(bases));
}

// --- Monk components and safe shifts ------------------------------------------------

namespace {

// Dots of J strictly northwest of (row, col) whose open rectangle towards
// (row, col) is dot-free, reported SW to NE (columns ascending).
std::vector<std::pair<long, long>> minimally_northwest(
    const BoundedAffinePermutation& j, long row, long col) {
  std::vector<std::pair<long, long>> out;
  // Any dot strictly NW lies in rows [col-n, row) since J(a) >= a.
  for (long a = col - j.n(); a < row; ++a) {
    long b = j.at(a);
    if (b >= col) continue;
    bool blocked = false;
    for (long m = a + 1; m < row && !blocked; ++m)
      if (j.at(m) > b && j.at(m) < col) blocked = true;
    if (!blocked) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

// Swap the columns of two dots of J; nullopt when the result is unbounded.
std::optional<BoundedAffinePermutation> swap_dots(
    const BoundedAffinePermutation& j, long row_a, long row_b) {
  const int n = j.n();
  std::vector<long> w = j.window();
  auto set_value = [&](long row, long value) {
    long r = ((row - 1) % n + n) % n;
    long shift = row - 1 - r;
    w[r] = value - shift;
  };
  long va = j.at(row_a), vb = j.at(row_b);
  set_value(row_a, vb);
  set_value(row_b, va);
  try {
    return BoundedAffinePermutation(std::move(w));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<BoundedAffinePermutation> monk_components(
    const BoundedAffinePermutation& j, int dot_row) {
  long col = j.at(dot_row);
  std::vector<BoundedAffinePermutation> out;
  for (auto [a, b] : minimally_northwest(j, dot_row, col)) {
    auto swapped = swap_dots(j, a, dot_row);
    if (swapped) out.push_back(std::move(*swapped));
  }
  return out;
}

bool is_safe_shift(const PartialPermutation& f, int i, int j) {
  for (const EssentialBox& e : essential_boxes(f)) {
    int a = e.box.row, b = e.box.col;
    if (i >= a && i <= b) continue;
    if (j < a || j > b) continue;
    if (a == i + 1 && b == j) continue;
    return false;
  }
  return true;
}

SafeShiftDecomposition safe_shift_components(const BoundedAffinePermutation& j,
                                             int i, int jj) {
  PartialPermutation f = j.left_half();
  if (extend_to_juggling(f) != j)
    fail("pattern is not an interval positroid pattern");
  if (!is_safe_shift(f, i, jj)) fail("shift is not safe for this pattern");

  SafeShiftDecomposition out;
  bool nontrivial = false;
  for (const EssentialBox& e : essential_boxes(f))
    if (e.box.row == i + 1 && e.box.col == jj) nontrivial = true;
  if (!nontrivial) {
    out.trivially_safe = true;
    out.sweep = j;
    out.components = {j};
    out.intersections[{0}] = j;
    return out;
  }

  // Sweep: the column-jj dot moves up to row i, the row-i dot drops down.
  long drop_row = j.inverse_at(jj);
  auto sweep = swap_dots(j, i, drop_row);
  if (!sweep) fail("sweep pattern is unbounded");
  out.sweep = *sweep;

  // Components: exchange the (i, jj) dot of the sweep with each dot
  // minimally northwest of it; intersections by cycling columns.
  auto dots = minimally_northwest(out.sweep, i, jj);
  std::vector<std::pair<long, long>> usable;
  for (auto [a, b] : dots) {
    auto component = swap_dots(out.sweep, a, i);
    if (!component) continue;
    usable.emplace_back(a, b);
    out.components.push_back(std::move(*component));
  }

  std::vector<std::vector<int>> sublists;
  {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
      for (int a = from; a < static_cast<int>(usable.size()); ++a) {
        cur.push_back(a);
        sublists.push_back(cur);
        rec(a + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  for (const auto& idx : sublists) {
    // Cycle: each chosen dot takes the next chosen column, the last takes
    // column jj, and the kink-row dot takes the first chosen column.
    const int n = j.n();
    std::vector<long> w = out.sweep.window();
    auto set_value = [&](long row, long value) {
      long r = ((row - 1) % n + n) % n;
      long shift = row - 1 - r;
      w[r] = value - shift;
    };
    for (size_t x = 0; x < idx.size(); ++x) {
      long row = usable[idx[x]].first;
      long next_col =
          x + 1 < idx.size() ? usable[idx[x + 1]].second : static_cast<long>(jj);
      set_value(row, next_col);
    }
    set_value(i, usable[idx[0]].second);
    out.intersections.emplace(idx, BoundedAffinePermutation(std::move(w)));
  }
  return out;
}

TConvexReport tconvex_fixed_point_check(const BoundedAffinePermutation& j,
                                        int i, int jj) {
  TConvexReport report;
  auto decomposition = safe_shift_components(j, i, jj);
  Collection lhs = shift_collection({i, jj}, matroid_of(j));
  Collection rhs(j.n(), lhs.k(), {});
  for (const auto& component : decomposition.components)
    rhs = rhs.unite(matroid_of(component));
  if (lhs == rhs) return report;
  report.ok = false;
  for (uint32_t m : lhs.masks())
    if (!rhs.contains(m)) {
      std::ostringstream s;
      s << "shifted fixed point {";
      for (int x : Collection::subset_of(m)) s << x << ' ';
      s << "} missing from the component union";
      report.counterexamples.push_back(s.str());
    }
  for (uint32_t m : rhs.masks())
    if (!lhs.contains(m)) {
      std::ostringstream s;
      s << "component fixed point {";
      for (int x : Collection::subset_of(m)) s << x << ' ';
      s << "} not a shifted fixed point";
      report.counterexamples.push_back(s.str());
    }
  return report;
}

}  // namespace pipedreams
