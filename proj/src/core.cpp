#include "pipedreams/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace pipedreams {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

}  // namespace

// --- Partition --------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i + 1 < parts_.size(); ++i)
    require(parts_[i] >= parts_[i + 1], "partition parts must weakly decrease");
  for (int p : parts_) require(p >= 0, "partition parts must be nonnegative");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int m) const {
  return (m >= 1 && m <= length()) ? parts_[m - 1] : 0;
}

bool Partition::fits_in_box(int rows, int cols) const {
  return length() <= rows && (parts_.empty() || parts_[0] <= cols);
}

Partition Partition::complement_in_box(int rows, int cols) const {
  require(fits_in_box(rows, cols), "partition does not fit in the box");
  std::vector<int> comp(rows);
  for (int m = 1; m <= rows; ++m) comp[m - 1] = cols - part(rows - m + 1);
  return Partition(std::move(comp));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int m = 1; m <= mu.length(); ++m)
    if (mu.part(m) > part(m)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ')';
  return out.str();
}

// --- PartialPermutation -----------------------------------------------------

PartialPermutation::PartialPermutation(int n,
                                       std::vector<std::pair<int, int>> dots)
    : n_(n), target_(n, 0) {
  require(n >= 1, "n must be positive");
  std::vector<bool> col_used(n + 1, false);
  for (auto [i, j] : dots) {
    require(i >= 1 && i <= n && j >= 1 && j <= n, "dot out of range");
    require(j >= i, "dot below the diagonal");
    require(target_[i - 1] == 0, "two dots in one row");
    require(!col_used[j], "two dots in one column");
    target_[i - 1] = j;
    col_used[j] = true;
  }
}

PartialPermutation PartialPermutation::empty(int n) {
  return PartialPermutation(n, {});
}

PartialPermutation PartialPermutation::identity(int n) {
  std::vector<std::pair<int, int>> dots;
  for (int i = 1; i <= n; ++i) dots.emplace_back(i, i);
  return PartialPermutation(n, std::move(dots));
}

int PartialPermutation::rank() const {
  return static_cast<int>(
      std::count_if(target_.begin(), target_.end(), [](int t) { return t != 0; }));
}

int PartialPermutation::k() const { return n_ - rank(); }

int PartialPermutation::at(int i) const {
  require(i >= 1 && i <= n_, "row out of range");
  return target_[i - 1];
}

std::vector<std::pair<int, int>> PartialPermutation::dots() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    if (target_[i - 1] != 0) out.emplace_back(i, target_[i - 1]);
  return out;
}

std::string PartialPermutation::to_string() const {
  std::ostringstream out;
  out << "{n=" << n_;
  for (auto [i, j] : dots()) out << ' ' << i << "->" << j;
  out << '}';
  return out.str();
}

// --- RankMatrix ---------------------------------------------------------------

RankMatrix::RankMatrix(int n, std::vector<std::vector<int>> rows)
    : n_(n), rows_(std::move(rows)) {}

int RankMatrix::at(int i, int j) const {
  require(i >= 1 && i <= j && j <= n_, "rank matrix index out of range");
  return rows_[i - 1][j - i];
}

bool RankMatrix::leq(const RankMatrix& other) const {
  require(n_ == other.n_, "size mismatch");
  for (int i = 1; i <= n_; ++i)
    for (int j = i; j <= n_; ++j)
      if (at(i, j) > other.at(i, j)) return false;
  return true;
}

RankMatrix rank_matrix_of(const PartialPermutation& f) {
  const int n = f.n();
  std::vector<std::vector<int>> rows(n);
  for (int i = 1; i <= n; ++i) {
    rows[i - 1].resize(n - i + 1);
    for (int j = i; j <= n; ++j) {
      int dots_sw = 0;
      for (int a = i; a <= j; ++a) {
        int b = f.at(a);
        if (b != 0 && b <= j) ++dots_sw;
      }
      rows[i - 1][j - i] = (j - i + 1) - dots_sw;
    }
  }
  return RankMatrix(n, std::move(rows));
}

// --- BoundedAffinePermutation -------------------------------------------------

BoundedAffinePermutation::BoundedAffinePermutation(std::vector<long> window)
    : n_(static_cast<int>(window.size())), window_(std::move(window)) {
  require(n_ >= 1, "window must be nonempty");
  std::vector<bool> residue_seen(n_, false);
  long sum = 0;
  for (int i = 1; i <= n_; ++i) {
    long v = window_[i - 1];
    require(v >= i && v <= i + n_, "window violates i <= J(i) <= i+n");
    long r = ((v % n_) + n_) % n_;
    require(!residue_seen[r], "window residues must be distinct");
    residue_seen[r] = true;
    sum += v - i;
  }
  require(sum % n_ == 0, "siteswap sum must be divisible by n");
}

BoundedAffinePermutation BoundedAffinePermutation::identity(int n) {
  std::vector<long> w(n);
  std::iota(w.begin(), w.end(), 1L);
  return BoundedAffinePermutation(std::move(w));
}

long BoundedAffinePermutation::at(long i) const {
  long q = (i - 1) / n_;
  long r = (i - 1) % n_;
  if (r < 0) {
    r += n_;
    q -= 1;
  }
  return window_[r] + q * n_;
}

long BoundedAffinePermutation::inverse_at(long j) const {
  // The dot in column j sits in a row within [j-n, j].
  for (long i = j - n_; i <= j; ++i)
    if (at(i) == j) return i;
  fail("no dot in the requested column");
}

int BoundedAffinePermutation::ball_number() const {
  long sum = 0;
  for (int i = 1; i <= n_; ++i) sum += window_[i - 1] - i;
  return static_cast<int>(sum / n_);
}

std::vector<long> BoundedAffinePermutation::siteswap() const {
  std::vector<long> s(n_);
  for (int i = 1; i <= n_; ++i) s[i - 1] = window_[i - 1] - i;
  return s;
}

PartialPermutation BoundedAffinePermutation::left_half() const {
  std::vector<std::pair<int, int>> dots;
  for (int i = 1; i <= n_; ++i)
    if (window_[i - 1] <= n_)
      dots.emplace_back(i, static_cast<int>(window_[i - 1]));
  return PartialPermutation(n_, std::move(dots));
}

std::vector<std::pair<long, long>> BoundedAffinePermutation::right_half_dots()
    const {
  std::vector<std::pair<long, long>> dots;
  for (int i = 1; i <= n_; ++i)
    if (window_[i - 1] > n_) dots.emplace_back(i, window_[i - 1]);
  return dots;
}

std::string BoundedAffinePermutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < n_; ++i) {
    if (i) out << ',';
    out << window_[i];
  }
  out << ']';
  return out.str();
}

// --- diagram and essential boxes ----------------------------------------------

long rank_of_pattern(const BoundedAffinePermutation& j, long x, long y) {
  require(x <= y && y <= x + j.n(), "interval out of the cyclic strip");
  long dots_sw = 0;
  for (long a = x; a <= y; ++a)
    if (j.at(a) <= y) ++dots_sw;
  return (y - x + 1) - dots_sw;
}

std::vector<EssentialBox> essential_boxes(const PartialPermutation& f) {
  // A box is essential when its rank condition is real (smaller than both
  // the interval length and k) and not implied by any neighbouring interval
  // condition.
  const int n = f.n();
  const int k = f.k();
  RankMatrix r = rank_matrix_of(f);
  std::vector<EssentialBox> out;
  for (int x = 1; x <= n; ++x)
    for (int y = x; y <= n; ++y) {
      int b = r.at(x, y);
      if (b >= std::min(k, y - x + 1)) continue;  // vacuous
      if (x > 1 && r.at(x - 1, y) <= b) continue;         // north implies
      if (y < n && r.at(x, y + 1) <= b) continue;         // east implies
      if (x < y && r.at(x + 1, y) + 1 <= b) continue;     // south implies
      if (x < y && r.at(x, y - 1) + 1 <= b) continue;     // west implies
      out.push_back({{x, y}, b});
    }
  return out;
}

BoundedAffinePermutation extend_to_juggling(const PartialPermutation& f) {
  const int n = f.n();
  std::vector<long> window(n, 0);
  std::vector<bool> col_used(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    int j = f.at(i);
    if (j != 0) {
      window[i - 1] = j;
      col_used[j] = true;
    }
  }
  std::vector<int> free_rows, free_cols;
  for (int i = 1; i <= n; ++i)
    if (f.at(i) == 0) free_rows.push_back(i);
  for (int c = 1; c <= n; ++c)
    if (!col_used[c]) free_cols.push_back(c);
  // NW/SE placement in the second triangle: r-th free row gets the r-th
  // free column, shifted by n.
  for (size_t r = 0; r < free_rows.size(); ++r)
    window[free_rows[r] - 1] = free_cols[r] + n;
  return BoundedAffinePermutation(std::move(window));
}

long affine_length(const BoundedAffinePermutation& j) {
  long inv = 0;
  for (int i = 1; i <= j.n(); ++i)
    for (long b = i + 1; b < i + j.n(); ++b)
      if (j.at(b) < j.at(i)) ++inv;
  return inv;
}

long variety_dimension(const BoundedAffinePermutation& j) {
  long k = j.ball_number();
  return k * (j.n() - k) - affine_length(j);
}

long variety_dimension(const PartialPermutation& f) {
  return variety_dimension(extend_to_juggling(f));
}

std::vector<BruhatCover> bruhat_covers_up(const BoundedAffinePermutation& j) {
  std::vector<BruhatCover> covers;
  const int n = j.n();
  for (int a = 1; a <= n; ++a) {
    for (long b = a + 1; b < a + n; ++b) {
      if (j.at(b) >= j.at(a)) continue;  // need a NE/SW dot pair
      bool empty_rect = true;
      for (long m = a + 1; m < b && empty_rect; ++m)
        if (j.at(m) > j.at(b) && j.at(m) < j.at(a)) empty_rect = false;
      if (!empty_rect) continue;
      // Swap the two values; stay bounded automatically.
      std::vector<long> w = j.window();
      auto set_value = [&](long row, long value) {
        long r = ((row - 1) % n + n) % n;
        long shift = row - 1 - r;
        w[r] = value - shift;
      };
      set_value(a, j.at(b));
      set_value(b, j.at(a));
      BruhatCover cover;
      cover.pattern = BoundedAffinePermutation(std::move(w));
      cover.row_lo = a + 1;
      cover.row_hi = b;
      cover.col_lo = j.at(b);
      cover.col_hi = j.at(a) - 1;
      covers.push_back(std::move(cover));
    }
  }
  return covers;
}

std::optional<Partition> opposite_schubert_partition(
    const PartialPermutation& f) {
  const int n = f.n();
  const int rank = f.rank();
  // Dots must fill rows 1..rank with columns increasing.
  int prev_col = 0;
  for (int i = 1; i <= rank; ++i) {
    int c = f.at(i);
    if (c == 0 || c <= prev_col) return std::nullopt;
    prev_col = c;
  }
  for (int i = rank + 1; i <= n; ++i)
    if (f.at(i) != 0) return std::nullopt;

  // lambda_m = #dot columns to the right of the m-th zero column.
  std::vector<bool> col_used(n + 1, false);
  for (auto [i, c] : f.dots()) col_used[c] = true;
  std::vector<int> parts;
  for (int z = 1; z <= n; ++z) {
    if (col_used[z]) continue;
    int count = 0;
    for (int c = z + 1; c <= n; ++c)
      if (col_used[c]) ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

RichardsonEnvelope richardson_envelope(const BoundedAffinePermutation& j) {
  const int n = j.n();
  PartialPermutation f = j.left_half();
  std::vector<bool> col_used(n + 1, false), row_used(n + 1, false);
  for (auto [r, c] : f.dots()) {
    row_used[r] = true;
    col_used[c] = true;
  }
  // nu from the nonzero columns (as in the opposite Schubert reading),
  // mu from the nonzero rows.
  std::vector<int> nu_parts, mu_parts;
  for (int z = 1; z <= n; ++z) {
    if (!col_used[z]) {
      int count = 0;
      for (int c = z + 1; c <= n; ++c)
        if (col_used[c]) ++count;
      nu_parts.push_back(count);
    }
    if (!row_used[z]) {
      int count = 0;
      for (int r = z + 1; r <= n; ++r)
        if (row_used[r]) ++count;
      mu_parts.push_back(count);
    }
  }
  std::sort(nu_parts.begin(), nu_parts.end(), std::greater<int>());
  std::sort(mu_parts.begin(), mu_parts.end(), std::greater<int>());

  auto nw_se = [](const std::vector<std::pair<long, long>>& dots) {
    for (size_t i = 0; i + 1 < dots.size(); ++i)
      if (dots[i + 1].second <= dots[i].second) return false;
    return true;
  };
  std::vector<std::pair<long, long>> left_dots;
  for (auto [r, c] : f.dots()) left_dots.emplace_back(r, c);

  RichardsonEnvelope env;
  env.nu = Partition(std::move(nu_parts));
  env.mu = Partition(std::move(mu_parts));
  env.is_exact = nw_se(left_dots) && nw_se(j.right_half_dots());
  return env;
}

std::vector<PartialPermutation> all_partial_permutations(int n) {
  std::vector<PartialPermutation> out;
  std::vector<std::pair<int, int>> dots;
  std::vector<bool> col_used(n + 1, false);
  auto rec = [&](auto&& self, int row) -> void {
    if (row > n) {
      out.emplace_back(n, dots);
      return;
    }
    self(self, row + 1);  // no dot in this row
    for (int c = row; c <= n; ++c) {
      if (col_used[c]) continue;
      col_used[c] = true;
      dots.emplace_back(row, c);
      self(self, row + 1);
      dots.pop_back();
      col_used[c] = false;
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<BoundedAffinePermutation> all_bounded_patterns(int n) {
  std::vector<BoundedAffinePermutation> out;
  std::vector<long> w(n);
  std::vector<bool> residue_used(n, false);
  long deficit = 0;  // running sum of J(i)-i, must end divisible by n
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      if (deficit % n == 0) out.emplace_back(w);
      return;
    }
    for (long v = i; v <= i + n; ++v) {
      long r = v % n;
      if (residue_used[r]) continue;
      residue_used[r] = true;
      w[i - 1] = v;
      deficit += v - i;
      self(self, i + 1);
      deficit -= v - i;
      residue_used[r] = false;
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace pipedreams
