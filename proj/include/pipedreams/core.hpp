#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Partial permutations, bounded affine permutations (juggling patterns),
// rank matrices, diagrams and essential boxes, and affine Bruhat covers.
// Everything is a 1-based immutable value; operations are pure functions.

namespace pipedreams {

struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

// Weakly decreasing nonnegative parts, trailing zeros stripped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // number of boxes |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int m) const;  // 1-based, 0 beyond length
  bool fits_in_box(int rows, int cols) const;
  // 180-degree complement inside a rows x cols box.
  Partition complement_in_box(int rows, int cols) const;
  bool contains(const Partition& mu) const;

  std::string to_string() const;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Upper triangular partial permutation matrix: at most one dot per row and
// column, every dot (i, f(i)) has f(i) >= i.  target_[i-1] == 0 means row i
// has no dot.
class PartialPermutation {
 public:
  PartialPermutation() = default;
  PartialPermutation(int n, std::vector<std::pair<int, int>> dots);

  static PartialPermutation empty(int n);
  static PartialPermutation identity(int n);

  int n() const { return n_; }
  int rank() const;            // number of dots
  int k() const;               // n - rank: the Grassmannian Gr_k(n)
  int at(int i) const;         // 0 if undefined
  bool defined(int i) const { return at(i) != 0; }
  std::vector<std::pair<int, int>> dots() const;  // sorted by row

  std::string to_string() const;
  auto operator<=>(const PartialPermutation&) const = default;

 private:
  int n_ = 0;
  std::vector<int> target_;
};

// r[i][j] = |[i,j]| - #dots weakly southwest of (i,j), for 1 <= i <= j <= n.
class RankMatrix {
 public:
  RankMatrix() = default;
  RankMatrix(int n, std::vector<std::vector<int>> rows);

  int n() const { return n_; }
  int at(int i, int j) const;
  bool leq(const RankMatrix& other) const;  // entrywise <=
  auto operator<=>(const RankMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> rows_;  // rows_[i-1][j-i]
};

// Bounded juggling pattern: window J(1..n) with i <= J(i) <= i+n and
// pairwise distinct residues mod n.  Extends periodically, J(i+n) = J(i)+n.
class BoundedAffinePermutation {
 public:
  BoundedAffinePermutation() = default;
  explicit BoundedAffinePermutation(std::vector<long> window);

  static BoundedAffinePermutation identity(int n);

  int n() const { return n_; }
  const std::vector<long>& window() const { return window_; }
  long at(long i) const;          // periodic extension
  long inverse_at(long j) const;  // row of the dot in column j
  int ball_number() const;        // sum (J(i)-i)/n
  std::vector<long> siteswap() const;

  // Restriction to the triangle 1 <= i <= j <= n.
  PartialPermutation left_half() const;
  // Dots (i, J(i)) with n < J(i), i in [n]; sorted by row.
  std::vector<std::pair<long, long>> right_half_dots() const;

  std::string to_string() const;
  auto operator<=>(const BoundedAffinePermutation&) const = default;

 private:
  int n_ = 0;
  std::vector<long> window_;
};

// --- operations -----------------------------------------------------------

RankMatrix rank_matrix_of(const PartialPermutation& f);

// Rank bound over the cyclic interval [x, y], x <= y <= x+n, in the periodic
// dot matrix of J.
long rank_of_pattern(const BoundedAffinePermutation& j, long x, long y);

// Essential boxes of f: northeast corners of the diagram obtained by
// crossing out strictly west and south of every dot of the periodic
// extension J(f).  Each box carries its rank bound.
struct EssentialBox {
  Box box;
  int rank_bound = 0;
  auto operator<=>(const EssentialBox&) const = default;
};
std::vector<EssentialBox> essential_boxes(const PartialPermutation& f);

// The unique bounded juggling pattern agreeing with f on the triangle.
BoundedAffinePermutation extend_to_juggling(const PartialPermutation& f);

// Number of affine inversions; codim of the variety inside Gr_k(n).
long affine_length(const BoundedAffinePermutation& j);

// dim = k(n-k) - affine_length(J(f)).
long variety_dimension(const PartialPermutation& f);
long variety_dimension(const BoundedAffinePermutation& j);

// Covers J'' of J going up in variety containment: affine_length drops by
// one and the rank matrix gains a rectangle of +1s, reported as
// rows [row_lo, row_hi] x cols [col_lo, col_hi] (one periodic representative).
struct BruhatCover {
  BoundedAffinePermutation pattern;
  long row_lo = 0, row_hi = 0, col_lo = 0, col_hi = 0;
};
std::vector<BruhatCover> bruhat_covers_up(const BoundedAffinePermutation& j);

// Defined when f's dots fill the first n-k rows running NW/SE; then the
// variety of f is the single opposite Schubert variety X^lambda.
std::optional<Partition> opposite_schubert_partition(const PartialPermutation& f);

// Smallest Richardson variety X_mu cap X^nu containing the variety of J;
// exact iff the dots run NW/SE in each half of J's parallelogram.
struct RichardsonEnvelope {
  Partition mu;
  Partition nu;
  bool is_exact = false;
};
RichardsonEnvelope richardson_envelope(const BoundedAffinePermutation& j);

// All upper triangular partial permutations of size n, every rank, in a
// deterministic order.
std::vector<PartialPermutation> all_partial_permutations(int n);

// All bounded juggling patterns of length n (every ball number).
std::vector<BoundedAffinePermutation> all_bounded_patterns(int n);

}  // namespace pipedreams
