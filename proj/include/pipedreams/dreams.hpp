#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pipedreams/core.hpp"

// Tiles, slices, viability, tile admission, and enumeration of pipe dreams
// through the slice-by-slice degeneration recursion, plus a brute-force
// tiling oracle used for cross-validation.

namespace pipedreams {

// Edge labels: 0, 1, or a letter.  Letter m (1-based) is encoded as m+1 and
// rendered 'A'..'Z' then 'a'..'z'.
using Label = int;
inline constexpr Label kZero = 0;
inline constexpr Label kOne = 1;
inline Label letter(int m) { return m + 1; }
inline bool is_letter(Label l) { return l >= 2; }
char label_char(Label l);
std::string label_name(Label l);

// Vertical edges carry words: empty means the 0 label; otherwise a sequence
// of distinct non-zero labels, with 1 only in final position.
using Word = std::vector<Label>;
bool valid_word(const Word& w);
std::string word_name(const Word& w);

enum class TileKind { Crossing, Dot, Equivariant, Fusor, Displacer };

struct Tile {
  Label south = kZero;
  Label north = kZero;
  Word east;
  Word west;
  TileKind kind = TileKind::Equivariant;
  int fused_count = 0;

  auto operator<=>(const Tile&) const = default;
};

// Classifies the edge labels into one of the five tile shapes; empty when no
// shape matches.
std::optional<Tile> make_tile(Label south, const Word& east, Label north,
                              const Word& west);

enum class TheoryMode { H, HT, K, KT };
std::string mode_name(TheoryMode m);
std::optional<TheoryMode> mode_from_name(const std::string& s);

// The frontier of a partially built dream.  The kink is (i, j); after the
// last tile it reaches the terminal sentinel (0, n).  h[m-1] holds the
// horizontal label at column m (south edges of the staircase), kink_east the
// word on the kink's east edge.
struct Slice {
  int n = 0;
  int i = 0;
  int j = 0;
  std::vector<Label> h;
  Word kink_east;
  std::vector<Label> south_boundary;
  std::vector<Label> east_boundary;

  bool terminal() const { return i == 0; }
  // Row of the horizontal edge at column m.
  int row_of(int m) const { return m < i ? m : (m <= j ? i : i - 1); }
  auto operator<=>(const Slice&) const = default;
};

Slice initial_slice(const PartialPermutation& f);

struct LabeledDot {
  int row = 0;
  int col = 0;
  Label label = kZero;
  auto operator<=>(const LabeledDot&) const = default;
};

struct SlicePermutation {
  PartialPermutation perm;
  std::vector<LabeledDot> dots;  // sorted by row
};

bool viable(const Slice& s);
// The partial permutation g(s) read off the ray construction; throws
// std::invalid_argument when s is not viable.
SlicePermutation slice_permutation(const Slice& s);

struct Admission {
  Tile tile;
  Slice next;
};

// Tiles the slice admits at its kink, each with the produced slice, in
// canonical order (forced tile, or: equivariant first, then fusor sublists
// in lexicographic order of C-indices), filtered by the theory mode.
std::vector<Admission> admitted_tiles(const Slice& s, TheoryMode mode);

// The C-list at a 0/0 kink: letters of dots of g(s) minimally northwest of
// the kink in columns [i, j-1] read SW to NE, plus 1 when the row-i labels
// west of the kink end "1 0^m".  Exposed for the shifts cross-checks.
std::vector<Label> branch_letter_list(const Slice& s);

class PipeDream {
 public:
  PipeDream() = default;
  PipeDream(PartialPermutation f, std::vector<Label> south_boundary,
            std::vector<Label> east_boundary,
            std::map<std::pair<int, int>, Tile> tiles);

  int n() const { return f_.n(); }
  const PartialPermutation& f() const { return f_; }
  const Tile& tile(int i, int j) const;
  const std::vector<Label>& north_labels() const { return north_; }
  const std::vector<Label>& south_boundary() const { return south_boundary_; }
  const std::vector<Label>& east_boundary() const { return east_boundary_; }

  Partition lambda() const;
  int fusing() const;
  int equivariant_tile_count() const;
  std::vector<Box> equivariant_positions() const;
  std::vector<Box> fusor_positions() const;  // all fusor tiles
  bool has_k_tiles() const;  // displacer present or fused_count > 0

  // Adjacency, boundary and tile-shape conditions; throws on violation.
  void validate() const;

  // Canonical text key (used for set comparisons and determinism checks).
  std::string key() const;

  auto operator<=>(const PipeDream&) const = default;

 private:
  PartialPermutation f_;
  std::vector<Label> south_boundary_;
  std::vector<Label> east_boundary_;
  std::map<std::pair<int, int>, Tile> tiles_;
  std::vector<Label> north_;
};

Partition lambda_of(const PipeDream& p);

// Depth-first enumeration in the Vakil order; deterministic canonical order.
std::vector<PipeDream> enumerate_dreams(const PartialPermutation& f,
                                        TheoryMode mode);
// Same output; subtrees below the first branch point explored concurrently
// and merged back in canonical order.
std::vector<PipeDream> enumerate_dreams_parallel(const PartialPermutation& f,
                                                 TheoryMode mode);

// Traced strand data of a complete dream: every curve runs boundary to
// boundary; crossings happen at crossing tiles only.
struct Curve {
  Label label = kZero;
  int start_hyp = 0;        // south boundary position
  bool ends_north = false;  // otherwise ends on the east boundary
  int end_pos = 0;          // column (north) or row (east)
};
struct CurveData {
  std::vector<Curve> curves;
  // Unordered crossing-tile incidences: (curve a, curve b) per crossing.
  std::vector<std::pair<int, int>> crossings;
  // For each word edge with >= 2 members: the member curve ids.
  std::vector<std::vector<int>> word_groups;
};
CurveData trace_curves(const PipeDream& p);

// True when the boundary endpoints of the two curves interleave around the
// triangle boundary (the Jordan-curve crossing predicate).
bool endpoints_interleave(const Curve& a, const Curve& b, int n);

// Exhaustive assignment of tiles consistent with the local rules, the
// boundary, and the nonlocal crossing conditions.  Independent of the slice
// machinery.  Refuses n > 5.
struct OracleOptions {
  bool enforce_west_zero = true;
  int max_letters_in_words = 8;
};
std::vector<PipeDream> brute_force_enumerate(const PartialPermutation& f,
                                             TheoryMode mode,
                                             OracleOptions opts = {});

// Oracle over an explicit boundary (used by the all-zero-west-edges law
// test, where the letter counts on the two sides may differ).
std::vector<PipeDream> brute_force_tilings(int n,
                                           const std::vector<Label>& south,
                                           const std::vector<Label>& east,
                                           TheoryMode mode,
                                           OracleOptions opts = {});

}  // namespace pipedreams
