#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pipedreams/core.hpp"

// Combinatorial shifting, fixed-point matroids via interval matchings, the
// Monk-formula components, and safe-shift decompositions with
// inclusion-exclusion.

namespace pipedreams {

// A set of k-subsets of [n]; subsets stored as bitmasks (bit i-1 for i).
class Collection {
 public:
  Collection() = default;
  Collection(int n, int k, std::vector<uint32_t> masks);

  static uint32_t mask_of(const std::vector<int>& subset);
  static std::vector<int> subset_of(uint32_t mask);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<uint32_t>& masks() const { return masks_; }
  bool contains(uint32_t mask) const;
  int size() const { return static_cast<int>(masks_.size()); }
  std::vector<std::vector<int>> subsets() const;

  Collection unite(const Collection& other) const;
  bool operator==(const Collection&) const = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<uint32_t> masks_;  // sorted, distinct
};

struct ShiftOp {
  int i = 0;
  int j = 0;
};

// "Turn i into j, unless something's in the way."
int shift_element(ShiftOp op, int m);
uint32_t shift_set(ShiftOp op, uint32_t subset);
Collection shift_collection(ShiftOp op, const Collection& c);

// T-fixed points of the variety of f: bases B (k-subsets) whose complement
// admits a matching of the dots into diagonal positions within their column
// intervals.
Collection matroid_of(const PartialPermutation& f);
Collection matroid_of(const BoundedAffinePermutation& j);

// Fixed points straight from the defining rank conditions over all cyclic
// intervals; works for any bounded pattern and serves as the independent
// oracle for the matching characterization.
Collection matroid_of_pattern(const BoundedAffinePermutation& j);

// True when some interval [a,b] has fewer elements of S than dots with
// ranges inside it (the Hall obstruction); the complement of matchability.
bool interval_deficiency(const PartialPermutation& f, uint32_t s_mask);

// Fixed points of the basic variety X_{S <= r}: bases with |B cap S| <= r.
Collection basic_variety_matroid(int n, int k, uint32_t s_mask, int r);

// Components of the intersection with X_{[i, J(i)-1] < r}: the bounded
// covers obtained by exchanging the row-i dot with each dot minimally
// northwest of it.
std::vector<BoundedAffinePermutation> monk_components(
    const BoundedAffinePermutation& j, int dot_row);

// A shift (i,j) is safe for f when every essential box (i',j') satisfies
// i in [i',j'], or j not in [i',j'], or (i',j') = (i+1,j).
bool is_safe_shift(const PartialPermutation& f, int i, int j);

struct SafeShiftDecomposition {
  bool trivially_safe = false;
  BoundedAffinePermutation sweep;
  std::vector<BoundedAffinePermutation> components;
  // Key: index sublist into components (ascending); value: the intersection
  // pattern of that set of components.
  std::map<std::vector<int>, BoundedAffinePermutation> intersections;
};

// Decomposes the safe shift of the variety of J at (i,j).  Throws when the
// shift is unsafe.
SafeShiftDecomposition safe_shift_components(const BoundedAffinePermutation& j,
                                             int i, int jj);

struct TConvexReport {
  bool ok = true;
  std::vector<std::string> counterexamples;
};

// Fixed points of the shift equal the combinatorial shift of fixed points.
TConvexReport tconvex_fixed_point_check(const BoundedAffinePermutation& j,
                                        int i, int jj);

}  // namespace pipedreams
