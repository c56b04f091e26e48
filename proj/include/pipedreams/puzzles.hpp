#pragma once

#include <string>
#include <vector>

#include "pipedreams/classes.hpp"
#include "pipedreams/core.hpp"
#include "pipedreams/dreams.hpp"

// Equivariant puzzles, their enumeration and weights, the bijection with
// one-letter pipe dreams, and an independent Littlewood-Richardson tableau
// oracle.

namespace pipedreams {

// Puzzle edge labels.
enum PuzzleLabel : int { P0 = 0, P1 = 1, PR = 2, PEQ = 3 };

// A tiling of a size-n triangle.  Row i holds i upward triangles
// (left, right, bottom edges) and i-1 downward ones (top, left, right);
// up(i,p) shares its right edge with down(i,p) and its bottom edge with
// down(i+1,p).
struct Puzzle {
  int n = 0;
  struct Up {
    int l = 0, r = 0, b = 0;
    auto operator<=>(const Up&) const = default;
  };
  struct Down {
    int t = 0, l = 0, r = 0;
    auto operator<=>(const Down&) const = default;
  };
  std::vector<std::vector<Up>> up;      // up[i-1][p-1]
  std::vector<std::vector<Down>> down;  // down[i-1][p-1]

  auto operator<=>(const Puzzle&) const = default;
};

// Binary strings of length n with k ones on each side, read left to right.
struct PuzzleBoundary {
  std::vector<int> nw, ne, s;
};

// The 0/1 string whose m-th one has (cols - lambda_m + m)-th position; the
// encoding used on all three boundary sides.
std::vector<int> partition_to_string(const Partition& lambda, int k, int n);
Partition string_to_partition(const std::vector<int>& s);

// All puzzles with the given boundary, each with its equivariant weight
// (product of y_dist_nw - y_(n - dist_ne) over equivariant rhombi).  When
// equivariant is false only rhombus-free puzzles are produced.
std::vector<std::pair<Puzzle, SparsePoly>> enumerate_puzzles(
    const PuzzleBoundary& b, bool equivariant);

// Weight-preserving bijection with pipe dreams whose labels fold to
// {0, 1, R}.  dream_to_puzzle rejects multi-letter dreams whose letter
// pipes cross, and any dream with K-tiles.
Puzzle dream_to_puzzle(const PipeDream& p);
PipeDream puzzle_to_dream(const Puzzle& z);

SparsePoly puzzle_weight(const Puzzle& z);

// Classical Littlewood-Richardson number via skew tableaux with lattice
// reading word; 0 when |lambda| + |mu| != |nu|.
long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu, int k, int n);

std::string render_puzzle_ascii(const Puzzle& z);

}  // namespace pipedreams
