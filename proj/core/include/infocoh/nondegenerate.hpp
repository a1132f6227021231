#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "infocoh/structure.hpp"

namespace infocoh {

// Certificate that a product supports sequence extraction: outcome
// enumerations of both factors and a North-East lattice path through the
// joint-outcome grid satisfying the lifting and three-element-cell
// conditions.
struct NondegWitness {
  // order_x[a-1] is the original outcome index placed at position a.
  std::vector<int> order_x;
  std::vector<int> order_y;
  // 1-indexed lattice points from (1,1) to (k,l), consecutive steps East or
  // North.
  std::vector<std::pair<int, int>> path;
};

// Pure lattice-level search over a k x l grid whose occupied slots are
// `present` (pairs of 0-based X/Y outcome indices). Tries every pair of
// enumerations (lexicographic permutation order) and every path
// (East-before-North order); returns the first certificate:
//   - every visited point whose 2x2 cell fits in the grid has >= 3 occupied
//     slots in that cell;
//   - East steps at column a <= k-2 need one full occupied row tail
//     (pattern {(a,b+1)} + row b, or {(a,b)} + row b+1, columns a+1..k),
//     and are rejected when row b+1 leaves the grid; North steps dually at
//     b <= l-2;
//   - the in-grid visited points cover every column 1..k-1 and row 1..l-1.
std::optional<NondegWitness> search_nondegenerate(
    int k, int l, const std::vector<std::pair<int, int>>& present);

// Structure layer: reads the joint-outcome inclusion of the declared
// product of x and y (MissingProduct when undeclared, BadArgument when
// x == y) and runs the lattice search.
std::optional<NondegWitness> nondegenerate_witness(const Structure& s, int x,
                                                   int y);

}  // namespace infocoh
