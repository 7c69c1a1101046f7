#pragma once

#include "hexholes/lattice.hpp"
#include "hexholes/numeric.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace hexholes {

// A lozenge tiling: a perfect matching of the region's cells, stored as
// lozenges sorted by their (lower) cells.
struct Tiling {
  std::vector<Lozenge> lozenges;

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

// Visits every tiling in a fixed deterministic order (depth-first search
// branching on the least uncovered cell, partners in increasing cell order).
// Stops early when `visit` returns false. Returns the number visited.
Count for_each_tiling(const Region& r, const std::function<bool(const Tiling&)>& visit);

// First `cap` tilings in enumeration order (all of them if cap is empty).
std::vector<Tiling> enumerate_tilings(const Region& r, std::optional<std::size_t> cap = {});

// Backend 1: exhaustive enumeration.
Count count_enumeration(const Region& r);

// Backend 2: determinant of a signed bipartite adjacency matrix. Signs come
// from an orientation in which every bounded face of the cell-adjacency
// graph has an odd number of edges agreeing with a fixed traversal sense
// (computed per connected component from a spanning tree and the tree of
// bounded faces). Exact integer arithmetic throughout.
Count count_determinant(const Region& r);

// Symmetry classes of tilings. `rotation` must generate the order-3
// rotation group of the region, `reflection` its vertical mirror.
enum class SymTag { r, v, rv };
struct SymmetryClass {
  SymTag tag = SymTag::r;
  Isometry rotation;    // used by r and rv
  Isometry reflection;  // used by v and rv
};

// Number of tilings fixed by the given symmetries, by filtering the full
// enumeration. Throws if the region is not invariant under the isometries.
Count count_symmetric(const Region& r, const SymmetryClass& cls);

// Lozenges common to all tilings. Throws std::invalid_argument if the
// region has no tiling at all.
std::vector<Lozenge> forced_lozenges(const Region& r);

}  // namespace hexholes
