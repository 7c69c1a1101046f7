#pragma once

#include "hexholes/numeric.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hexholes {

// Unit triangles of the triangular lattice. Lattice points carry integer
// coordinates (col, row) in the basis e1 = (1, 0), e2 = (1/2, sqrt(3)/2), so
// the point (c, r) sits at c*e1 + r*e2 and rows are horizontal strips of unit
// height. The up-pointing cell at (row r, col c) has vertices (c, r),
// (c+1, r), (c, r+1); the down-pointing cell there has vertices (c+1, r),
// (c, r+1), (c+1, r+1).
//
// Three families of lattice lines bound cells:
//   horizontal  Y = r        (rows)
//   positive    X = c        (slope +60 degrees)
//   negative    Z = c + r    (slope -60 degrees)
// Both cells at (r, c) span X in [c, c+1] and Y in [r, r+1]; the up cell
// spans Z in [c+r, c+r+1], the down cell Z in [c+r+1, c+r+2].

enum class Orient : std::uint8_t { up = 0, down = 1 };

struct TriCell {
  int row = 0;
  int col = 0;
  Orient orient = Orient::up;

  friend auto operator<=>(const TriCell&, const TriCell&) = default;

  bool is_up() const { return orient == Orient::up; }
  // Lower edge of the cell's Z-slab.
  int zmin() const { return row + col + (is_up() ? 0 : 1); }
  // The three corners as (col, row) lattice points.
  std::array<std::pair<int, int>, 3> vertices() const;
  std::string str() const;
};

TriCell up_cell(int row, int col);
TriCell down_cell(int row, int col);

// The three edge-neighbors in the unbounded lattice, in increasing cell order.
std::array<TriCell, 3> neighbors(const TriCell& t);
bool adjacent(const TriCell& s, const TriCell& t);

// A lozenge is a pair of adjacent cells. Its kind names the long-diagonal
// direction of the rhombus: two cells sharing a horizontal edge form a
// `vertical` lozenge, sharing a positive-slope edge a `left` one, and sharing
// a negative-slope edge a `right` one.
enum class LozKind : std::uint8_t { left = 0, vertical = 1, right = 2 };

struct Lozenge {
  TriCell a, b;  // canonical: a < b
  LozKind kind = LozKind::left;

  friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

// Throws std::invalid_argument if the cells are not adjacent.
Lozenge lozenge_of(TriCell s, TriCell t);

// A finite set of cells, kept sorted and duplicate-free.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<TriCell> cells);  // throws on duplicates

  const std::vector<TriCell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(const TriCell& t) const;
  std::size_t index_of(const TriCell& t) const;  // throws if absent
  std::size_t up_count() const;
  std::size_t down_count() const;

  // Removes the given cells; throws if one is absent (or listed twice).
  Region without(const std::vector<TriCell>& holes) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<TriCell> cells_;
};

// Equal numbers of up- and down-pointing cells (necessary for tileability).
bool is_balanced(const Region& r);

struct LatticeLine {
  enum class Family : std::uint8_t { horizontal = 0, positive = 1, negative = 2 };
  Family family = Family::horizontal;
  int index = 0;

  friend auto operator<=>(const LatticeLine&, const LatticeLine&) = default;
};

// True when t has a full side lying on the line.
bool cell_on_line(const TriCell& t, const LatticeLine& line);

// Exact plane isometries compatible with the lattice. `center_col/row` give
// the fixed point in (col, row) coordinates; rotations are counterclockwise
// about it, `reflect_vertical` reflects across the vertical (Euclidean) line
// through it. Only centers for which the lattice maps to itself are valid.
enum class IsoKind : std::uint8_t { identity = 0, rotate120 = 1, rotate240 = 2, reflect_vertical = 3 };

struct Isometry {
  IsoKind kind = IsoKind::identity;
  Ratio center_col{0};
  Ratio center_row{0};

  bool lattice_compatible() const;
  std::pair<int, int> map_point(int col, int row) const;  // throws if incompatible
  TriCell map_cell(const TriCell& t) const;
};

Isometry rotation120(const Ratio& center_col, const Ratio& center_row);
Isometry rotation240(const Ratio& center_col, const Ratio& center_row);
Isometry vertical_reflection(const Ratio& center_col, const Ratio& center_row);

Region apply_isometry(const Isometry& iso, const Region& r);
Lozenge apply_isometry(const Isometry& iso, const Lozenge& l);

}  // namespace hexholes
