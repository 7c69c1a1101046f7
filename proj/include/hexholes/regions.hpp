#pragma once

#include "hexholes/lattice.hpp"

#include <array>
#include <vector>

namespace hexholes {

// Sorted duplicate-free labels, each in [1, n] for the spec's n.
using LabelSet = std::vector<int>;

LabelSet make_labels(std::vector<int> values);  // sorts, rejects duplicates
bool labels_contain(const LabelSet& s, int v);
LabelSet labels_union(const LabelSet& a, const LabelSet& b);      // throws on overlap
bool labels_disjoint(const LabelSet& a, const LabelSet& b);

// A hexagonal region with a central triangular hole and six arms of unit
// holes fastened to the three long diagonals. `n` bounds the labels, `x` is
// the side of the central triangle (and the side-length excess of the
// hexagon). A[i-1]/B[i-1] hold the label sets for arms i = 1..6; `flipped`
// selects the orientation in which the central triangle points down and
// every non-horizontal unit hole is carried along its diagonal accordingly.
struct SnowflakeSpec {
  int n = 0;
  int x = 0;
  std::array<LabelSet, 6> A{};
  std::array<LabelSet, 6> B{};
  bool flipped = false;

  friend bool operator==(const SnowflakeSpec&, const SnowflakeSpec&) = default;
};

void validate_spec(const SnowflakeSpec& s);  // ranges and sortedness
// True when no label-1 hole is requested on both sides of the same arm
// (1 not in A_i intersect B_i for every i); exactly the condition under
// which both orientations of the region exist.
bool flip_hypothesis_ok(const SnowflakeSpec& s);
SnowflakeSpec flip_spec(const SnowflakeSpec& s);  // throws if the hypothesis fails

// An L-shaped piece: a parallelogram with unit holes P, Q (down-pointing)
// and R, S (up-pointing) hanging off two of its sides. `barred` selects the
// variant cut from the flipped orientation.
struct LSpec {
  int n = 0;
  int x = 0;
  LabelSet P, Q, R, S;
  bool barred = false;

  friend bool operator==(const LSpec&, const LSpec&) = default;
};

void validate_lspec(const LSpec& s);  // ranges and sortedness
// True when two requested holes land on the same cell in this orientation,
// which makes the region unbuildable.
bool lspec_collides(const LSpec& s);

// Region builders. All regions are exact cell sets in the shared lattice
// coordinates; no translation is applied anywhere, so set algebra between
// related regions is meaningful.
Region build_hexagon(const std::array<int, 6>& sides);  // clockwise from the top side
Region build_hexagon(int a, int b, int c);              // sides (a, b, c, a, b, c)
Region build_H(int n, int x);                           // hexagon minus central triangle
Region build_snowflake(const SnowflakeSpec& s);
Region build_L(const LSpec& s);

// Cells removed for the hole with the given label on arm i (1-based).
TriCell hole_cell_A(const SnowflakeSpec& s, int i, int label);
TriCell hole_cell_B(const SnowflakeSpec& s, int i, int label);
std::vector<TriCell> central_cells(const SnowflakeSpec& s);

struct SnowflakeGeometry {
  Region hexagon;                 // before any removal
  std::vector<TriCell> central;   // central triangle cells
  std::array<std::vector<TriCell>, 6> a_holes;  // per arm, in label order
  std::array<std::vector<TriCell>, 6> b_holes;
  Region region;                  // hexagon minus central minus holes
};
SnowflakeGeometry snowflake_geometry(const SnowflakeSpec& s);

// A long diagonal together with the two arms of unit holes fastened to it.
struct DendriteArm {
  int a_set = 0;  // 1-based A-family index on this arm
  int b_set = 0;  // 1-based B-family index
};
struct Dendrite {
  LatticeLine::Family family = LatticeLine::Family::horizontal;
  LatticeLine line;       // supporting line in the spec's orientation
  DendriteArm arm_pos;    // arm in the increasing-parameter direction
  DendriteArm arm_neg;
};
std::array<Dendrite, 3> dendrites(const SnowflakeSpec& s);
LatticeLine dendrite_line(const SnowflakeSpec& s, LatticeLine::Family family);
// The dendrite family that carries arm i (and so the sets A_i, B_i).
LatticeLine::Family arm_family(int i);

// Center of the region (in (col, row) coordinates) used by its rotations and
// its vertical mirror axis.
std::pair<Ratio, Ratio> snowflake_center(const SnowflakeSpec& s);
// Set-level symmetry of the spec (equivalent to geometric invariance of the
// region under the corresponding isometries about snowflake_center).
bool spec_cyclic(const SnowflakeSpec& s);
bool spec_mirror(const SnowflakeSpec& s);

// Cutting the three even arms splits the region into three congruent-shape
// L-pieces. A cut lozenge at label t on arm 2/4/6 contributes an extra hole
// label to the two pieces meeting there; `WTriple` records the cut labels.
struct WTriple {
  LabelSet w2, w4, w6;

  friend bool operator==(const WTriple&, const WTriple&) = default;
};

// The two cells of the lozenge crossing the given even arm at label t.
std::pair<TriCell, TriCell> crossing_cells(const SnowflakeSpec& s, int arm, int label);

// Piece specs for the given cut; piece 1 keeps arms 6/1/2, piece 2 arms
// 2/3/4, piece 3 arms 4/5/6. Throws if a W-label collides with the hole
// labels already present on its arm.
std::array<LSpec, 3> decompose_pieces(const SnowflakeSpec& s, const WTriple& w);
// All label-wise admissible cuts, in a fixed deterministic order.
std::vector<WTriple> admissible_w_triples(const SnowflakeSpec& s);
// Isometry placing build_L(decompose_pieces(s, w)[piece-1]) onto the cells
// the piece occupies inside the region (identity for piece 1).
Isometry piece_placement(const SnowflakeSpec& s, int piece);

}  // namespace hexholes
