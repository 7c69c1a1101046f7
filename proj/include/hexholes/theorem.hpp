#pragma once

#include "hexholes/counting.hpp"
#include "hexholes/lgv.hpp"
#include "hexholes/regions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hexholes {

// Boxed plane-partition product formula; the tiling count of the
// (a, b, c, a, b, c) hexagon.
Count macmahon(int a, int b, int c);

// Flipped-over-unflipped tiling-count ratio as a product of rising
// factorials: down-pointing hole labels (odd arms) in the numerator,
// up-pointing (even arms) in the denominator.
Ratio ratio_rhs_snowflake(const SnowflakeSpec& s);
// Cube root of the above for cyclically symmetric specs (counts of
// rotation-invariant tilings); requires spec_cyclic.
Ratio ratio_rhs_cyclic(const SnowflakeSpec& s);
// Square root for mirror-symmetric specs (reflection-invariant tilings);
// requires spec_mirror.
Ratio ratio_rhs_vertical(const SnowflakeSpec& s);
// Sixth root for specs with both symmetries; requires both.
Ratio ratio_rhs_cyclic_vertical(const SnowflakeSpec& s);

// Euclidean distance between the midpoints of the sides the two cells have
// on the given line; throws if either cell has no side there.
Ratio distance_on_line(const TriCell& a, const TriCell& b, const LatticeLine& line);
// The cells of `hole` with a side on the line.
std::vector<TriCell> projection(const std::vector<TriCell>& hole, const LatticeLine& line);
// The ratio formula in geometric form: for each unit hole, the product of
// its distances to the projection of the central triangle onto the hole's
// diagonal; down-pointing holes contribute to the numerator.
Ratio ratio_rhs_geometric(const SnowflakeSpec& s);

// Backend 3 for snowflake regions: cut the even arms, sum over admissible
// cut classes, count each piece via its path-system determinants. Cut
// classes whose piece holes collide are empty and contribute 0.
Count count_H_via_decomposition(const SnowflakeSpec& s);

// Rotation-invariant tilings counted through a single piece per cut class;
// scales far beyond filtering the enumeration. Requires spec_cyclic.
Count cyclic_count_via_L(const SnowflakeSpec& s);

// Rotation/reflection isometries of the region for count_symmetric.
SymmetryClass snowflake_symmetry(const SnowflakeSpec& s, SymTag tag);

enum class VerifyRoute { enumeration, determinant, lgv };

struct RouteCount {
  VerifyRoute route;
  Count value;
};

struct SymmetryCheck {
  SymTag tag = SymTag::r;
  bool checked = false;  // false when the class applies but was not evaluated
  Count fixed_h, fixed_hbar;
  // Closed form for the class ratio; absent when the region is symmetric but
  // the label pattern is not, in which case the check falls back to the root
  // identity against the full counts.
  std::optional<Ratio> formula;
  bool vacuous = false;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  SnowflakeSpec spec_h;     // unflipped orientation
  SnowflakeSpec spec_hbar;  // flipped orientation
  std::vector<RouteCount> counts_h, counts_hbar;
  bool routes_agree = false;
  Count m_h, m_hbar;
  bool vacuous = false;           // m_h == 0
  std::optional<Ratio> measured;  // m_hbar / m_h when not vacuous
  Ratio formula;
  Ratio geometric;
  bool ratio_pass = false;
  bool geometric_pass = false;
  std::vector<SymmetryCheck> symmetry;
  bool pass = false;
};

// Counts both orientations along the requested routes (determinant when
// empty), requires cross-route agreement, compares the measured ratio with
// the product formula and its geometric form, and checks the symmetric
// variants whenever the region is invariant under the isometries.
VerificationReport verify(const SnowflakeSpec& s, const std::vector<VerifyRoute>& routes);

// Same, but all tiling counts are taken from `count_spec` while the ratio
// formulas use `s`; the command-line negative control passes a deliberately
// mislabeled count_spec here and expects the comparison to fail.
VerificationReport verify_with_counts_from(const SnowflakeSpec& s,
                                           const SnowflakeSpec& count_spec,
                                           const std::vector<VerifyRoute>& routes);

}  // namespace hexholes
