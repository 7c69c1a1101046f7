#pragma once

#include "hexholes/numeric.hpp"
#include "hexholes/regions.hpp"

#include <utility>
#include <vector>

namespace hexholes {

// Rising factorial (a)_k = a (a+1) ... (a+k-1); requires a >= 1, k >= 0.
Count pochhammer(long long a, long long k);

struct LatticePoint {
  long long x = 0;
  long long y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Paths move one unit east (+x) or south (-y) per step.
Count path_count(const LatticePoint& from, const LatticePoint& to);

// det[ path_count(starts[i], ends[j]) ]; with compatibly ordered points this
// counts vertex-disjoint path families. Throws if sizes differ.
Count lgv_determinant(const std::vector<LatticePoint>& starts,
                      const std::vector<LatticePoint>& ends);

struct PathSystem {
  std::vector<LatticePoint> starts, ends;
};

// Tilings of an L-region biject with two-stage families of non-intersecting
// paths that meet on the diagonal; summation runs over the free label set U.
struct UClass {
  LabelSet u;           // subset of [n] minus (Q union R)
  LabelSet mid_first;   // (complement of Q, intersect R) union U: first-stage ends
  LabelSet mid_second;  // (Q intersect complement of R) union U: second-stage starts
};

// All classes, U-subsets in lexicographic order; empty exactly when the size
// constraints force the count to 0.
std::vector<UClass> u_classes(const LSpec& s);

std::pair<PathSystem, PathSystem> l_path_systems(const LSpec& s, const UClass& cls);

struct USummand {
  UClass cls;
  Count first, second;  // stage determinants, each nonnegative
  Count term;           // their product
};
std::vector<USummand> count_L_lgv_terms(const LSpec& s);

// Backend 3 for L-regions: the sum of the class terms.
Count count_L_lgv(const LSpec& s);

// Flipped-over-unflipped ratio for one L-piece: products of (label)_x over
// the down-pointing hole sets P, Q divided by the up-pointing R, S.
Ratio ratio_rhs_L(const LSpec& s);

// Checks the exact identity
//   det[ C(x+p_i-1, x+r_j-1) ] * prod_j (r_j)_x
//     == det[ C(p_i-1, r_j-1) ] * prod_i (p_i)_x
// for strictly increasing positive label vectors of equal length.
bool factorization_check(const std::vector<int>& p, const std::vector<int>& r, int x);

}  // namespace hexholes
