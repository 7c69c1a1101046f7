#include "hexholes/regions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hexholes {

namespace {

// Cells whose X/Y/Z slabs all fit inside the given intervals.
Region slab_region(int x_lo, int x_hi, int y_lo, int y_hi, int z_lo, int z_hi) {
  std::vector<TriCell> cells;
  for (int r = y_lo; r + 1 <= y_hi; ++r) {
    for (int c = x_lo; c + 1 <= x_hi; ++c) {
      if (c + r >= z_lo && c + r + 1 <= z_hi) cells.push_back(up_cell(r, c));
      if (c + r + 1 >= z_lo && c + r + 2 <= z_hi) cells.push_back(down_cell(r, c));
    }
  }
  return Region(std::move(cells));
}

void check_label_set(const LabelSet& s, int n, const char* what) {
  if (!std::is_sorted(s.begin(), s.end())) throw std::invalid_argument(std::string(what) + ": labels not sorted");
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument(std::string(what) + ": duplicate label");
  for (int v : s)
    if (v < 1 || v > n) throw std::invalid_argument(std::string(what) + ": label out of range [1, n]");
}

void check_duplicates(std::vector<TriCell> cells, const char* what) {
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    throw std::invalid_argument(std::string(what) + ": requested holes collide on a cell");
}

}  // namespace

LabelSet make_labels(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw std::invalid_argument("make_labels: duplicate label");
  return values;
}

bool labels_contain(const LabelSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

LabelSet labels_union(const LabelSet& a, const LabelSet& b) {
  if (!labels_disjoint(a, b)) throw std::invalid_argument("labels_union: sets overlap");
  LabelSet out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool labels_disjoint(const LabelSet& a, const LabelSet& b) {
  LabelSet inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  return inter.empty();
}

void validate_spec(const SnowflakeSpec& s) {
  if (s.n < 0 || s.x < 0) throw std::invalid_argument("spec: n and x must be nonnegative");
  for (int i = 0; i < 6; ++i) {
    check_label_set(s.A[static_cast<std::size_t>(i)], s.n, "spec A set");
    check_label_set(s.B[static_cast<std::size_t>(i)], s.n, "spec B set");
  }
}

bool flip_hypothesis_ok(const SnowflakeSpec& s) {
  for (int i = 0; i < 6; ++i) {
    const auto& a = s.A[static_cast<std::size_t>(i)];
    const auto& b = s.B[static_cast<std::size_t>(i)];
    if (labels_contain(a, 1) && labels_contain(b, 1)) return false;
  }
  return true;
}

SnowflakeSpec flip_spec(const SnowflakeSpec& s) {
  validate_spec(s);
  if (!flip_hypothesis_ok(s))
    throw std::invalid_argument("flip_spec: label 1 on both sides of an arm; flipped region does not exist");
  SnowflakeSpec out = s;
  out.flipped = !s.flipped;
  return out;
}

void validate_lspec(const LSpec& s) {
  if (s.n < 0 || s.x < 0) throw std::invalid_argument("L spec: n and x must be nonnegative");
  check_label_set(s.P, s.n, "L spec P");
  check_label_set(s.Q, s.n, "L spec Q");
  check_label_set(s.R, s.n, "L spec R");
  check_label_set(s.S, s.n, "L spec S");
}

namespace {

TriCell l_hole_P(const LSpec& s, int t) {
  return s.barred ? down_cell(s.n + t - 1, s.n - t) : down_cell(s.n + s.x + t - 1, s.n - t);
}
TriCell l_hole_Q(const LSpec& s, int t) {
  return s.barred ? down_cell(s.n + t - 1, s.n + s.x - 1) : down_cell(s.n + s.x + t - 1, s.n - 1);
}
TriCell l_hole_R(const LSpec& s, int t) {
  return s.barred ? up_cell(s.n + t - 1, s.n + s.x) : up_cell(s.n + s.x + t - 1, s.n);
}
TriCell l_hole_S(const LSpec& s, int t) { return up_cell(s.n, s.n + s.x + t - 1); }

std::vector<TriCell> l_hole_cells(const LSpec& s) {
  std::vector<TriCell> cells;
  for (int t : s.P) cells.push_back(l_hole_P(s, t));
  for (int t : s.Q) cells.push_back(l_hole_Q(s, t));
  for (int t : s.R) cells.push_back(l_hole_R(s, t));
  for (int t : s.S) cells.push_back(l_hole_S(s, t));
  return cells;
}

}  // namespace

bool lspec_collides(const LSpec& s) {
  validate_lspec(s);
  auto cells = l_hole_cells(s);
  std::sort(cells.begin(), cells.end());
  return std::adjacent_find(cells.begin(), cells.end()) != cells.end();
}

Region build_hexagon(const std::array<int, 6>& sides) {
  for (int v : sides)
    if (v < 0) throw std::invalid_argument("hexagon: negative side");
  if (sides[0] + sides[1] != sides[3] + sides[4] || sides[1] + sides[2] != sides[4] + sides[5])
    throw std::invalid_argument("hexagon: sides do not close up");
  const int x_hi = sides[0] + sides[1];
  const int y_hi = sides[1] + sides[2];
  return slab_region(0, x_hi, 0, y_hi, x_hi - sides[3], x_hi + sides[2]);
}

Region build_hexagon(int a, int b, int c) { return build_hexagon({a, b, c, a, b, c}); }

namespace {

Region snowflake_hexagon(const SnowflakeSpec& s) {
  const int n = s.n, x = s.x;
  if (!s.flipped) return slab_region(0, 2 * n + x, 0, 2 * n + x, n, 3 * n + x);
  return slab_region(0, 2 * n + x, -x, 2 * n, n, 3 * n + x);
}

}  // namespace

std::vector<TriCell> central_cells(const SnowflakeSpec& s) {
  const int n = s.n, x = s.x;
  std::vector<TriCell> cells;
  if (!s.flipped) {
    // up-pointing triangle with corners (n, n), (n + x, n), (n, n + x)
    for (int r = n; r <= n + x - 1; ++r) {
      for (int c = n; c + r <= 2 * n + x - 1; ++c) {
        cells.push_back(up_cell(r, c));
        if (c + r <= 2 * n + x - 2) cells.push_back(down_cell(r, c));
      }
    }
  } else {
    // down-pointing triangle with corners (n, n), (n + x, n), (n + x, n - x)
    for (int r = n - x; r <= n - 1; ++r) {
      for (int c = 2 * n - r - 1; c <= n + x - 1; ++c) {
        if (c + r >= 2 * n) cells.push_back(up_cell(r, c));
        cells.push_back(down_cell(r, c));
      }
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

TriCell hole_cell_A(const SnowflakeSpec& s, int i, int t) {
  if (i < 1 || i > 6) throw std::invalid_argument("hole_cell_A: arm index out of range");
  if (t < 1 || t > s.n) throw std::invalid_argument("hole_cell_A: label out of range");
  const int n = s.n, x = s.x;
  if (!s.flipped) {
    switch (i) {
      case 1: return down_cell(n + x + t - 1, n - t);
      case 2: return up_cell(n + x + t - 1, n);
      case 3: return down_cell(n - 1, n + x + t - 1);
      case 4: return up_cell(n - t, n + x + t - 1);
      case 5: return down_cell(n - t, n - 1);
      default: return up_cell(n, n - t);
    }
  }
  switch (i) {
    case 1: return down_cell(n + t - 1, n - t);
    case 2: return up_cell(n + t - 1, n + x);
    case 3: return down_cell(n - 1, n + x + t - 1);
    case 4: return up_cell(n - x - t, n + x + t - 1);
    case 5: return down_cell(n - x - t, n + x - 1);
    default: return up_cell(n, n - t);
  }
}

TriCell hole_cell_B(const SnowflakeSpec& s, int i, int t) {
  if (i < 1 || i > 6) throw std::invalid_argument("hole_cell_B: arm index out of range");
  if (t < 1 || t > s.n) throw std::invalid_argument("hole_cell_B: label out of range");
  const int n = s.n, x = s.x;
  if (!s.flipped) {
    switch (i) {
      case 1: return down_cell(n + x + t - 1, n - 1);
      case 2: return up_cell(n, n + x + t - 1);
      case 3: return down_cell(n - t, n + x + t - 1);
      case 4: return up_cell(n - t, n);
      case 5: return down_cell(n - 1, n - t);
      default: return up_cell(n + x + t - 1, n - t);
    }
  }
  switch (i) {
    case 1: return down_cell(n + t - 1, n + x - 1);
    case 2: return up_cell(n, n + x + t - 1);
    case 3: return down_cell(n - x - t, n + x + t - 1);
    case 4: return up_cell(n - x - t, n + x);
    case 5: return down_cell(n - 1, n - t);
    default: return up_cell(n + t - 1, n - t);
  }
}

SnowflakeGeometry snowflake_geometry(const SnowflakeSpec& s) {
  validate_spec(s);
  if (s.flipped && !flip_hypothesis_ok(s))
    throw std::invalid_argument(
        "snowflake spec: label 1 on both sides of an arm; flipped region does not exist");
  SnowflakeGeometry g;
  g.hexagon = snowflake_hexagon(s);
  g.central = central_cells(s);
  std::vector<TriCell> removals = g.central;
  for (int i = 1; i <= 6; ++i) {
    for (int t : s.A[static_cast<std::size_t>(i - 1)]) {
      const TriCell cell = hole_cell_A(s, i, t);
      g.a_holes[static_cast<std::size_t>(i - 1)].push_back(cell);
      removals.push_back(cell);
    }
    for (int t : s.B[static_cast<std::size_t>(i - 1)]) {
      const TriCell cell = hole_cell_B(s, i, t);
      g.b_holes[static_cast<std::size_t>(i - 1)].push_back(cell);
      removals.push_back(cell);
    }
  }
  check_duplicates(removals, "snowflake spec");
  g.region = g.hexagon.without(removals);
  return g;
}

Region build_snowflake(const SnowflakeSpec& s) { return snowflake_geometry(s).region; }

Region build_H(int n, int x) {
  SnowflakeSpec s;
  s.n = n;
  s.x = x;
  return build_snowflake(s);
}

Region build_L(const LSpec& s) {
  validate_lspec(s);
  const int n = s.n, x = s.x;
  const int y_hi = s.barred ? 2 * n : 2 * n + x;
  const int z_lo = s.barred ? 2 * n : 2 * n + x;
  const Region para = slab_region(z_lo - y_hi, 3 * n + x - n, n, y_hi, z_lo, 3 * n + x);
  auto holes = l_hole_cells(s);
  check_duplicates(holes, "L spec");
  return para.without(holes);
}

LatticeLine::Family arm_family(int i) {
  switch (i) {
    case 1: case 4: return LatticeLine::Family::negative;
    case 2: case 5: return LatticeLine::Family::positive;
    case 3: case 6: return LatticeLine::Family::horizontal;
    default: throw std::invalid_argument("arm_family: arm index out of range");
  }
}

LatticeLine dendrite_line(const SnowflakeSpec& s, LatticeLine::Family family) {
  const int n = s.n, x = s.x;
  switch (family) {
    case LatticeLine::Family::horizontal: return LatticeLine{family, n};
    case LatticeLine::Family::positive: return LatticeLine{family, s.flipped ? n + x : n};
    case LatticeLine::Family::negative: return LatticeLine{family, s.flipped ? 2 * n : 2 * n + x};
  }
  throw std::invalid_argument("dendrite_line: unknown family");
}

std::array<Dendrite, 3> dendrites(const SnowflakeSpec& s) {
  using F = LatticeLine::Family;
  return {Dendrite{F::horizontal, dendrite_line(s, F::horizontal), {3, 2}, {6, 5}},
          Dendrite{F::positive, dendrite_line(s, F::positive), {2, 1}, {5, 4}},
          Dendrite{F::negative, dendrite_line(s, F::negative), {1, 6}, {4, 3}}};
}

std::pair<Ratio, Ratio> snowflake_center(const SnowflakeSpec& s) {
  const int n = s.n, x = s.x;
  if (!s.flipped) return {Ratio(3 * n + x, 3), Ratio(3 * n + x, 3)};
  return {Ratio(3 * n + 2 * x, 3), Ratio(3 * n - x, 3)};
}

bool spec_cyclic(const SnowflakeSpec& s) {
  return s.A[0] == s.A[2] && s.A[2] == s.A[4] && s.A[1] == s.A[3] && s.A[3] == s.A[5] &&
         s.B[0] == s.B[2] && s.B[2] == s.B[4] && s.B[1] == s.B[3] && s.B[3] == s.B[5];
}

bool spec_mirror(const SnowflakeSpec& s) {
  return s.A[0] == s.B[0] && s.A[1] == s.B[5] && s.A[2] == s.B[4] && s.A[3] == s.B[3] &&
         s.A[4] == s.B[2] && s.A[5] == s.B[1];
}

std::pair<TriCell, TriCell> crossing_cells(const SnowflakeSpec& s, int arm, int label) {
  switch (arm) {
    case 2: return {hole_cell_A(s, 3, label), hole_cell_B(s, 2, label)};
    case 4: return {hole_cell_A(s, 5, label), hole_cell_B(s, 4, label)};
    case 6: return {hole_cell_A(s, 1, label), hole_cell_B(s, 6, label)};
    default: throw std::invalid_argument("crossing_cells: arm must be 2, 4 or 6");
  }
}

std::array<LSpec, 3> decompose_pieces(const SnowflakeSpec& s, const WTriple& w) {
  validate_spec(s);
  check_label_set(w.w2, s.n, "W2");
  check_label_set(w.w4, s.n, "W4");
  check_label_set(w.w6, s.n, "W6");
  if (!labels_disjoint(w.w2, s.A[2]) || !labels_disjoint(w.w2, s.B[1]) ||
      !labels_disjoint(w.w4, s.A[4]) || !labels_disjoint(w.w4, s.B[3]) ||
      !labels_disjoint(w.w6, s.A[0]) || !labels_disjoint(w.w6, s.B[5]))
    throw std::invalid_argument("decompose_pieces: cut label collides with an existing hole");
  const bool barred = s.flipped;
  LSpec l1{s.n, s.x, labels_union(s.A[0], w.w6), s.B[0], s.A[1], labels_union(s.B[1], w.w2), barred};
  LSpec l2{s.n, s.x, labels_union(s.A[2], w.w2), s.B[2], s.A[3], labels_union(s.B[3], w.w4), barred};
  LSpec l3{s.n, s.x, labels_union(s.A[4], w.w4), s.B[4], s.A[5], labels_union(s.B[5], w.w6), barred};
  return {l1, l2, l3};
}

namespace {

LabelSet complement_of(const LabelSet& a, const LabelSet& b, int n) {
  LabelSet out;
  for (int v = 1; v <= n; ++v)
    if (!labels_contain(a, v) && !labels_contain(b, v)) out.push_back(v);
  return out;
}

std::vector<LabelSet> all_subsets(const LabelSet& base) {
  std::vector<LabelSet> out;
  const std::size_t m = base.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    LabelSet sub;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(base[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

std::vector<WTriple> admissible_w_triples(const SnowflakeSpec& s) {
  validate_spec(s);
  const auto subs2 = all_subsets(complement_of(s.A[2], s.B[1], s.n));
  const auto subs4 = all_subsets(complement_of(s.A[4], s.B[3], s.n));
  const auto subs6 = all_subsets(complement_of(s.A[0], s.B[5], s.n));
  std::vector<WTriple> out;
  out.reserve(subs2.size() * subs4.size() * subs6.size());
  for (const auto& w2 : subs2)
    for (const auto& w4 : subs4)
      for (const auto& w6 : subs6) out.push_back(WTriple{w2, w4, w6});
  return out;
}

Isometry piece_placement(const SnowflakeSpec& s, int piece) {
  const auto [cc, cr] = snowflake_center(s);
  switch (piece) {
    case 1: return Isometry{IsoKind::identity, cc, cr};
    case 2: return rotation240(cc, cr);
    case 3: return rotation120(cc, cr);
    default: throw std::invalid_argument("piece_placement: piece must be 1, 2 or 3");
  }
}

}  // namespace hexholes
