#include "hexholes/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace hexholes {

std::array<std::pair<int, int>, 3> TriCell::vertices() const {
  const int c = col, r = row;
  if (is_up()) return {{{c, r}, {c + 1, r}, {c, r + 1}}};
  return {{{c + 1, r}, {c, r + 1}, {c + 1, r + 1}}};
}

std::string TriCell::str() const {
  return (is_up() ? std::string("up(") : std::string("down(")) + std::to_string(row) + "," +
         std::to_string(col) + ")";
}

TriCell up_cell(int row, int col) { return TriCell{row, col, Orient::up}; }
TriCell down_cell(int row, int col) { return TriCell{row, col, Orient::down}; }

std::array<TriCell, 3> neighbors(const TriCell& t) {
  const int r = t.row, c = t.col;
  if (t.is_up()) {
    // below (vertical lozenge), left (left lozenge), right (right lozenge)
    return {down_cell(r - 1, c), down_cell(r, c - 1), down_cell(r, c)};
  }
  return {up_cell(r, c), up_cell(r, c + 1), up_cell(r + 1, c)};
}

bool adjacent(const TriCell& s, const TriCell& t) {
  const auto ns = neighbors(s);
  return std::find(ns.begin(), ns.end(), t) != ns.end();
}

Lozenge lozenge_of(TriCell s, TriCell t) {
  if (!adjacent(s, t)) throw std::invalid_argument("lozenge_of: cells not adjacent");
  if (t < s) std::swap(s, t);
  const TriCell& u = s.is_up() ? s : t;
  const TriCell& d = s.is_up() ? t : s;
  LozKind k;
  if (d == down_cell(u.row, u.col)) k = LozKind::right;
  else if (d == down_cell(u.row - 1, u.col)) k = LozKind::vertical;
  else k = LozKind::left;
  return Lozenge{s, t, k};
}

Region::Region(std::vector<TriCell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
    throw std::invalid_argument("Region: duplicate cell");
}

bool Region::contains(const TriCell& t) const {
  return std::binary_search(cells_.begin(), cells_.end(), t);
}

std::size_t Region::index_of(const TriCell& t) const {
  const auto it = std::lower_bound(cells_.begin(), cells_.end(), t);
  if (it == cells_.end() || *it != t) throw std::invalid_argument("Region: cell absent");
  return static_cast<std::size_t>(it - cells_.begin());
}

std::size_t Region::up_count() const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [](const TriCell& t) { return t.is_up(); }));
}

std::size_t Region::down_count() const { return cells_.size() - up_count(); }

Region Region::without(const std::vector<TriCell>& holes) const {
  std::vector<TriCell> sorted_holes = holes;
  std::sort(sorted_holes.begin(), sorted_holes.end());
  if (std::adjacent_find(sorted_holes.begin(), sorted_holes.end()) != sorted_holes.end())
    throw std::invalid_argument("Region::without: hole listed twice");
  std::vector<TriCell> rest;
  rest.reserve(cells_.size());
  std::set_difference(cells_.begin(), cells_.end(), sorted_holes.begin(), sorted_holes.end(),
                      std::back_inserter(rest));
  if (rest.size() + sorted_holes.size() != cells_.size())
    throw std::invalid_argument("Region::without: hole not contained in region");
  return Region(std::move(rest));
}

bool is_balanced(const Region& r) { return r.up_count() == r.down_count(); }

bool cell_on_line(const TriCell& t, const LatticeLine& line) {
  switch (line.family) {
    case LatticeLine::Family::horizontal:
      return line.index == (t.is_up() ? t.row : t.row + 1);
    case LatticeLine::Family::positive:
      return line.index == (t.is_up() ? t.col : t.col + 1);
    case LatticeLine::Family::negative:
      return line.index == t.row + t.col + 1;
  }
  return false;
}

namespace {

bool is_integer(const Ratio& q) { return boost::multiprecision::denominator(q) == 1; }

int to_int(const Ratio& q) {
  return static_cast<int>(boost::multiprecision::numerator(q).convert_to<long long>());
}

// Rebuild a cell from the images of its three corners; throws if they do not
// form a unit cell (which would mean the isometry is not lattice-compatible).
TriCell cell_from_vertices(std::array<std::pair<int, int>, 3> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return std::pair(a.second, a.first) < std::pair(b.second, b.first);
  });
  TriCell t;
  if (pts[0].second == pts[1].second) t = up_cell(pts[0].second, pts[0].first);
  else t = down_cell(pts[0].second, pts[1].first);
  auto expect = t.vertices();
  std::sort(expect.begin(), expect.end(), [](const auto& a, const auto& b) {
    return std::pair(a.second, a.first) < std::pair(b.second, b.first);
  });
  for (int i = 0; i < 3; ++i)
    if (expect[static_cast<std::size_t>(i)] != pts[static_cast<std::size_t>(i)])
      throw std::logic_error("isometry does not map cells to cells");
  return t;
}

}  // namespace

bool Isometry::lattice_compatible() const {
  const Ratio m1 = 2 * center_col + center_row;
  const Ratio m2 = center_row - center_col;
  switch (kind) {
    case IsoKind::identity: return true;
    case IsoKind::rotate120:
    case IsoKind::rotate240: return is_integer(m1) && is_integer(m2);
    case IsoKind::reflect_vertical: return is_integer(m1);
  }
  return false;
}

std::pair<int, int> Isometry::map_point(int col, int row) const {
  if (!lattice_compatible()) throw std::invalid_argument("isometry center not lattice-compatible");
  switch (kind) {
    case IsoKind::identity: return {col, row};
    case IsoKind::rotate120: {
      const int m1 = to_int(2 * center_col + center_row);
      const int m2 = to_int(center_row - center_col);
      return {m1 - col - row, m2 + col};
    }
    case IsoKind::rotate240: {
      const int m1 = to_int(2 * center_col + center_row);
      const int m2 = to_int(center_row - center_col);
      return {row - m2, m1 + m2 - col - row};
    }
    case IsoKind::reflect_vertical: {
      const int m1 = to_int(2 * center_col + center_row);
      return {m1 - col - row, row};
    }
  }
  throw std::logic_error("unknown isometry kind");
}

TriCell Isometry::map_cell(const TriCell& t) const {
  const auto vs = t.vertices();
  std::array<std::pair<int, int>, 3> imgs;
  for (int i = 0; i < 3; ++i) {
    const auto& [c, r] = vs[static_cast<std::size_t>(i)];
    imgs[static_cast<std::size_t>(i)] = map_point(c, r);
  }
  return cell_from_vertices(imgs);
}

Isometry rotation120(const Ratio& center_col, const Ratio& center_row) {
  return Isometry{IsoKind::rotate120, center_col, center_row};
}

Isometry rotation240(const Ratio& center_col, const Ratio& center_row) {
  return Isometry{IsoKind::rotate240, center_col, center_row};
}

Isometry vertical_reflection(const Ratio& center_col, const Ratio& center_row) {
  return Isometry{IsoKind::reflect_vertical, center_col, center_row};
}

Region apply_isometry(const Isometry& iso, const Region& r) {
  std::vector<TriCell> out;
  out.reserve(r.size());
  for (const TriCell& t : r.cells()) out.push_back(iso.map_cell(t));
  return Region(std::move(out));
}

Lozenge apply_isometry(const Isometry& iso, const Lozenge& l) {
  return lozenge_of(iso.map_cell(l.a), iso.map_cell(l.b));
}

}  // namespace hexholes
