#include "hexholes/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hexholes {

namespace {

// Region cells with region-index adjacency and precomputed lozenges.
struct CellGraph {
  std::vector<TriCell> cells;
  std::vector<std::array<int, 3>> nbr;      // -1 when the neighbor is outside
  std::vector<std::array<Lozenge, 3>> loz;  // valid where nbr >= 0

  explicit CellGraph(const Region& r) : cells(r.cells()) {
    nbr.resize(cells.size());
    loz.resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto ns = neighbors(cells[i]);
      for (std::size_t k = 0; k < 3; ++k) {
        if (r.contains(ns[k])) {
          nbr[i][k] = static_cast<int>(r.index_of(ns[k]));
          loz[i][k] = lozenge_of(cells[i], ns[k]);
        } else {
          nbr[i][k] = -1;
        }
      }
    }
  }
};

// Depth-first search branching on the least uncovered cell, partners tried
// in increasing cell order; visits complete matchings as partner vectors.
class Enumerator {
 public:
  Enumerator(const CellGraph& g, std::function<bool(const std::vector<int>&)> on_matching)
      : g_(g), partner_(g.cells.size(), -1), on_matching_(std::move(on_matching)) {}

  Count run() {
    if (g_.cells.size() % 2 == 0) dfs(0);
    return found_;
  }

 private:
  bool dfs(std::size_t hint) {
    std::size_t i = hint;
    while (i < partner_.size() && partner_[i] >= 0) ++i;
    if (i == partner_.size()) {
      ++found_;
      return on_matching_ ? on_matching_(partner_) : true;
    }
    for (std::size_t k = 0; k < 3; ++k) {
      const int j = g_.nbr[i][k];
      if (j < 0 || partner_[static_cast<std::size_t>(j)] >= 0) continue;
      partner_[i] = j;
      partner_[static_cast<std::size_t>(j)] = static_cast<int>(i);
      const bool keep = dfs(i + 1);
      partner_[i] = -1;
      partner_[static_cast<std::size_t>(j)] = -1;
      if (!keep) return false;
    }
    return true;
  }

  const CellGraph& g_;
  std::vector<int> partner_;
  std::function<bool(const std::vector<int>&)> on_matching_;
  Count found_ = 0;
};

Tiling tiling_from_partner(const CellGraph& g, const std::vector<int>& partner) {
  Tiling t;
  t.lozenges.reserve(partner.size() / 2);
  for (std::size_t i = 0; i < partner.size(); ++i) {
    const int j = partner[i];
    if (j < 0 || static_cast<std::size_t>(j) < i) continue;
    for (std::size_t k = 0; k < 3; ++k) {
      if (g.nbr[i][k] == j) {
        t.lozenges.push_back(g.loz[i][k]);
        break;
      }
    }
  }
  return t;
}

}  // namespace

Count for_each_tiling(const Region& r, const std::function<bool(const Tiling&)>& visit) {
  const CellGraph g(r);
  Enumerator e(g, visit ? std::function<bool(const std::vector<int>&)>(
                              [&](const std::vector<int>& partner) {
                                return visit(tiling_from_partner(g, partner));
                              })
                        : nullptr);
  return e.run();
}

std::vector<Tiling> enumerate_tilings(const Region& r, std::optional<std::size_t> cap) {
  std::vector<Tiling> out;
  if (cap && *cap == 0) return out;
  for_each_tiling(r, [&](const Tiling& t) {
    out.push_back(t);
    return !cap || out.size() < *cap;
  });
  return out;
}

Count count_enumeration(const Region& r) {
  const CellGraph g(r);
  return Enumerator(g, nullptr).run();
}

Count count_symmetric(const Region& r, const SymmetryClass& cls) {
  std::vector<std::vector<int>> perms;
  const auto add_perm = [&](const Isometry& iso, std::initializer_list<IsoKind> allowed) {
    if (std::find(allowed.begin(), allowed.end(), iso.kind) == allowed.end())
      throw std::invalid_argument("count_symmetric: isometry kind does not match the class");
    if (!(apply_isometry(iso, r) == r))
      throw std::invalid_argument("count_symmetric: region not invariant under isometry");
    std::vector<int> sigma(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      sigma[i] = static_cast<int>(r.index_of(iso.map_cell(r.cells()[i])));
    perms.push_back(std::move(sigma));
  };
  if (cls.tag == SymTag::r || cls.tag == SymTag::rv)
    add_perm(cls.rotation, {IsoKind::rotate120, IsoKind::rotate240});
  if (cls.tag == SymTag::v || cls.tag == SymTag::rv)
    add_perm(cls.reflection, {IsoKind::reflect_vertical});

  Count fixed = 0;
  const CellGraph g(r);
  Enumerator e(g, [&](const std::vector<int>& partner) {
    for (const auto& sigma : perms)
      for (std::size_t i = 0; i < partner.size(); ++i)
        if (partner[static_cast<std::size_t>(sigma[i])] !=
            sigma[static_cast<std::size_t>(partner[i])])
          return true;  // not fixed by this symmetry; keep enumerating
    ++fixed;
    return true;
  });
  e.run();
  return fixed;
}

namespace {

// One connected component for the determinant backend.
struct ComponentEdge {
  int u = -1, d = -1;  // component-local node ids, u up-pointing, d down-pointing
};

Count component_count(const CellGraph& g, const std::vector<int>& comp) {
  const std::size_t nv = comp.size();
  std::vector<int> local(g.cells.size(), -1);
  for (std::size_t i = 0; i < nv; ++i) local[static_cast<std::size_t>(comp[i])] = static_cast<int>(i);

  std::vector<int> ups, downs;          // local ids
  std::vector<int> side_index(nv, -1);  // row (up) / column (down) in the matrix
  for (std::size_t i = 0; i < nv; ++i) {
    if (g.cells[static_cast<std::size_t>(comp[i])].is_up()) {
      side_index[i] = static_cast<int>(ups.size());
      ups.push_back(static_cast<int>(i));
    } else {
      side_index[i] = static_cast<int>(downs.size());
      downs.push_back(static_cast<int>(i));
    }
  }
  if (ups.size() != downs.size()) return 0;

  // Edges and, per node, incident edges in counterclockwise rotation order.
  // Up cells create the edges first; down cells then look their edges up, so
  // order of creation never matters.
  std::vector<ComponentEdge> edges;
  std::vector<std::vector<int>> incident(nv);
  std::vector<std::array<int, 2>> edge_pos;  // position within u's / d's list
  const auto ccw_neighbors = [&](std::size_t gi) {
    // counterclockwise neighbor order: up cells E, NW, S; down cells N, SW, SE
    return g.cells[gi].is_up()
               ? std::array<int, 3>{g.nbr[gi][2], g.nbr[gi][1], g.nbr[gi][0]}
               : std::array<int, 3>{g.nbr[gi][2], g.nbr[gi][0], g.nbr[gi][1]};
  };
  for (std::size_t i = 0; i < nv; ++i) {
    const std::size_t gi = static_cast<std::size_t>(comp[i]);
    if (!g.cells[gi].is_up()) continue;
    for (int gj : ccw_neighbors(gi)) {
      if (gj < 0) continue;
      edges.push_back(ComponentEdge{static_cast<int>(i), local[static_cast<std::size_t>(gj)]});
      edge_pos.push_back({static_cast<int>(incident[i].size()), -1});
      incident[i].push_back(static_cast<int>(edges.size()) - 1);
    }
  }
  for (std::size_t i = 0; i < nv; ++i) {
    const std::size_t gi = static_cast<std::size_t>(comp[i]);
    if (g.cells[gi].is_up()) continue;
    for (int gj : ccw_neighbors(gi)) {
      if (gj < 0) continue;
      const int j = local[static_cast<std::size_t>(gj)];
      int eid = -1;
      for (int cand : incident[static_cast<std::size_t>(j)])
        if (edges[static_cast<std::size_t>(cand)].d == static_cast<int>(i)) eid = cand;
      if (eid < 0) throw std::logic_error("component_count: asymmetric adjacency");
      edge_pos[static_cast<std::size_t>(eid)][1] = static_cast<int>(incident[i].size());
      incident[i].push_back(eid);
    }
  }
  const std::size_t ne = edges.size();
  if (ne == 0) return nv == 0 ? 1 : 0;

  // Face tracing: half-edge 2*e is u->d, 2*e+1 is d->u; the successor of a
  // half-edge arriving at v continues along the previous incident edge of v
  // in counterclockwise order, which keeps the enclosed face on the left and
  // traces bounded faces counterclockwise.
  const auto next_half = [&](int h) {
    const int e = h / 2;
    const bool to_down = (h % 2) == 0;
    const int v = to_down ? edges[static_cast<std::size_t>(e)].d : edges[static_cast<std::size_t>(e)].u;
    const int pos = edge_pos[static_cast<std::size_t>(e)][to_down ? 1 : 0];
    const auto& inc = incident[static_cast<std::size_t>(v)];
    const int e2 = inc[(static_cast<std::size_t>(pos) + inc.size() - 1) % inc.size()];
    // leaving v: direction is fixed by v's orientation (bipartite graph)
    const bool v_up = g.cells[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].is_up();
    return 2 * e2 + (v_up ? 0 : 1);
  };

  std::vector<int> face_of_half(2 * ne, -1);
  std::vector<std::vector<int>> faces;  // half-edge walks
  std::vector<long long> area2;
  for (std::size_t h0 = 0; h0 < 2 * ne; ++h0) {
    if (face_of_half[h0] >= 0) continue;
    const int fid = static_cast<int>(faces.size());
    std::vector<int> walk;
    long long area = 0;
    int h = static_cast<int>(h0);
    do {
      face_of_half[static_cast<std::size_t>(h)] = fid;
      walk.push_back(h);
      const auto& e = edges[static_cast<std::size_t>(h / 2)];
      const int from = (h % 2) == 0 ? e.u : e.d;
      const int to = (h % 2) == 0 ? e.d : e.u;
      // shoelace term over tripled centroids, exact in the lattice basis
      const auto cen = [&](int v) {
        const TriCell& t = g.cells[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
        const long long off = t.is_up() ? 1 : 2;
        return std::pair<long long, long long>(3LL * t.col + off, 3LL * t.row + off);
      };
      const auto [x1, y1] = cen(from);
      const auto [x2, y2] = cen(to);
      area += x1 * y2 - x2 * y1;
      h = next_half(h);
    } while (h != static_cast<int>(h0));
    faces.push_back(std::move(walk));
    area2.push_back(area);
  }
  const long long bounded = static_cast<long long>(ne) - static_cast<long long>(nv) + 1;
  if (static_cast<long long>(faces.size()) != bounded + 1)
    throw std::logic_error("component_count: face count violates Euler's formula");

  std::size_t outer = faces.size();
  std::size_t positive = 0;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (area2[f] > 0) ++positive;
    else if (outer == faces.size()) outer = f;
    else throw std::logic_error("component_count: ambiguous outer face");
  }
  if (static_cast<long long>(positive) != bounded)
    throw std::logic_error("component_count: bounded face count mismatch");

  // Spanning tree of the component.
  std::vector<char> tree_edge(ne, 0), seen(nv, 0);
  std::vector<int> queue = {0};
  seen[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    for (int e : incident[static_cast<std::size_t>(v)]) {
      const auto& ed = edges[static_cast<std::size_t>(e)];
      const int w = ed.u == v ? ed.d : ed.u;
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      tree_edge[static_cast<std::size_t>(e)] = 1;
      queue.push_back(w);
    }
  }
  if (queue.size() != nv) throw std::logic_error("component_count: component not connected");

  // Tree of faces over the non-tree edges, rooted at the outer face.
  std::vector<int> parent_edge(faces.size(), -1);
  std::vector<char> fseen(faces.size(), 0);
  std::vector<int> order;
  fseen[outer] = 1;
  order.push_back(static_cast<int>(outer));
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const std::size_t f = static_cast<std::size_t>(order[oi]);
    for (int h : faces[f]) {
      const int e = h / 2;
      if (tree_edge[static_cast<std::size_t>(e)]) continue;
      const std::size_t g2 = static_cast<std::size_t>(face_of_half[static_cast<std::size_t>(h ^ 1)]);
      if (g2 == f || fseen[g2]) continue;
      fseen[g2] = 1;
      parent_edge[g2] = e;
      order.push_back(static_cast<int>(g2));
    }
  }
  if (order.size() != faces.size()) throw std::logic_error("component_count: face tree not connected");

  // Orient every edge, then make each bounded face odd by flipping the edge
  // it shares with its parent face, deepest faces first.
  std::vector<char> up_to_down(ne, 1);
  const auto face_parity = [&](std::size_t f) {
    int agree = 0;
    for (int h : faces[f]) {
      const bool along = (h % 2) == 0;
      if (along == static_cast<bool>(up_to_down[static_cast<std::size_t>(h / 2)])) ++agree;
    }
    return agree % 2;
  };
  for (std::size_t oi = order.size(); oi-- > 1;) {
    const std::size_t f = static_cast<std::size_t>(order[oi]);
    if (face_parity(f) == 0) {
      const int pe = parent_edge[f];
      if (pe < 0) throw std::logic_error("component_count: bounded face without parent edge");
      up_to_down[static_cast<std::size_t>(pe)] ^= 1;
    }
  }
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (f != outer && face_parity(f) != 1)
      throw std::logic_error("component_count: sign assignment failed");

  Matrix m(ups.size(), std::vector<Count>(downs.size(), 0));
  for (std::size_t e = 0; e < ne; ++e) {
    const auto& ed = edges[e];
    m[static_cast<std::size_t>(side_index[static_cast<std::size_t>(ed.u)])]
     [static_cast<std::size_t>(side_index[static_cast<std::size_t>(ed.d)])] =
        up_to_down[e] ? 1 : -1;
  }
  Count det = det_exact(std::move(m));
  return det < 0 ? Count(-det) : det;
}

}  // namespace

Count count_determinant(const Region& r) {
  if (!is_balanced(r)) return 0;
  const CellGraph g(r);
  std::vector<char> seen(r.size(), 0);
  Count total = 1;
  for (std::size_t s = 0; s < r.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp = {static_cast<int>(s)};
    seen[s] = 1;
    for (std::size_t qi = 0; qi < comp.size(); ++qi) {
      for (int j : g.nbr[static_cast<std::size_t>(comp[qi])]) {
        if (j < 0 || seen[static_cast<std::size_t>(j)]) continue;
        seen[static_cast<std::size_t>(j)] = 1;
        comp.push_back(j);
      }
    }
    std::sort(comp.begin(), comp.end());
    const Count c = component_count(g, comp);
    if (c == 0) return 0;
    total *= c;
  }
  return total;
}

std::vector<Lozenge> forced_lozenges(const Region& r) {
  const Count total = count_determinant(r);
  if (total == 0) throw std::invalid_argument("forced_lozenges: region has no tiling");
  std::vector<Lozenge> out;
  const auto& cells = r.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i].is_up()) continue;
    for (const TriCell& nb : neighbors(cells[i])) {
      if (!r.contains(nb)) continue;
      if (count_determinant(r.without({cells[i], nb})) == total)
        out.push_back(lozenge_of(cells[i], nb));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hexholes
