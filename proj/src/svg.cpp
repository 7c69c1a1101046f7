#include "hexholes/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hexholes {

namespace {

constexpr double kRoot3Half = 0.8660254037844386;

struct P2 {
  double x = 0, y = 0;
};

P2 euclid(int col, int row) { return {col + 0.5 * row, row * kRoot3Half}; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

class Canvas {
 public:
  Canvas(double min_x, double max_x, double min_y, double max_y, double unit)
      : min_x_(min_x), max_y_(max_y), unit_(unit), margin_(unit / 2) {
    width_ = (max_x - min_x) * unit + 2 * margin_;
    height_ = (max_y - min_y) * unit + 2 * margin_;
  }

  P2 map(P2 p) const {
    return {(p.x - min_x_) * unit_ + margin_, (max_y_ - p.y) * unit_ + margin_};
  }
  double width() const { return width_; }
  double height() const { return height_; }

 private:
  double min_x_, max_y_, unit_, margin_;
  double width_ = 0, height_ = 0;
};

std::vector<P2> cell_polygon(const TriCell& t) {
  std::vector<P2> pts;
  for (const auto& [c, r] : t.vertices()) pts.push_back(euclid(c, r));
  return pts;
}

std::vector<P2> lozenge_polygon(const Lozenge& l) {
  std::vector<std::pair<int, int>> verts;
  for (const auto& v : l.a.vertices()) verts.push_back(v);
  for (const auto& v : l.b.vertices()) verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<P2> pts;
  P2 centroid{0, 0};
  for (const auto& [c, r] : verts) {
    pts.push_back(euclid(c, r));
    centroid.x += pts.back().x;
    centroid.y += pts.back().y;
  }
  centroid.x /= static_cast<double>(pts.size());
  centroid.y /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const P2& a, const P2& b) {
    return std::atan2(a.y - centroid.y, a.x - centroid.x) <
           std::atan2(b.y - centroid.y, b.x - centroid.x);
  });
  return pts;
}

void emit_polygon(std::ostringstream& out, const Canvas& canvas, const std::vector<P2>& pts,
                  const char* fill, const char* stroke) {
  out << "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const P2 p = canvas.map(pts[i]);
    if (i) out << " ";
    out << fmt(p.x) << "," << fmt(p.y);
  }
  out << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"1\"/>\n";
}

const char* lozenge_fill(LozKind kind) {
  switch (kind) {
    case LozKind::left: return "#9ecae1";
    case LozKind::vertical: return "#a1d99b";
    case LozKind::right: return "#fdae6b";
  }
  return "#ccc";
}

P2 cell_centroid(const TriCell& t) {
  P2 c{0, 0};
  for (const P2& p : cell_polygon(t)) {
    c.x += p.x / 3.0;
    c.y += p.y / 3.0;
  }
  return c;
}

}  // namespace

std::string render_svg(const RenderModel& model, const RenderOptions& opt) {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool any = false;
  const auto grow = [&](const TriCell& t) {
    for (const P2& p : cell_polygon(t)) {
      if (!any) {
        min_x = max_x = p.x;
        min_y = max_y = p.y;
        any = true;
      } else {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
      }
    }
  };
  for (const TriCell& t : model.region.cells()) grow(t);
  for (const TriCell& t : model.holes) grow(t);

  const Canvas canvas(min_x, max_x, min_y, max_y, opt.unit);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(canvas.width())
      << "\" height=\"" << fmt(canvas.height()) << "\" viewBox=\"0 0 " << fmt(canvas.width())
      << " " << fmt(canvas.height()) << "\">\n";
  for (const TriCell& t : model.region.cells())
    emit_polygon(out, canvas, cell_polygon(t), "#f2f2f2", "#999");
  if (model.tiling) {
    for (const Lozenge& l : model.tiling->lozenges)
      emit_polygon(out, canvas, lozenge_polygon(l), lozenge_fill(l.kind), "#555");
  }
  for (const TriCell& t : model.holes) emit_polygon(out, canvas, cell_polygon(t), "#444", "#222");
  if (opt.draw_labels) {
    for (const auto& [cell, text] : model.labels) {
      const P2 p = canvas.map(cell_centroid(cell));
      out << "<text x=\"" << fmt(p.x) << "\" y=\"" << fmt(p.y) << "\" font-size=\""
          << fmt(opt.unit * 0.35) << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" "
          << "fill=\"#000\" font-family=\"monospace\">" << text << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hexholes
