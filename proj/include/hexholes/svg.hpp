#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hexholes/counting.hpp"
#include "hexholes/lattice.hpp"

namespace hexholes {

// Everything the renderer draws. Holes are drawn as filled triangles on top of
// the region outline; the tiling, when present, is drawn as colored lozenges.
struct RenderModel {
  Region region;
  std::vector<TriCell> holes;
  std::optional<Tiling> tiling;
  std::vector<std::pair<TriCell, std::string>> labels;
};

struct RenderOptions {
  double unit = 20.0;  // side length of a unit triangle, in pixels
  bool draw_labels = true;
};

// Deterministic SVG: same model + options produce byte-identical output.
std::string render_svg(const RenderModel& model, const RenderOptions& opt = {});

}  // namespace hexholes
