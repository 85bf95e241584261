#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ditopo/complex.hpp"
#include "ditopo/plmaps.hpp"

namespace ditopo {

struct RenderOptions {
  int size = 400;  // side of the drawing area in pixels
  int margin = 30;
  double strokeWidth = 1.5;
  double pathWidth = 4.0;
  std::vector<std::string> classColors{"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  bool vertexLabels = false;
};

// Drawing of an embedded complex of dimension 1 or 2: forbidden boxes
// shaded, edges with arrowheads at their midpoints, marked context points
// labelled, and each listed edge path highlighted in its own colour.
// Throws UnsupportedError for other dimensions or missing coordinates.
std::string render_svg(const ContextedComplex& cx, const std::optional<RectRegion>& region,
                       const std::vector<std::vector<std::string>>& paths, const RenderOptions& opt = {});
std::string render_svg(const GeoSpace& s, const std::vector<std::vector<std::string>>& paths,
                       const RenderOptions& opt = {});

}  // namespace ditopo
