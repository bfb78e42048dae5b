#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planelayers/geometry.hpp"

namespace planelayers {

struct SvgOptions {
  double width = 800.0;
  double margin = 20.0;
  double point_radius = 2.5;
  std::optional<double> grid;  // cell side in real units
};

// One stroke color per layer; the first two are red and blue.
const char* layer_color(std::size_t layer);

std::string render_svg(const PointSet& ps, const std::vector<EdgeList>& layers, const SvgOptions& options = {});

}  // namespace planelayers
