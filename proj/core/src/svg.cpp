#include "planelayers/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "planelayers/error.hpp"

namespace planelayers {

namespace {

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

const char* layer_color(std::size_t layer) { return kPalette[layer % std::size(kPalette)]; }

std::string render_svg(const PointSet& ps, const std::vector<EdgeList>& layers, const SvgOptions& options) {
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (!ps.empty()) {
    min_x = max_x = ps.real_x(0);
    min_y = max_y = ps.real_y(0);
    for (PointId i = 1; i < ps.size(); ++i) {
      min_x = std::min(min_x, ps.real_x(i));
      max_x = std::max(max_x, ps.real_x(i));
      min_y = std::min(min_y, ps.real_y(i));
      max_y = std::max(max_y, ps.real_y(i));
    }
  }
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double inner = options.width - 2 * options.margin;
  const double s = inner / extent;
  const double height = (max_y - min_y) * s + 2 * options.margin;
  auto sx = [&](double x) { return options.margin + (x - min_x) * s; };
  auto sy = [&](double y) { return height - options.margin - (y - min_y) * s; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(options.width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(options.width) + " " + num(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (options.grid) {
    const double g = *options.grid;
    if (!(g > 0)) throw PreconditionError("grid cell side must be positive");
    out += "<g stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
    const double gx0 = std::floor(min_x / g) * g;
    const double gy0 = std::floor(min_y / g) * g;
    for (double x = gx0; x <= max_x + g * 1e-9; x += g) {
      out += "<line x1=\"" + num(sx(x)) + "\" y1=\"" + num(sy(gy0)) + "\" x2=\"" + num(sx(x)) + "\" y2=\"" +
             num(sy(std::ceil(max_y / g) * g)) + "\"/>\n";
    }
    for (double y = gy0; y <= max_y + g * 1e-9; y += g) {
      out += "<line x1=\"" + num(sx(gx0)) + "\" y1=\"" + num(sy(y)) + "\" x2=\"" +
             num(sx(std::ceil(max_x / g) * g)) + "\" y2=\"" + num(sy(y)) + "\"/>\n";
    }
    out += "</g>\n";
  }
  for (std::size_t j = 0; j < layers.size(); ++j) {
    EdgeList edges = layers[j];
    std::sort(edges.begin(), edges.end());
    out += "<g stroke=\"" + std::string(layer_color(j)) + "\" stroke-width=\"1.2\" stroke-opacity=\"0.8\">\n";
    for (const Segment& e : edges) {
      ps.check_id(e.a);
      ps.check_id(e.b);
      out += "<line x1=\"" + num(sx(ps.real_x(e.a))) + "\" y1=\"" + num(sy(ps.real_y(e.a))) + "\" x2=\"" +
             num(sx(ps.real_x(e.b))) + "\" y2=\"" + num(sy(ps.real_y(e.b))) + "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "<g fill=\"black\">\n";
  for (PointId i = 0; i < ps.size(); ++i) {
    out += "<circle cx=\"" + num(sx(ps.real_x(i))) + "\" cy=\"" + num(sy(ps.real_y(i))) + "\" r=\"" +
           num(options.point_radius) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace planelayers
