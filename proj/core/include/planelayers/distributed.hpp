#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "planelayers/geometry.hpp"
#include "planelayers/mst.hpp"
#include "planelayers/point_io.hpp"

namespace planelayers {

struct Cell {
  std::int64_t i = 0;
  std::int64_t j = 0;

  auto operator<=>(const Cell&) const = default;
};

std::int64_t chebyshev(const Cell& a, const Cell& b);

// beta either as the exact squared MST bottleneck (coordinate units) or as a
// decimal in real units.
struct Beta {
  std::optional<Int128> squared_units;
  std::optional<Decimal> value;

  static Beta from_bottleneck(const BottleneckInfo& be) { return Beta{be.squared_units, std::nullopt}; }
  static Beta from_decimal(const Decimal& d) { return Beta{std::nullopt, d}; }

  double real(const PointSet& ps) const;
};

// Integer lattice the grid lives on: input coordinates times `lift`, and a
// cell side that is the smallest even lattice length >= 6 k beta.
struct Frame {
  std::int64_t lift = 1;
  int scale = 0;  // decimal scale of lattice coordinates
  std::int64_t side = 0;
  std::vector<Point> pts;

  double unit() const;
  Cell cell_of(const Point& p) const;
  // Twice the center of cell c, in lattice units.
  Point doubled_center(const Cell& c) const;
};

Frame make_frame(const PointSet& ps, int k, const Beta& beta);

struct GridIndex {
  int k = 1;
  double beta = 0.0;       // real units
  double cell_side = 0.0;  // real units
  Frame frame;
  std::map<Cell, std::vector<PointId>> cells;  // ids sorted
  std::set<Cell> dense;
  std::vector<Cell> cell_of;
  std::vector<Cell> assignment;

  bool is_dense(const Cell& c) const { return dense.count(c) != 0; }
};

GridIndex grid_partition(const PointSet& ps, int k, const Beta& beta);

// Nearest dense center among dense cells within Chebyshev distance 2 of the
// point's own cell. Exact ties prefer the point's own cell, then the
// lexicographically smallest cell.
std::optional<Cell> nearest_dense_center(const Frame& frame, const Point& p,
                                         const std::set<Cell>& dense_nearby);

// Tukey depth of c, assuming c is not an input point and no line through c
// contains two input points.
std::size_t tukey_depth_simple(const Point& c, std::span<const Point> pts);

// No input point equals c and no line through c holds two input points.
bool clear_of_pairs(const Point& c, std::span<const Point> pts);

// Lattice point with depth >= floor(m/3) that is clear of pairs; m >= 3.
// Depth ceil(m/3) is preferred since it keeps every sector of the three-way
// split narrower than pi. `extra` filters candidates further. Throws
// InternalError when the lattice is too coarse to hold such a point.
Point center_point_lattice(std::span<const Point> pts);
Point center_point_lattice(std::span<const Point> pts, const std::function<bool(const Point&)>& extra);

// Directed pair lines a->b whose open right side holds fewer than `depth`
// points. A point has depth >= `depth` iff it lies on or left of all of them.
std::vector<std::pair<PointId, PointId>> depth_constraints(std::span<const Point> pts, std::size_t depth);

struct CenterPoint {
  Point lattice;  // in units of 10^-scale
  int scale = 0;
  double x = 0.0;
  double y = 0.0;
};

CenterPoint center_point(std::span<const PointId> ids, const PointSet& ps);

struct SectorStructure {
  Cell box;
  int layer = 0;
  Point center;  // frame lattice
  std::array<PointId, 3> reps{};
  std::array<Point, 3> rays{};  // rep minus center
};

// Everything about a dense box that depends only on its in-box points.
struct BoxStructure {
  Cell box;
  Point center;
  std::vector<PointId> order;  // clockwise from +x at center
  std::vector<std::size_t> position;  // index into order, by slot of `ids`
  std::vector<PointId> ids;           // sorted in-box ids
  std::vector<SectorStructure> sectors;

  std::size_t index_of(PointId id) const;
};

BoxStructure box_structure(const Frame& frame, const Cell& box, const std::vector<PointId>& in_box,
                           int k);

// Sector index t in {0,1,2} of the half-open clockwise range (ray t, ray t+1].
int sector_of(const SectorStructure& s, const Point& p);

// Representative point x attaches to in layer j of its owner box, or kNoPoint
// for the layer's root representative.
PointId attach_target(const BoxStructure& bs, int layer, PointId x, const Point& position,
                      bool in_box);

struct BoxLayers {
  BoxStructure structure;
  std::vector<EdgeList> layers;  // in-box and attached sparse edges per layer
};

BoxLayers layers_in_box(const Cell& box, const GridIndex& gi, int k);

// Partner boxes of a dense box under the four connection rules.
std::vector<Cell> connection_partners(const Cell& box, const std::set<Cell>& dense);

// Connector for one box pair and layer: first mutually contained rep pair in
// (rep of a, rep of b) order that is not in `used`.
std::optional<Segment> select_connector(const BoxStructure& a, const BoxStructure& b, int layer,
                                        const Frame& frame, const std::set<Segment>& used);

std::vector<EdgeList> connect_boxes(const GridIndex& gi, const std::map<Cell, BoxLayers>& boxes,
                                    int k);

// Closed intersection test of two convex polygons given as ccw hull vertex
// lists (one or two vertices allowed).
bool hulls_intersect(std::span<const Point> a, std::span<const Point> b);

struct LayerStats {
  double bottleneck = 0.0;
  std::size_t edges = 0;
};

struct LayerSet {
  int k = 1;
  std::vector<EdgeList> layers;
  double beta = 0.0;
  std::vector<LayerStats> stats;
};

struct DistributedOptions {
  std::optional<Decimal> beta;  // default: BE(MST)
  unsigned threads = 1;
};

struct DistributedBuild {
  LayerSet layers;
  GridIndex grid;
  std::map<Cell, BoxLayers> boxes;
  std::vector<EdgeList> connectors;
  BottleneckInfo mst_bottleneck;
  Beta beta;
  double bound = 0.0;  // 12 sqrt(2) k beta
};

DistributedBuild build_k_layers_detailed(const PointSet& ps, int k, const DistributedOptions& options = {});
LayerSet build_k_layers(const PointSet& ps, int k, const DistributedOptions& options = {});

struct LocalityCertificate {
  PointId point = kNoPoint;
  int radius_cells = 2;
  double euclidean_radius = 0.0;  // 3 sqrt(2) times the cell side
  std::size_t initiators = 0;     // views consulted
  std::size_t max_view = 0;       // largest number of points in one view
  std::vector<EdgeList> local;    // per layer, incident to point
  std::vector<EdgeList> global;
  bool ok = false;
};

// Recomputes every edge at `point` from bounded views; see README for the
// initiator model. Throws InternalError on mismatch.
LocalityCertificate locality_certificate(const PointSet& ps, const DistributedBuild& build, PointId point);

LocalityCertificate locality_certificate(const PointSet& ps, int k, const std::optional<Decimal>& beta,
                                         PointId point);

}  // namespace planelayers
