#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planelayers/centralized.hpp"
#include "planelayers/distributed.hpp"
#include "planelayers/geometry.hpp"
#include "planelayers/point_io.hpp"

namespace planelayers {

inline constexpr double kRatioSlack = 1e-9;

struct LayerReport {
  std::size_t edges = 0;
  bool valid = true;  // ids in range, no loops, no repeated edge
  std::vector<Segment> invalid;
  bool plane = true;
  std::vector<std::pair<Segment, Segment>> crossings;
  std::vector<std::pair<Segment, Segment>> overlaps;  // only with flag_overlaps
  bool spanning = true;
  std::size_t components = 0;
  bool acyclic = true;
  double bottleneck = 0.0;
  double ratio = 0.0;  // vs BE(MST)
  std::size_t edges_above_2be = 0;
};

struct VerifyOptions {
  std::optional<double> ratio_bound;          // relative to BE(MST)
  std::optional<std::size_t> max_edges_above_2be;  // over all layers
  bool expect_trees = false;
  bool flag_overlaps = false;
  std::size_t max_listed = 64;  // per list
};

struct VerificationReport {
  std::size_t n = 0;
  double mst_bottleneck = 0.0;
  std::vector<LayerReport> layers;
  bool pairwise_disjoint = true;
  std::vector<Segment> duplicates;
  double overall_max_ratio = 0.0;
  std::optional<double> ratio_bound;
  bool ratio_ok = true;
  std::size_t edges_above_2be = 0;
  bool long_edges_ok = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

VerificationReport verify_layers(const std::vector<EdgeList>& layers, const PointSet& ps,
                                 const VerifyOptions& options = {});

// Ratio bound 3, at most one edge above 2 BE, both spanning trees.
VerifyOptions two_tree_options();
VerificationReport verify_two_trees(const TwoTrees& trees, const PointSet& ps,
                                    VerifyOptions options = two_tree_options());

// Ratio bound 12 sqrt(2) k beta / BE(MST).
VerificationReport verify_layer_set(const LayerSet& ls, const PointSet& ps, VerifyOptions options = {});

struct CountingBound {
  std::size_t short_edges = 0;  // pairs at distance < k+1 on the unit line
  std::size_t needed = 0;       // k (n-1)
  bool feasible = false;
};

CountingBound counting_lower_bound(std::size_t n, std::size_t k);

// Points (i, eps_i), eps_i = eps (frac(i 0.6180339887) - 1/2), as exact decimals.
// eps = 0 requires allow_collinear. Index progressions without wraparound give
// collinear triples, so two-tree callers perturb the result.
PointSet gen_line_instance(std::size_t n, const Decimal& epsilon, bool allow_collinear = false);

}  // namespace planelayers
