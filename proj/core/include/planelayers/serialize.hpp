#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planelayers/centralized.hpp"
#include "planelayers/distributed.hpp"
#include "planelayers/verify.hpp"

namespace planelayers {

// All writers emit sorted edges and a trailing newline, pretty-printed with two
// spaces.
std::string two_tree_json(const TwoTreeBuild& build, const PointSet& ps);
std::string layer_set_json(const DistributedBuild& build, const PointSet& ps);
std::string report_json(const VerificationReport& report);

struct LayerFile {
  std::string mode;  // "two-tree" or "distributed"
  int k = 0;
  std::size_t n = 0;
  std::vector<EdgeList> layers;
  std::optional<double> beta;
  std::optional<double> cell_side;
  std::optional<double> bound;  // claimed ratio bound of a two-tree file
};

// Accepts the output of either writer. Throws PreconditionError on malformed
// input.
LayerFile parse_layer_file(const std::string& text);

// Two-tree files are held to the tighter of 3 and their claimed bound; a
// claimed bound of 2 also forbids any edge above 2 BE.
VerificationReport verify_layer_file(const LayerFile& file, const PointSet& ps, bool flag_overlaps = false);

}  // namespace planelayers
