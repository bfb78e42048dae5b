#pragma once

#include <set>
#include <string>
#include <vector>

#include "planelayers/centralized.hpp"
#include "planelayers/geometry.hpp"

namespace planelayers::detail {

// Point file text followed by context lines, all commented.
std::string make_dump(const PointSet& ps, const std::string& context);

[[noreturn]] void fail(const PointSet& ps, const std::string& message, const std::string& context = {});

std::string edge_text(const Segment& e);
std::string edges_text(const EdgeList& edges);

bool is_spanning_tree(const EdgeList& edges, std::size_t n);

// Vertices reachable from start in the tree without passing through `removed`.
std::vector<PointId> component(const std::vector<std::vector<PointId>>& adj, PointId start,
                               const std::set<PointId>& removed);

EdgeList induced_edges(const EdgeList& edges, const std::vector<PointId>& vertices);

// Construction 1 on the subtree over `vertices` rooted at `root`, recolored,
// with the doubled root edge removed.
TwoTrees colored_subtree(const EdgeList& mst, const PointSet& ps, PointId root,
                         const std::vector<PointId>& vertices, Recolor variant);

// Adds edges color by color and checks each new edge against the ones already
// present in its color.
class Assembler {
 public:
  Assembler(const PointSet& ps, const EdgeList& mst) : ps_(ps), mst_(mst) {}

  void add_red(const EdgeList& edges, const std::string& stage) { add(red_, edges, stage, "red"); }
  void add_blue(const EdgeList& edges, const std::string& stage) { add(blue_, edges, stage, "blue"); }

  // Crossings with this edge are tolerated until resolve time.
  void defer(const Segment& e) { deferred_ = e; has_deferred_ = true; }

  EdgeList& red() { return red_; }
  EdgeList& blue() { return blue_; }

  // Disjointness and spanning checks of the finished pair.
  void finish(const std::string& stage);

 private:
  void add(EdgeList& color, const EdgeList& edges, const std::string& stage, const char* name);

  const PointSet& ps_;
  const EdgeList& mst_;
  EdgeList red_;
  EdgeList blue_;
  Segment deferred_;
  bool has_deferred_ = false;
};

}  // namespace planelayers::detail
