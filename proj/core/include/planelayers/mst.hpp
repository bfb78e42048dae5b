#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planelayers/geometry.hpp"

namespace planelayers {

struct BottleneckInfo {
  double length = 0.0;       // real units
  Int128 squared_units = 0;  // exact squared length in coordinate units
  Segment edge;
};

// Prim over the complete graph. Equal weights are ordered by (min id, max id),
// so the tree is the unique MST under that total order.
EdgeList build_emst(const PointSet& ps);

BottleneckInfo bottleneck(const EdgeList& edges, const PointSet& ps);

// Adjacency lists indexed by point id.
std::vector<std::vector<PointId>> adjacency(const EdgeList& edges, std::size_t n);

struct RootedMst {
  EdgeList edges;
  PointId root = kNoPoint;
  std::vector<int> level;  // -1 for vertices outside the tree
  std::vector<PointId> parent;
  std::vector<PointId> grandparent;
  std::vector<std::vector<PointId>> children;  // ccw around each vertex

  bool contains(PointId v) const { return v < level.size() && level[v] >= 0; }
  PointId root_child() const { return children[root].front(); }
  std::vector<PointId> vertices() const;
};

// edges must form a spanning tree of ps and root must be a leaf.
RootedMst root_at_leaf(const EdgeList& edges, const PointSet& ps, PointId root);

// Same for a tree over a subset of the points (the endpoints of edges).
RootedMst root_subtree(const EdgeList& edges, const PointSet& ps, PointId root);

enum class EdgeKind { Short, Long };

struct Mst2Edge {
  Segment seg;
  EdgeKind kind = EdgeKind::Short;
  PointId witness = kNoPoint;  // LONG only
  // Wedge bounded by the rays witness->wedge_a and witness->wedge_b, angle < pi.
  PointId wedge_a = kNoPoint;
  PointId wedge_b = kNoPoint;
};

// All tree edges (SHORT) plus every pair at tree distance two (LONG).
// Throws PreconditionError if a witness is collinear with the pair.
std::vector<Mst2Edge> mst_square(const RootedMst& rm, const PointSet& ps);

// Direction witness->z lies strictly between the wedge's bounding rays.
bool strictly_inside_wedge(const PointSet& ps, PointId witness, PointId a, PointId b, PointId z);

// True iff no point lies strictly inside triangle uvw; uv and vw must be tree
// edges.
bool lemma_triangle_empty(const RootedMst& rm, const PointSet& ps, PointId u, PointId v, PointId w);

// Combinatorial crossing predicate for MST^2 edges.
bool lemma_mst2_cross(const Mst2Edge& e, const Mst2Edge& f, const PointSet& ps);

// `root <id>` then `u v` per edge.
std::string format_tree(const RootedMst& rm);

}  // namespace planelayers
