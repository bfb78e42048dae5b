#include <algorithm>

#include "detail.hpp"
#include "planelayers/centralized.hpp"
#include "planelayers/error.hpp"

namespace planelayers {

namespace {

// All ccw-consecutive neighbor pairs turn counterclockwise, i.e. each gap < pi.
bool all_gaps_small(const PointSet& ps, PointId v, const std::vector<PointId>& ccw) {
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const PointId a = ccw[i];
    const PointId b = ccw[(i + 1) % ccw.size()];
    if (orientation(ps, v, a, b) != Orientation::CounterClockwise) return false;
  }
  return true;
}

}  // namespace

std::optional<PointId> find_flat_vertex(const EdgeList& mst, const PointSet& ps) {
  const auto adj = adjacency(mst, ps.size());
  for (PointId v = 0; v < ps.size(); ++v) {
    if (adj[v].size() < 3) continue;
    if (all_gaps_small(ps, v, ccw_order_around(v, adj[v], ps))) return v;
  }
  return std::nullopt;
}

TwoTrees disjoint_trees_flat(const EdgeList& mst, const PointSet& ps, PointId v) {
  ps.check_id(v);
  const auto adj = adjacency(mst, ps.size());
  if (adj[v].size() < 3) {
    throw PreconditionError("disjoint_trees_flat: vertex " + std::to_string(v) + " has degree < 3");
  }
  std::vector<PointId> nb = ccw_order_around(v, adj[v], ps);
  if (!all_gaps_small(ps, v, nb)) {
    throw PreconditionError("disjoint_trees_flat: vertex " + std::to_string(v) + " has a big angle");
  }
  std::rotate(nb.begin(), std::min_element(nb.begin(), nb.end()), nb.end());
  const std::size_t k = nb.size();

  std::vector<PointId> hull = convex_hull(nb, ps);
  if (hull.size() == k) {
    std::rotate(hull.begin(), std::find(hull.begin(), hull.end(), nb[0]), hull.end());
  }
  if (hull != nb) {
    detail::fail(ps, "neighbors of flat vertex " + std::to_string(v) + " are not in convex position",
                 "mst: " + detail::edges_text(mst));
  }

  detail::Assembler out(ps, mst);
  EdgeList red, blue;
  for (std::size_t i = 1; i < k; ++i) red.emplace_back(v, nb[i]);
  red.emplace_back(nb[0], nb[1]);
  for (std::size_t i = 1; i < k; ++i) blue.emplace_back(nb[i], nb[(i + 1) % k]);
  blue.emplace_back(v, nb[0]);
  out.add_red(red, "flat base");
  out.add_blue(blue, "flat base");

  for (std::size_t i = 0; i < k; ++i) {
    std::vector<PointId> part = detail::component(adj, nb[i], {v});
    part.insert(std::upper_bound(part.begin(), part.end(), v), v);
    const Recolor variant = i == 0 ? Recolor::PlusInverted
                            : i == 1 ? Recolor::MinusInverted
                                     : Recolor::Original;
    const TwoTrees sub = detail::colored_subtree(mst, ps, v, part, variant);
    const std::string stage = "flat subtree " + std::to_string(i + 1) + " (" + to_string(variant) + ")";
    out.add_red(sub.red, stage);
    out.add_blue(sub.blue, stage);
  }
  out.finish("flat assembly");

  TwoTrees trees;
  trees.red = std::move(out.red());
  trees.blue = std::move(out.blue());
  set_ratios(trees, ps, bottleneck(mst, ps));
  return trees;
}

}  // namespace planelayers
