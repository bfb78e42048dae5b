#include "detail.hpp"
#include "planelayers/centralized.hpp"
#include "planelayers/error.hpp"

namespace planelayers {

TwoTreeBuild build_two_disjoint_trees_detailed(const PointSet& ps, const TwoTreeOptions& options) {
  if (ps.size() < 4) {
    throw PreconditionError("two edge-disjoint spanning trees need n >= 4 (2(n-1) > n(n-1)/2 for n = " +
                            std::to_string(ps.size()) + ")");
  }
  TwoTreeBuild build;
  build.mst = build_emst(ps);
  build.mst_bottleneck = bottleneck(build.mst, ps);
  build.flat_vertex = find_flat_vertex(build.mst, ps);
  if (build.flat_vertex) {
    build.trees = disjoint_trees_flat(build.mst, ps, *build.flat_vertex);
    build.bound = 2.0;
  } else {
    build.pcase = select_p(build.mst, ps, options.leaf);
    build.trees = disjoint_trees_pointed(build.mst, ps, *build.pcase, &build.pointed);
    build.bound = 3.0;
  }
  set_ratios(build.trees, ps, build.mst_bottleneck);

  // Length claims, checked exactly on squared lengths.
  const Int128 be2 = build.mst_bottleneck.squared_units;
  int above_two = 0;
  for (const EdgeList* color : {&build.trees.red, &build.trees.blue}) {
    for (const Segment& e : *color) {
      const Int128 d2 = squared_length(ps, e);
      if (d2 > 4 * be2) ++above_two;
      if (d2 > 9 * be2) detail::fail(ps, "edge " + detail::edge_text(e) + " longer than 3 BE(MST)");
    }
  }
  if (build.flat_vertex && above_two > 0) {
    detail::fail(ps, "flat construction produced an edge longer than 2 BE(MST)");
  }
  if (above_two > 1) detail::fail(ps, "more than one edge longer than 2 BE(MST)");
  return build;
}

TwoTrees build_two_disjoint_trees(const PointSet& ps, const TwoTreeOptions& options) {
  return build_two_disjoint_trees_detailed(ps, options).trees;
}

}  // namespace planelayers
