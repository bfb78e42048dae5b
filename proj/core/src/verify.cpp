#include "planelayers/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "planelayers/error.hpp"
#include "planelayers/mst.hpp"
#include "planelayers/union_find.hpp"

namespace planelayers {

namespace {

Int128 pow10(int e) {
  Int128 r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

std::string layer_name(std::size_t j) { return "layer " + std::to_string(j); }

}  // namespace

VerificationReport verify_layers(const std::vector<EdgeList>& layers, const PointSet& ps,
                                 const VerifyOptions& options) {
  VerificationReport rep;
  rep.n = ps.size();
  rep.ratio_bound = options.ratio_bound;
  if (ps.size() >= 2) rep.mst_bottleneck = bottleneck(build_emst(ps), ps).length;
  const double two_be = 2.0 * rep.mst_bottleneck * (1.0 + kRatioSlack);

  std::set<Segment> seen;
  for (std::size_t j = 0; j < layers.size(); ++j) {
    LayerReport lr;
    lr.edges = layers[j].size();
    EdgeList edges;
    std::set<Segment> mine;
    for (const Segment& e : layers[j]) {
      if (e.a >= ps.size() || e.b >= ps.size() || e.a == e.b || !mine.insert(e).second) {
        lr.valid = false;
        if (lr.invalid.size() < options.max_listed) lr.invalid.push_back(e);
        continue;
      }
      edges.push_back(e);
      if (!seen.insert(e).second) {
        rep.pairwise_disjoint = false;
        if (rep.duplicates.size() < options.max_listed) rep.duplicates.push_back(e);
      }
    }
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        if (properly_cross(edges[a], edges[b], ps)) {
          lr.plane = false;
          if (lr.crossings.size() < options.max_listed) lr.crossings.emplace_back(edges[a], edges[b]);
        } else if (options.flag_overlaps && improperly_meet(edges[a], edges[b], ps)) {
          lr.plane = false;
          if (lr.overlaps.size() < options.max_listed) lr.overlaps.emplace_back(edges[a], edges[b]);
        }
      }
    }
    UnionFind uf(ps.size());
    for (const Segment& e : edges) {
      if (!uf.unite(e.a, e.b)) lr.acyclic = false;
      const double len = length(ps, e);
      lr.bottleneck = std::max(lr.bottleneck, len);
      if (len > two_be) ++lr.edges_above_2be;
    }
    lr.components = uf.components();
    lr.spanning = lr.components <= 1;
    lr.ratio = rep.mst_bottleneck > 0 ? lr.bottleneck / rep.mst_bottleneck : 0.0;
    rep.overall_max_ratio = std::max(rep.overall_max_ratio, lr.ratio);
    rep.edges_above_2be += lr.edges_above_2be;

    const std::string name = layer_name(j);
    if (!lr.valid) rep.failures.push_back(name + ": invalid or repeated edges");
    if (!lr.plane) rep.failures.push_back(name + ": not plane");
    if (!lr.spanning) rep.failures.push_back(name + ": " + std::to_string(lr.components) + " components");
    if (options.expect_trees && (!lr.acyclic || edges.size() + 1 != std::max<std::size_t>(ps.size(), 1))) {
      rep.failures.push_back(name + ": not a tree");
    }
    rep.layers.push_back(std::move(lr));
  }
  if (!rep.pairwise_disjoint) rep.failures.push_back("layers share edges");
  if (options.ratio_bound) {
    rep.ratio_ok = rep.overall_max_ratio <= *options.ratio_bound * (1.0 + kRatioSlack);
    if (!rep.ratio_ok) rep.failures.push_back("max ratio above bound");
  }
  if (options.max_edges_above_2be) {
    rep.long_edges_ok = rep.edges_above_2be <= *options.max_edges_above_2be;
    if (!rep.long_edges_ok) rep.failures.push_back("too many edges above 2 BE(MST)");
  }
  return rep;
}

VerifyOptions two_tree_options() {
  VerifyOptions o;
  o.ratio_bound = 3.0;
  o.max_edges_above_2be = 1;
  o.expect_trees = true;
  return o;
}

VerificationReport verify_two_trees(const TwoTrees& trees, const PointSet& ps, VerifyOptions options) {
  return verify_layers({trees.red, trees.blue}, ps, options);
}

VerificationReport verify_layer_set(const LayerSet& ls, const PointSet& ps, VerifyOptions options) {
  if (!options.ratio_bound && ps.size() >= 2) {
    const double be = bottleneck(build_emst(ps), ps).length;
    if (be > 0) options.ratio_bound = 12.0 * std::sqrt(2.0) * ls.k * ls.beta / be;
  }
  auto rep = verify_layers(ls.layers, ps, options);
  if (ls.layers.size() != static_cast<std::size_t>(ls.k)) rep.failures.push_back("layer count differs from k");
  return rep;
}

CountingBound counting_lower_bound(std::size_t n, std::size_t k) {
  if (n < 2) throw PreconditionError("counting bound needs n > 1");
  if (k < 1) throw PreconditionError("counting bound needs k >= 1");
  CountingBound b;
  for (std::size_t d = 1; d <= std::min(k, n - 1); ++d) b.short_edges += n - d;
  b.needed = k * (n - 1);
  b.feasible = b.short_edges >= b.needed;
  return b;
}

PointSet gen_line_instance(std::size_t n, const Decimal& epsilon, bool allow_collinear) {
  if (n < 2) throw PreconditionError("line instance needs n >= 2");
  if (epsilon.mantissa < 0) throw PreconditionError("epsilon must be non-negative");
  if (epsilon.mantissa == 0 && !allow_collinear) {
    throw PreconditionError("epsilon = 0 gives a collinear line instance");
  }
  const Int128 kCap = Int128{1} << 58;
  int scale = std::min(18, epsilon.scale + 10);
  while (scale > 0 && static_cast<Int128>(n) * pow10(scale) > kCap) --scale;
  const int drop = epsilon.scale + 10 - scale;  // >= 0
  const Int128 den = pow10(drop);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Int128 f = (static_cast<Int128>(i) * 6180339887LL) % 10000000000LL;
    Int128 num = epsilon.mantissa * (f - 5000000000LL);
    // round half away from zero
    Int128 y = (num >= 0 ? num + den / 2 : num - den / 2) / den;
    pts.push_back(Point{static_cast<std::int64_t>(static_cast<Int128>(i) * pow10(scale)),
                        static_cast<std::int64_t>(y)});
  }
  return PointSet(std::move(pts), scale);
}

}  // namespace planelayers
