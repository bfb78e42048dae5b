#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "detail.hpp"
#include "planelayers/centralized.hpp"
#include "planelayers/error.hpp"
#include "planelayers/point_io.hpp"
#include "planelayers/union_find.hpp"

namespace planelayers {

namespace detail {

std::string make_dump(const PointSet& ps, const std::string& context) {
  std::string out;
  std::istringstream lines(context);
  for (std::string line; std::getline(lines, line);) out += "# " + line + "\n";
  out += format_point_file(ps);
  return out;
}

void fail(const PointSet& ps, const std::string& message, const std::string& context) {
  throw InternalError(message, make_dump(ps, message + (context.empty() ? "" : "\n" + context)));
}

std::string edge_text(const Segment& e) {
  return std::to_string(e.a) + "-" + std::to_string(e.b);
}

std::string edges_text(const EdgeList& edges) {
  std::string out;
  for (const Segment& e : edges) {
    if (!out.empty()) out += ' ';
    out += edge_text(e);
  }
  return out;
}

bool is_spanning_tree(const EdgeList& edges, std::size_t n) {
  if (n == 0) return edges.empty();
  if (edges.size() + 1 != n) return false;
  UnionFind uf(n);
  for (const Segment& e : edges) {
    if (e.a >= n || e.b >= n || !uf.unite(e.a, e.b)) return false;
  }
  return uf.components() == 1;
}

std::vector<PointId> component(const std::vector<std::vector<PointId>>& adj, PointId start,
                               const std::set<PointId>& removed) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<PointId> out{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (PointId w : adj[out[i]]) {
      if (seen[w] || removed.count(w)) continue;
      seen[w] = 1;
      out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeList induced_edges(const EdgeList& edges, const std::vector<PointId>& vertices) {
  EdgeList out;
  for (const Segment& e : edges) {
    if (std::binary_search(vertices.begin(), vertices.end(), e.a) &&
        std::binary_search(vertices.begin(), vertices.end(), e.b)) {
      out.push_back(e);
    }
  }
  return out;
}

TwoTrees colored_subtree(const EdgeList& mst, const PointSet& ps, PointId root,
                         const std::vector<PointId>& vertices, Recolor variant) {
  const EdgeList sub = induced_edges(mst, vertices);
  const RootedMst rm = root_subtree(sub, ps, root);
  const TwoTrees base = construction1(rm, ps);
  TwoTrees out = recolor(side_split(rm, ps, base), variant);
  const Segment rs = *out.shared;
  std::erase(out.red, rs);
  std::erase(out.blue, rs);
  out.shared.reset();
  return out;
}

void Assembler::add(EdgeList& color, const EdgeList& edges, const std::string& stage,
                    const char* name) {
  for (const Segment& e : edges) {
    if (e.a == e.b) fail(ps_, std::string(name) + " self-loop at " + stage);
    if (std::find(color.begin(), color.end(), e) != color.end()) {
      fail(ps_, std::string(name) + " duplicate edge " + edge_text(e) + " at " + stage,
           "mst: " + edges_text(mst_));
    }
    for (const Segment& f : color) {
      if (has_deferred_ && (e == deferred_ || f == deferred_)) continue;
      if (properly_cross(e, f, ps_)) {
        fail(ps_,
             std::string(name) + " edges " + edge_text(e) + " and " + edge_text(f) +
                 " cross at " + stage,
             "mst: " + edges_text(mst_));
      }
    }
    color.push_back(e);
  }
}

void Assembler::finish(const std::string& stage) {
  std::sort(red_.begin(), red_.end());
  std::sort(blue_.begin(), blue_.end());
  EdgeList common;
  std::set_intersection(red_.begin(), red_.end(), blue_.begin(), blue_.end(),
                        std::back_inserter(common));
  const std::string context = "mst: " + edges_text(mst_) + "\nred: " + edges_text(red_) +
                              "\nblue: " + edges_text(blue_);
  if (!common.empty()) fail(ps_, "red and blue share " + edges_text(common) + " at " + stage, context);
  if (!is_spanning_tree(red_, ps_.size())) fail(ps_, "red is not a spanning tree at " + stage, context);
  if (!is_spanning_tree(blue_, ps_.size())) fail(ps_, "blue is not a spanning tree at " + stage, context);
}

}  // namespace detail

const char* to_string(Recolor v) {
  switch (v) {
    case Recolor::Original:
      return "ORIGINAL";
    case Recolor::Inverted:
      return "INVERTED";
    case Recolor::MinusInverted:
      return "MINUS_INVERTED";
    case Recolor::PlusInverted:
      return "PLUS_INVERTED";
  }
  return "?";
}

void set_ratios(TwoTrees& trees, const PointSet& ps, const BottleneckInfo& mst_bottleneck) {
  auto ratio = [&](const EdgeList& edges) -> double {
    if (edges.empty() || mst_bottleneck.squared_units == 0) return 0.0;
    const BottleneckInfo b = bottleneck(edges, ps);
    return static_cast<double>(std::sqrt(static_cast<long double>(b.squared_units) /
                                         static_cast<long double>(mst_bottleneck.squared_units)));
  };
  trees.max_ratio_red = static_cast<double>(ratio(trees.red));
  trees.max_ratio_blue = static_cast<double>(ratio(trees.blue));
}

TwoTrees construction1(const RootedMst& rm, const PointSet& ps) {
  if (rm.root == kNoPoint || rm.children[rm.root].size() != 1) {
    throw PreconditionError("construction1: root must be a leaf");
  }
  TwoTrees out;
  for (PointId v : rm.vertices()) {
    if (v == rm.root) continue;
    const Segment up(v, rm.parent[v]);
    const Segment jump(v, rm.grandparent[v]);
    if (rm.level[v] % 2 == 1) {
      out.red.push_back(up);
      out.blue.push_back(jump);
    } else {
      out.red.push_back(jump);
      out.blue.push_back(up);
    }
  }
  std::sort(out.red.begin(), out.red.end());
  std::sort(out.blue.begin(), out.blue.end());
  out.shared = Segment(rm.root, rm.root_child());
  if (!rm.edges.empty()) set_ratios(out, ps, bottleneck(rm.edges, ps));
  return out;
}

SideSplit side_split(const RootedMst& rm, const PointSet& ps, const TwoTrees& trees) {
  const PointId r = rm.root;
  const PointId s = rm.root_child();
  SideSplit split;
  split.rs = Segment(r, s);

  // side: -1 minus, +1 plus, 0 for r and s.
  std::vector<int> side(ps.size(), 0);
  for (PointId c : rm.children[s]) {
    const Orientation o = orientation(ps, r, s, c);
    if (o == Orientation::Collinear) {
      throw PreconditionError("side_split: r, s and " + std::to_string(c) + " are collinear");
    }
    side[c] = o == Orientation::Clockwise ? -1 : 1;
  }
  std::deque<PointId> queue(rm.children[s].begin(), rm.children[s].end());
  while (!queue.empty()) {
    const PointId v = queue.front();
    queue.pop_front();
    for (PointId c : rm.children[v]) {
      side[c] = side[v];
      queue.push_back(c);
    }
  }
  for (PointId v : rm.vertices()) {
    if (side[v] <= 0) split.s_minus.push_back(v);
    if (side[v] >= 0) split.s_plus.push_back(v);
  }
  auto classify = [&](const EdgeList& edges, EdgeList& minus, EdgeList& plus) {
    for (const Segment& e : edges) {
      if (e == split.rs) continue;
      const int sd = side[e.a] != 0 ? side[e.a] : side[e.b];
      (sd < 0 ? minus : plus).push_back(e);
    }
  };
  classify(trees.red, split.e_r_minus, split.e_r_plus);
  classify(trees.blue, split.e_b_minus, split.e_b_plus);
  return split;
}

TwoTrees recolor(const SideSplit& split, Recolor variant) {
  TwoTrees out;
  auto join = [&](const EdgeList& a, const EdgeList& b) {
    EdgeList e = a;
    e.insert(e.end(), b.begin(), b.end());
    e.push_back(split.rs);
    std::sort(e.begin(), e.end());
    return e;
  };
  switch (variant) {
    case Recolor::Original:
      out.red = join(split.e_r_minus, split.e_r_plus);
      out.blue = join(split.e_b_minus, split.e_b_plus);
      break;
    case Recolor::Inverted:
      out.red = join(split.e_b_minus, split.e_b_plus);
      out.blue = join(split.e_r_minus, split.e_r_plus);
      break;
    case Recolor::MinusInverted:
      out.red = join(split.e_b_minus, split.e_r_plus);
      out.blue = join(split.e_r_minus, split.e_b_plus);
      break;
    case Recolor::PlusInverted:
      out.red = join(split.e_r_minus, split.e_b_plus);
      out.blue = join(split.e_b_minus, split.e_r_plus);
      break;
  }
  out.shared = split.rs;
  return out;
}

}  // namespace planelayers
