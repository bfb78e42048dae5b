#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "detail.hpp"
#include "planelayers/centralized.hpp"
#include "planelayers/error.hpp"
#include "planelayers/union_find.hpp"

namespace planelayers {

namespace {

// Neighbor pair (a, b), ccw-consecutive around v, whose gap from a to b
// exceeds pi. A leaf's pair is (u, u).
std::optional<std::pair<PointId, PointId>> big_pair(const PointSet& ps,
                                                    const std::vector<PointId>& nbrs, PointId v) {
  if (nbrs.size() == 1) return std::make_pair(nbrs[0], nbrs[0]);
  const std::vector<PointId> ccw = ccw_order_around(v, nbrs, ps);
  std::optional<std::pair<PointId, PointId>> found;
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const PointId a = ccw[i];
    const PointId b = ccw[(i + 1) % ccw.size()];
    const Orientation o = orientation(ps, v, a, b);
    if (o == Orientation::Collinear) {
      throw PreconditionError("edges " + std::to_string(v) + "-" + std::to_string(a) + " and " +
                              std::to_string(v) + "-" + std::to_string(b) +
                              " are collinear; general position required");
    }
    if (o == Orientation::Clockwise) found = std::make_pair(a, b);
  }
  return found;
}

bool pair_is(const std::pair<PointId, PointId>& p, PointId u, PointId w) {
  return (p.first == u && p.second == w) || (p.first == w && p.second == u);
}

bool pair_has(const std::pair<PointId, PointId>& p, PointId u) {
  return p.first == u || p.second == u;
}

std::vector<PointId> without(const std::vector<PointId>& list, std::initializer_list<PointId> drop) {
  std::vector<PointId> out;
  for (PointId x : list) {
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  }
  return out;
}

std::string case_text(const PCase& pc) {
  return std::string("P = (") + std::to_string(pc.v3()) + ", " + std::to_string(pc.v2()) + ", " +
         std::to_string(pc.v1()) + ", " + std::to_string(pc.v0()) + "), tag " + to_string(pc.tag) +
         (pc.mirrored ? ", mirrored" : "");
}

}  // namespace

const char* to_string(PTag tag) {
  static const char* names[] = {"1a", "1b", "1c", "1d", "1e", "1f", "2a", "2b"};
  return names[static_cast<int>(tag)];
}

PCase select_p(const EdgeList& mst, const PointSet& ps, std::optional<PointId> leaf) {
  const std::size_t n = ps.size();
  if (n < 4) throw PreconditionError("select_p: need at least 4 points");
  if (!detail::is_spanning_tree(mst, n)) throw PreconditionError("select_p: edges are not a spanning tree");
  const auto adj = adjacency(mst, n);
  for (PointId v = 0; v < n; ++v) {
    if (!big_pair(ps, adj[v], v)) {
      throw PreconditionError("select_p: vertex " + std::to_string(v) + " has no big angle");
    }
  }

  PointId v3 = kNoPoint;
  if (leaf) {
    ps.check_id(*leaf);
    if (adj[*leaf].size() != 1) throw PreconditionError("select_p: chosen root is not a leaf");
    v3 = *leaf;
  } else {
    for (PointId v = 0; v < n && v3 == kNoPoint; ++v) {
      if (adj[v].size() == 1) v3 = v;
    }
  }
  const PointId v2 = adj[v3][0];
  const std::vector<PointId> children = without(adj[v2], {v3});
  if (children.empty() || children.size() > 2) {
    detail::fail(ps, "select_p: vertex " + std::to_string(v2) + " has " +
                         std::to_string(children.size()) + " children",
                 "mst: " + detail::edges_text(mst));
  }

  const auto big2 = *big_pair(ps, adj[v2], v2);
  std::vector<PointId> c_set;
  for (PointId c : children) {
    if (!pair_is(big2, c, v3)) c_set.push_back(c);
  }

  bool case1 = false;
  PointId v1 = kNoPoint;
  if (children.size() == 1) {
    case1 = true;
    v1 = children[0];
  } else {
    for (PointId c : c_set) {
      if (adj[c].size() > 1 && (v1 == kNoPoint || c < v1)) v1 = c;
    }
    if (v1 != kNoPoint) {
      case1 = true;
    } else {
      v1 = *std::min_element(c_set.begin(), c_set.end());
    }
  }
  if (case1 && adj[v1].size() < 2) {
    detail::fail(ps, "select_p: single child of v2 is a leaf", "mst: " + detail::edges_text(mst));
  }

  const Orientation turn = orientation(ps, v2, v3, v1);
  if (turn == Orientation::Collinear) {
    throw PreconditionError("select_p: v3, v2, v1 collinear; general position required");
  }
  PCase pc;
  pc.mirrored = turn == Orientation::CounterClockwise;
  const PointSet q = pc.mirrored ? ps.mirrored() : ps;

  PointId v0 = kNoPoint;
  if (case1) {
    const std::vector<PointId> kids = without(adj[v1], {v2});
    if (kids.size() == 1) {
      v0 = kids[0];
    } else {
      const auto big1 = *big_pair(q, adj[v1], v1);
      std::vector<PointId> ok;
      for (PointId c : kids) {
        if (!pair_is(big1, c, v2)) ok.push_back(c);
      }
      if (ok.size() == 1) {
        v0 = ok[0];
      } else {
        const std::vector<PointId> ccw = ccw_order_around(v1, adj[v1], q);
        const auto at = std::find(ccw.begin(), ccw.end(), v2) - ccw.begin();
        v0 = ccw[(static_cast<std::size_t>(at) + 1) % ccw.size()];
      }
    }
    const bool p1 = pair_has(*big_pair(q, adj[v2], v2), v3);
    const bool p2 = orientation(q, v1, v2, v0) == Orientation::Clockwise;
    const bool p3 = pair_has(*big_pair(q, adj[v1], v1), v2);
    if (p1) {
      pc.tag = p2 ? PTag::k1a : (p3 ? PTag::k1b : PTag::k1c);
    } else {
      pc.tag = p2 ? PTag::k1d : (p3 ? PTag::k1e : PTag::k1f);
    }
  } else {
    v0 = without(children, {v1})[0];
    const bool small = orientation(q, v2, v1, v0) == Orientation::Clockwise;
    pc.tag = small ? PTag::k2a : PTag::k2b;
    const bool p1 = pair_has(*big_pair(q, adj[v2], v2), v3);
    if (small != p1) {
      detail::fail(ps, "select_p: case 2 sub-case disagrees with the big angle at v2",
                   "mst: " + detail::edges_text(mst));
    }
  }
  pc.p = {v3, v2, v1, v0};

  if (pc.tag == PTag::k2b && n != 4) {
    detail::fail(ps, "select_p: case 2b with n = " + std::to_string(n), case_text(pc));
  }

  // v3 or v0 inside the triangle of the other three would put a point inside
  // a triangle spanned by two MST edges.
  const std::vector<PointId> hull = convex_hull(std::vector<PointId>(pc.p.begin(), pc.p.end()), q);
  if (hull.size() < 3) detail::fail(ps, "select_p: P is degenerate", case_text(pc));
  if (hull.size() == 3) {
    for (PointId x : {v3, v0}) {
      if (std::find(hull.begin(), hull.end(), x) == hull.end()) {
        detail::fail(ps, std::string("select_p: ") + (x == v3 ? "v3" : "v0") + " interior to P for tag " +
                             to_string(pc.tag),
                     case_text(pc) + "\nmst: " + detail::edges_text(mst));
      }
    }
  }
  return pc;
}

Segment mst3_replacement(const EdgeList& blue, const PointSet& q, const PCase& pc,
                         std::vector<PointId>* region) {
  const PointId v3 = pc.v3(), v2 = pc.v2(), v1 = pc.v1(), v0 = pc.v0();
  const std::vector<PointId> hull = convex_hull(std::vector<PointId>(pc.p.begin(), pc.p.end()), q);

  auto same_side = [&](PointId a, PointId b, PointId ref, PointId x) {
    const Orientation o = orientation(q, a, b, ref);
    return o != Orientation::Collinear && orientation(q, a, b, x) == o;
  };
  std::function<bool(PointId)> inside;
  if (hull.size() == 4) {
    if (!properly_cross(Segment(v3, v1), Segment(v2, v0), q)) {
      detail::fail(q, "v3v0 crossed although P is convex without crossing diagonals", case_text(pc));
    }
    // Triangle v3, v0 and the crossing point of v3v1 with v2v0.
    inside = [&](PointId x) {
      return same_side(v3, v0, v1, x) && same_side(v3, v1, v0, x) && same_side(v0, v2, v3, x);
    };
  } else {
    PointId inner = kNoPoint;
    for (PointId x : pc.p) {
      if (std::find(hull.begin(), hull.end(), x) == hull.end()) inner = x;
    }
    inside = [&, inner](PointId x) {
      return strictly_inside_triangle(q[v3], q[v0], q[inner], q[x]);
    };
  }

  std::vector<PointId> xs;
  for (PointId x = 0; x < q.size(); ++x) {
    if (std::find(pc.p.begin(), pc.p.end(), x) != pc.p.end()) continue;
    if (inside(x)) xs.push_back(x);
  }
  if (xs.empty()) detail::fail(q, "v3v0 crossed but the triangle holds no points", case_text(pc));
  if (region) *region = xs;

  std::vector<PointId> ids = xs;
  ids.push_back(v0);
  ids.push_back(v3);
  const std::vector<PointId> h = convex_hull(ids, q);
  const std::size_t m = h.size();
  const auto i0 = static_cast<std::size_t>(std::find(h.begin(), h.end(), v0) - h.begin());
  const auto i3 = static_cast<std::size_t>(std::find(h.begin(), h.end(), v3) - h.begin());
  if (i0 == m || i3 == m) detail::fail(q, "v0 or v3 missing from the region hull", case_text(pc));

  std::vector<PointId> forward, backward;
  for (std::size_t t = i0;; t = (t + 1) % m) {
    forward.push_back(h[t]);
    if (t == i3) break;
  }
  for (std::size_t t = i3;; t = (t + 1) % m) {
    backward.push_back(h[t]);
    if (t == i0) break;
  }
  if ((forward.size() > 2) == (backward.size() > 2)) {
    detail::fail(q, "v3v0 is not a hull edge of the region", case_text(pc));
  }
  const std::vector<PointId>& path = forward.size() > 2 ? forward : backward;

  UnionFind uf(q.size());
  const Segment v3v0(v3, v0);
  for (const Segment& e : blue) {
    if (e != v3v0) uf.unite(e.a, e.b);
  }
  std::vector<Segment> joins;
  for (std::size_t t = 0; t + 1 < path.size(); ++t) {
    if (!uf.same(path[t], path[t + 1])) joins.emplace_back(path[t], path[t + 1]);
  }
  if (joins.size() != 1) {
    detail::fail(q, "expected one reconnecting hull edge, found " + std::to_string(joins.size()),
                 case_text(pc) + "\nblue: " + detail::edges_text(blue));
  }
  return joins[0];
}

TwoTrees disjoint_trees_pointed(const EdgeList& mst, const PointSet& ps, const PCase& pc,
                                PointedDetails* details) {
  const PointSet q = pc.mirrored ? ps.mirrored() : ps;
  const auto adj = adjacency(mst, q.size());
  const std::array<PointId, 4> v{pc.v0(), pc.v1(), pc.v2(), pc.v3()};
  auto e = [&](int i, int j) { return Segment(v[i], v[j]); };

  EdgeList red, blue;
  switch (pc.tag) {
    case PTag::k1a:
    case PTag::k1d:
      red = {e(3, 2), e(3, 1), e(1, 0)};
      blue = {e(3, 0), e(2, 0), e(2, 1)};
      break;
    case PTag::k1b:
    case PTag::k1c:
    case PTag::k1e:
    case PTag::k1f:
      red = {e(3, 2), e(2, 1), e(1, 0)};
      blue = {e(3, 1), e(3, 0), e(2, 0)};
      break;
    case PTag::k2a:
      red = {e(1, 0), e(3, 0), e(3, 2)};
      blue = {e(2, 0), e(2, 1), e(3, 1)};
      break;
    case PTag::k2b:
      red = {e(1, 0), e(2, 1), e(3, 0)};
      blue = {e(2, 0), e(3, 1), e(3, 2)};
      break;
  }

  struct Part {
    PointId root;
    std::vector<PointId> vertices;
    Recolor variant;
    const char* name;
  };
  std::vector<Part> parts;
  auto hang = [&](PointId start, std::set<PointId> removed, PointId root, Recolor variant,
                  const char* name) {
    std::vector<PointId> vs = detail::component(adj, start, removed);
    vs.insert(std::upper_bound(vs.begin(), vs.end(), root), root);
    parts.push_back(Part{root, std::move(vs), variant, name});
  };
  const PointId v0 = pc.v0(), v1 = pc.v1(), v2 = pc.v2(), v3 = pc.v3();
  const bool case1 = pc.tag != PTag::k2a && pc.tag != PTag::k2b;
  if (case1) {
    const char t = to_string(pc.tag)[1];
    hang(v0, {v1}, v1, Recolor::Original, "T0");
    if (t == 'c' || t == 'f') {
      hang(v1, {v0, v2}, v2, Recolor::Original, "T1");
    } else {
      hang(v1, {v0, v2}, v0, Recolor::Inverted, "T1");
    }
    if (t == 'a' || t == 'b' || t == 'c') {
      hang(v2, {v1, v3}, v1, Recolor::Original, "T2");
    } else {
      hang(v2, {v1, v3}, v3, Recolor::Inverted, "T2");
    }
  } else if (pc.tag == PTag::k2a) {
    hang(v0, {v2}, v2, Recolor::Inverted, "T0");
  }

  const Segment v3v0(v3, v0);
  const bool v3v0_blue = std::find(blue.begin(), blue.end(), v3v0) != blue.end();
  detail::Assembler out(q, mst);
  if (v3v0_blue) out.defer(v3v0);
  const std::string tag = to_string(pc.tag);
  out.add_red(red, "P base " + tag);
  out.add_blue(blue, "P base " + tag);
  for (const Part& part : parts) {
    const TwoTrees sub = detail::colored_subtree(mst, q, part.root, part.vertices, part.variant);
    const std::string stage = std::string(part.name) + " (" + to_string(part.variant) + ") " + tag;
    out.add_red(sub.red, stage);
    out.add_blue(sub.blue, stage);
  }

  if (v3v0_blue) {
    EdgeList& b = out.blue();
    bool crossed = false;
    for (const Segment& f : b) {
      if (f != v3v0 && properly_cross(f, v3v0, q)) crossed = true;
    }
    if (crossed) {
      std::vector<PointId> region;
      const Segment rep = mst3_replacement(b, q, pc, &region);
      std::erase(b, v3v0);
      if (std::find(out.red().begin(), out.red().end(), rep) != out.red().end()) {
        detail::fail(q, "replacement edge " + detail::edge_text(rep) + " is red", case_text(pc));
      }
      for (const Segment& f : b) {
        if (properly_cross(f, rep, q)) {
          detail::fail(q, "replacement edge " + detail::edge_text(rep) + " crosses blue " +
                              detail::edge_text(f),
                       case_text(pc));
        }
      }
      b.push_back(rep);
      if (details) {
        details->replaced_by = rep;
        details->region = region;
      }
    }
  }
  out.finish("pointed assembly " + tag);

  TwoTrees trees;
  trees.red = std::move(out.red());
  trees.blue = std::move(out.blue());
  set_ratios(trees, ps, bottleneck(mst, ps));
  return trees;
}

}  // namespace planelayers
