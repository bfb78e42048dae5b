#include "planelayers/mst.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "planelayers/error.hpp"

namespace planelayers {

namespace {

struct Key {
  Int128 d2;
  PointId lo;
  PointId hi;

  bool operator<(const Key& o) const { return std::tie(d2, lo, hi) < std::tie(o.d2, o.lo, o.hi); }
};

}  // namespace

EdgeList build_emst(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n == 0) throw PreconditionError("build_emst: empty point set");
  EdgeList out;
  out.reserve(n - 1);
  std::vector<char> in_tree(n, 0);
  std::vector<Key> best(n);
  std::vector<PointId> from(n, kNoPoint);
  in_tree[0] = 1;
  for (PointId v = 1; v < n; ++v) {
    best[v] = Key{squared_distance(ps[0], ps[v]), 0, v};
    from[v] = 0;
  }
  for (std::size_t step = 1; step < n; ++step) {
    PointId pick = kNoPoint;
    for (PointId v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      if (pick == kNoPoint || best[v] < best[pick]) pick = v;
    }
    if (best[pick].d2 == 0) throw PreconditionError("build_emst: duplicate points");
    in_tree[pick] = 1;
    out.emplace_back(from[pick], pick);
    for (PointId v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const Key k{squared_distance(ps[pick], ps[v]), std::min(pick, v), std::max(pick, v)};
      if (k < best[v]) {
        best[v] = k;
        from[v] = pick;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BottleneckInfo bottleneck(const EdgeList& edges, const PointSet& ps) {
  if (edges.empty()) throw PreconditionError("bottleneck: empty edge list");
  BottleneckInfo info;
  bool first = true;
  for (const Segment& e : edges) {
    ps.check_id(e.a);
    ps.check_id(e.b);
    const Int128 d2 = squared_length(ps, e);
    if (first || d2 > info.squared_units || (d2 == info.squared_units && e < info.edge)) {
      info.squared_units = d2;
      info.edge = e;
      first = false;
    }
  }
  info.length = length(ps, info.edge);
  return info;
}

std::vector<std::vector<PointId>> adjacency(const EdgeList& edges, std::size_t n) {
  std::vector<std::vector<PointId>> adj(n);
  for (const Segment& e : edges) {
    if (e.a >= n || e.b >= n) throw PreconditionError("edge references invalid id");
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<PointId> RootedMst::vertices() const {
  std::vector<PointId> out;
  for (PointId v = 0; v < level.size(); ++v) {
    if (level[v] >= 0) out.push_back(v);
  }
  return out;
}

RootedMst root_subtree(const EdgeList& edges, const PointSet& ps, PointId root) {
  const std::size_t n = ps.size();
  ps.check_id(root);
  const auto adj = adjacency(edges, n);
  if (adj[root].size() != 1) {
    throw PreconditionError("root " + std::to_string(root) + " is not a leaf (degree " +
                            std::to_string(adj[root].size()) + ")");
  }
  std::set<PointId> vertex_set;
  for (const Segment& e : edges) {
    if (e.a == e.b) throw PreconditionError("self-loop edge");
    vertex_set.insert(e.a);
    vertex_set.insert(e.b);
  }
  if (edges.size() + 1 != vertex_set.size()) {
    throw PreconditionError("edge list is not a tree");
  }

  RootedMst rm;
  rm.edges = edges;
  std::sort(rm.edges.begin(), rm.edges.end());
  rm.root = root;
  rm.level.assign(n, -1);
  rm.parent.assign(n, kNoPoint);
  rm.grandparent.assign(n, kNoPoint);
  rm.children.assign(n, {});

  std::deque<PointId> queue{root};
  rm.level[root] = 0;
  std::size_t seen = 1;
  while (!queue.empty()) {
    const PointId v = queue.front();
    queue.pop_front();
    for (PointId w : adj[v]) {
      if (rm.level[w] >= 0) continue;
      rm.level[w] = rm.level[v] + 1;
      rm.parent[w] = v;
      rm.children[v].push_back(w);
      queue.push_back(w);
      ++seen;
    }
  }
  if (seen != vertex_set.size()) throw PreconditionError("edge list is disconnected");
  for (PointId v : vertex_set) {
    if (v == root) continue;
    rm.grandparent[v] = rm.level[v] >= 2 ? rm.parent[rm.parent[v]] : root;
    if (!rm.children[v].empty()) rm.children[v] = ccw_order_around(v, rm.children[v], ps);
  }
  return rm;
}

RootedMst root_at_leaf(const EdgeList& edges, const PointSet& ps, PointId root) {
  if (edges.size() + 1 != ps.size()) {
    throw PreconditionError("edge list does not span the point set");
  }
  return root_subtree(edges, ps, root);
}

std::vector<Mst2Edge> mst_square(const RootedMst& rm, const PointSet& ps) {
  std::vector<Mst2Edge> out;
  for (const Segment& e : rm.edges) out.push_back(Mst2Edge{e, EdgeKind::Short, kNoPoint, kNoPoint, kNoPoint});
  const auto adj = adjacency(rm.edges, ps.size());
  std::vector<Mst2Edge> longs;
  for (PointId v = 0; v < adj.size(); ++v) {
    const auto& nb = adj[v];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (orientation(ps, v, nb[i], nb[j]) == Orientation::Collinear) {
          throw PreconditionError("collinear witness triple (" + std::to_string(nb[i]) + ", " +
                                  std::to_string(v) + ", " + std::to_string(nb[j]) + ")");
        }
        longs.push_back(Mst2Edge{Segment(nb[i], nb[j]), EdgeKind::Long, v, nb[i], nb[j]});
      }
    }
  }
  std::sort(longs.begin(), longs.end(),
            [](const Mst2Edge& a, const Mst2Edge& b) { return a.seg < b.seg; });
  out.insert(out.end(), longs.begin(), longs.end());
  return out;
}

bool strictly_inside_wedge(const PointSet& ps, PointId witness, PointId a, PointId b, PointId z) {
  const Orientation o = orientation(ps, witness, a, b);
  if (o == Orientation::Collinear) return false;
  return orientation(ps, witness, a, z) == o && orientation(ps, witness, z, b) == o;
}

bool lemma_triangle_empty(const RootedMst& rm, const PointSet& ps, PointId u, PointId v,
                          PointId w) {
  const Segment uv(u, v);
  const Segment vw(v, w);
  const bool has_uv = std::binary_search(rm.edges.begin(), rm.edges.end(), uv);
  const bool has_vw = std::binary_search(rm.edges.begin(), rm.edges.end(), vw);
  if (!has_uv || !has_vw || u == w) {
    throw PreconditionError("lemma_triangle_empty: uv and vw must be distinct tree edges");
  }
  for (PointId p = 0; p < ps.size(); ++p) {
    if (p == u || p == v || p == w) continue;
    if (strictly_inside_triangle(ps[u], ps[v], ps[w], ps[p])) return false;
  }
  return true;
}

namespace {

bool incident_inside(const Mst2Edge& lng, const Mst2Edge& other, const PointSet& ps) {
  if (lng.kind != EdgeKind::Long || !other.seg.has(lng.witness)) return false;
  const PointId z = other.seg.other(lng.witness);
  return strictly_inside_wedge(ps, lng.witness, lng.wedge_a, lng.wedge_b, z);
}

}  // namespace

bool lemma_mst2_cross(const Mst2Edge& e, const Mst2Edge& f, const PointSet& ps) {
  if (incident_inside(e, f, ps) || incident_inside(f, e, ps)) return true;
  if (e.kind != EdgeKind::Long || f.kind != EdgeKind::Long || e.witness != f.witness) return false;
  if (e.seg.has(f.seg.a) || e.seg.has(f.seg.b)) return false;
  const int inside = static_cast<int>(strictly_inside_wedge(ps, e.witness, e.wedge_a, e.wedge_b, f.wedge_a)) +
                     static_cast<int>(strictly_inside_wedge(ps, e.witness, e.wedge_a, e.wedge_b, f.wedge_b));
  return inside == 1;
}

std::string format_tree(const RootedMst& rm) {
  std::string out = "root " + std::to_string(rm.root) + "\n";
  for (const Segment& e : rm.edges) out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  return out;
}

}  // namespace planelayers
