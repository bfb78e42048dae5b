#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "detail.hpp"
#include "planelayers/distributed.hpp"
#include "planelayers/error.hpp"
#include "planelayers/union_find.hpp"

namespace planelayers {

namespace {

Point sub(const Point& a, const Point& b) { return Point{a.x - b.x, a.y - b.y}; }

Int128 cross_vec(const Point& u, const Point& v) { return Int128{u.x} * v.y - Int128{u.y} * v.x; }

Int128 dot_vec(const Point& u, const Point& v) { return Int128{u.x} * v.x + Int128{u.y} * v.y; }

int sign(Int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int orient(const Point& a, const Point& b, const Point& c) { return sign(cross(a, b, c)); }

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_meet(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(p1, p2, q1) || on_segment(p1, p2, q2) || on_segment(q1, q2, p1) ||
         on_segment(q1, q2, p2);
}

bool in_convex(std::span<const Point> h, const Point& p) {
  if (h.empty()) return false;
  if (h.size() == 1) return h[0] == p;
  if (h.size() == 2) return on_segment(h[0], h[1], p);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (orient(h[i], h[(i + 1) % h.size()], p) < 0) return false;
  }
  return true;
}

std::string cell_text(const Cell& c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }

bool beta_below_bottleneck(const PointSet& ps, const Decimal& beta, const BottleneckInfo& be) {
  const long double b = static_cast<long double>(beta.mantissa) * std::pow(10.0L, -beta.scale);
  const long double e = std::sqrt(static_cast<long double>(be.squared_units)) * std::pow(10.0L, -ps.scale());
  return b < e;
}

}  // namespace

bool hulls_intersect(std::span<const Point> a, std::span<const Point> b) {
  for (const Point& p : a) {
    if (in_convex(b, p)) return true;
  }
  for (const Point& p : b) {
    if (in_convex(a, p)) return true;
  }
  if (a.size() < 2 || b.size() < 2) return false;
  const std::size_t ea = a.size() == 2 ? 1 : a.size();
  const std::size_t eb = b.size() == 2 ? 1 : b.size();
  for (std::size_t i = 0; i < ea; ++i) {
    for (std::size_t j = 0; j < eb; ++j) {
      if (segments_meet(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()])) return true;
    }
  }
  return false;
}

std::size_t BoxStructure::index_of(PointId id) const {
  const auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) {
    throw InternalError("point " + std::to_string(id) + " is not in box " + cell_text(box), "");
  }
  return position[static_cast<std::size_t>(it - ids.begin())];
}

BoxStructure box_structure(const Frame& frame, const Cell& box, const std::vector<PointId>& in_box, int k) {
  const std::size_t m = in_box.size();
  if (m < static_cast<std::size_t>(3 * k)) {
    throw PreconditionError("box " + cell_text(box) + " is not dense");
  }
  BoxStructure bs;
  bs.box = box;
  bs.ids = in_box;
  std::sort(bs.ids.begin(), bs.ids.end());
  std::vector<Point> pts;
  pts.reserve(m);
  for (PointId id : bs.ids) pts.push_back(frame.pts[id]);
  const std::size_t third = m / 3;
  const std::size_t two = 2 * m / 3;
  auto order_around = [&](const Point& c) {
    std::vector<PointId> order = bs.ids;
    std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
      const Point u = sub(frame.pts[a], c);
      const Point v = sub(frame.pts[b], c);
      return compare_ccw_angle(Point{u.x, -u.y}, Point{v.x, -v.y}) < 0;
    });
    return order;
  };
  auto narrow = [&](const Point& c) {
    const std::vector<PointId> order = order_around(c);
    for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
      const std::array<PointId, 3> reps{order[j], order[third + j], order[two + j]};
      for (int t = 0; t < 3; ++t) {
        if (cross(c, frame.pts[reps[t]], frame.pts[reps[(t + 1) % 3]]) >= 0) return false;
      }
    }
    return true;
  };
  bs.center = center_point_lattice(pts, narrow);
  bs.order = order_around(bs.center);
  bs.position.resize(m);
  for (std::size_t idx = 0; idx < m; ++idx) {
    const auto slot = std::lower_bound(bs.ids.begin(), bs.ids.end(), bs.order[idx]) - bs.ids.begin();
    bs.position[static_cast<std::size_t>(slot)] = idx;
  }

  for (int j = 0; j < k; ++j) {
    SectorStructure s;
    s.box = box;
    s.layer = j;
    s.center = bs.center;
    const auto uj = static_cast<std::size_t>(j);
    s.reps = {bs.order[uj], bs.order[third + uj], bs.order[two + uj]};
    for (int t = 0; t < 3; ++t) s.rays[t] = sub(frame.pts[s.reps[t]], bs.center);
    for (int t = 0; t < 3; ++t) {
      if (cross_vec(s.rays[t], s.rays[(t + 1) % 3]) >= 0) {
        throw InternalError("sector " + std::to_string(t) + " of box " + cell_text(box) + " layer " +
                                std::to_string(j) + " is not narrower than pi",
                            "");
      }
    }
    bs.sectors.push_back(s);
  }
  return bs;
}

int sector_of(const SectorStructure& s, const Point& p) {
  const Point u = sub(p, s.center);
  if (u.x == 0 && u.y == 0) return 0;
  for (int t = 0; t < 3; ++t) {
    const Point& a = s.rays[t];
    const Point& b = s.rays[(t + 1) % 3];
    if (cross_vec(a, u) >= 0) continue;
    const Int128 c = cross_vec(u, b);
    if (c < 0 || (c == 0 && dot_vec(u, b) > 0)) return t;
  }
  throw InternalError("point outside all sectors of box " + cell_text(s.box), "");
}

PointId attach_target(const BoxStructure& bs, int layer, PointId x, const Point& position, bool in_box) {
  const SectorStructure& s = bs.sectors.at(static_cast<std::size_t>(layer));
  if (!in_box) return s.reps[static_cast<std::size_t>(sector_of(s, position))];
  const std::size_t m = bs.order.size();
  const std::size_t third = m / 3;
  const std::size_t two = 2 * m / 3;
  const auto j = static_cast<std::size_t>(layer);
  const std::size_t d = (bs.index_of(x) + m - j) % m;
  if (d == 0) return kNoPoint;
  if (d <= third) return bs.order[j];
  if (d <= two) return bs.order[third + j];
  return bs.order[two + j];
}

BoxLayers layers_in_box(const Cell& box, const GridIndex& gi, int k) {
  if (!gi.is_dense(box)) throw PreconditionError("box " + cell_text(box) + " is not dense");
  BoxLayers out;
  out.structure = box_structure(gi.frame, box, gi.cells.at(box), k);
  std::vector<PointId> sparse;
  for (std::int64_t di = -2; di <= 2; ++di) {
    for (std::int64_t dj = -2; dj <= 2; ++dj) {
      if (di == 0 && dj == 0) continue;
      const auto it = gi.cells.find(Cell{box.i + di, box.j + dj});
      if (it == gi.cells.end()) continue;
      for (PointId id : it->second) {
        if (gi.assignment[id] == box) sparse.push_back(id);
      }
    }
  }
  std::sort(sparse.begin(), sparse.end());
  out.layers.resize(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    EdgeList& layer = out.layers[static_cast<std::size_t>(j)];
    for (PointId id : out.structure.ids) {
      const PointId t = attach_target(out.structure, j, id, gi.frame.pts[id], true);
      if (t != kNoPoint) layer.emplace_back(id, t);
    }
    for (PointId id : sparse) {
      layer.emplace_back(id, attach_target(out.structure, j, id, gi.frame.pts[id], false));
    }
    std::sort(layer.begin(), layer.end());
  }
  return out;
}

std::vector<Cell> connection_partners(const Cell& box, const std::set<Cell>& dense) {
  auto is_dense = [&](std::int64_t di, std::int64_t dj) {
    return dense.count(Cell{box.i + di, box.j + dj}) != 0;
  };
  std::vector<Cell> out;
  const bool below = is_dense(0, -1);
  const bool left = is_dense(-1, 0);
  const bool above = is_dense(0, 1);
  if (below) out.push_back(Cell{box.i, box.j - 1});
  if (left) out.push_back(Cell{box.i - 1, box.j});
  if (!below && !left && is_dense(-1, -1)) out.push_back(Cell{box.i - 1, box.j - 1});
  if (!above && !left && is_dense(-1, 1)) out.push_back(Cell{box.i - 1, box.j + 1});
  return out;
}

std::optional<Segment> select_connector(const BoxStructure& a, const BoxStructure& b, int layer,
                                        const Frame& frame, const std::set<Segment>& used) {
  const SectorStructure& sa = a.sectors.at(static_cast<std::size_t>(layer));
  const SectorStructure& sb = b.sectors.at(static_cast<std::size_t>(layer));
  for (int pa = 0; pa < 3; ++pa) {
    for (int pb = 0; pb < 3; ++pb) {
      const PointId p = sa.reps[pa];
      const PointId q = sb.reps[pb];
      if (sector_of(sb, frame.pts[p]) != pb || sector_of(sa, frame.pts[q]) != pa) continue;
      const Segment e(p, q);
      if (used.count(e) != 0) continue;
      return e;
    }
  }
  return std::nullopt;
}

std::vector<EdgeList> connect_boxes(const GridIndex& gi, const std::map<Cell, BoxLayers>& boxes, int k) {
  if (gi.dense.empty()) throw PreconditionError("no dense boxes to connect");
  std::vector<EdgeList> out(static_cast<std::size_t>(k));
  std::set<Segment> used;
  for (const Cell& box : gi.dense) {
    for (const Cell& partner : connection_partners(box, gi.dense)) {
      const BoxStructure& a = boxes.at(box).structure;
      const BoxStructure& b = boxes.at(partner).structure;
      for (int j = 0; j < k; ++j) {
        const auto e = select_connector(a, b, j, gi.frame, used);
        if (!e) {
          throw InternalError("no mutually contained representative pair between boxes " + cell_text(box) +
                                  " and " + cell_text(partner) + " in layer " + std::to_string(j),
                              "");
        }
        used.insert(*e);
        out[static_cast<std::size_t>(j)].push_back(*e);
      }
    }
  }
  for (EdgeList& l : out) std::sort(l.begin(), l.end());
  return out;
}

namespace {

void check_grid(const GridIndex& gi) {
  for (const auto& [cell, ids] : gi.cells) {
    if (gi.is_dense(cell)) {
      for (PointId id : ids) {
        if (gi.assignment[id] != cell) {
          throw InternalError("point " + std::to_string(id) + " in dense box " + cell_text(cell) +
                                  " assigned elsewhere",
                              "");
        }
      }
      continue;
    }
    bool adjacent = false;
    for (std::int64_t di = -1; di <= 1 && !adjacent; ++di) {
      for (std::int64_t dj = -1; dj <= 1 && !adjacent; ++dj) {
        adjacent = gi.is_dense(Cell{cell.i + di, cell.j + dj});
      }
    }
    if (!adjacent) throw InternalError("sparse box " + cell_text(cell) + " has no dense neighbor", "");
  }
  std::set<Cell> seen;
  std::deque<Cell> queue{*gi.dense.begin()};
  seen.insert(*gi.dense.begin());
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop_front();
    for (std::int64_t di = -1; di <= 1; ++di) {
      for (std::int64_t dj = -1; dj <= 1; ++dj) {
        const Cell d{c.i + di, c.j + dj};
        if (gi.is_dense(d) && seen.insert(d).second) queue.push_back(d);
      }
    }
  }
  if (seen.size() != gi.dense.size()) {
    throw InternalError("dense boxes are not connected under 8-adjacency (" + std::to_string(seen.size()) +
                            " of " + std::to_string(gi.dense.size()) + " reached)",
                        "");
  }
}

void check_hulls(const PointSet& ps, const std::map<Cell, BoxLayers>& boxes) {
  std::map<Cell, std::vector<Point>> hulls;
  for (const auto& [cell, bl] : boxes) {
    std::vector<PointId> members;
    for (const Segment& e : bl.layers.front()) {
      members.push_back(e.a);
      members.push_back(e.b);
    }
    members.insert(members.end(), bl.structure.ids.begin(), bl.structure.ids.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<Point>& h = hulls[cell];
    for (PointId id : convex_hull(members, ps)) h.push_back(ps[id]);
  }
  for (auto a = hulls.begin(); a != hulls.end(); ++a) {
    for (auto b = std::next(a); b != hulls.end(); ++b) {
      if (chebyshev(a->first, b->first) > 4) continue;
      if (hulls_intersect(a->second, b->second)) {
        throw InternalError("hulls of boxes " + cell_text(a->first) + " and " + cell_text(b->first) +
                                " intersect",
                            "");
      }
    }
  }
}

void check_box_graph(const GridIndex& gi) {
  std::map<Cell, std::size_t> index;
  for (const Cell& c : gi.dense) index.emplace(c, index.size());
  UnionFind uf(index.size());
  for (const Cell& c : gi.dense) {
    for (const Cell& p : connection_partners(c, gi.dense)) uf.unite(index.at(c), index.at(p));
  }
  if (uf.components() != 1) {
    throw InternalError("connection rules leave " + std::to_string(uf.components()) + " box components", "");
  }
}

void check_layer(const PointSet& ps, const Frame& frame, const EdgeList& layer, int j) {
  const std::string name = "layer " + std::to_string(j);
  UnionFind uf(ps.size());
  const Int128 limit = Int128{8} * frame.side * frame.side;
  for (const Segment& e : layer) {
    uf.unite(e.a, e.b);
    if (squared_distance(frame.pts[e.a], frame.pts[e.b]) > limit) {
      throw InternalError(name + ": edge " + detail::edge_text(e) + " longer than 2 sqrt(2) cell sides", "");
    }
  }
  if (uf.components() != 1) {
    throw InternalError(name + " has " + std::to_string(uf.components()) + " components", "");
  }
  std::map<Cell, std::vector<std::size_t>> buckets;
  for (std::size_t idx = 0; idx < layer.size(); ++idx) {
    const Cell ca = frame.cell_of(frame.pts[layer[idx].a]);
    const Cell cb = frame.cell_of(frame.pts[layer[idx].b]);
    for (std::int64_t i = std::min(ca.i, cb.i); i <= std::max(ca.i, cb.i); ++i) {
      for (std::int64_t jj = std::min(ca.j, cb.j); jj <= std::max(ca.j, cb.j); ++jj) {
        buckets[Cell{i, jj}].push_back(idx);
      }
    }
  }
  for (const auto& [cell, list] : buckets) {
    for (std::size_t x = 0; x < list.size(); ++x) {
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        const Segment& s = layer[list[x]];
        const Segment& t = layer[list[y]];
        if (properly_cross(s, t, ps)) {
          throw InternalError(name + ": edges " + detail::edge_text(s) + " and " + detail::edge_text(t) +
                                  " cross",
                              "");
        }
      }
    }
  }
}

std::map<Cell, BoxLayers> all_boxes(const GridIndex& gi, int k, unsigned threads) {
  const std::vector<Cell> cells(gi.dense.begin(), gi.dense.end());
  std::vector<std::optional<BoxLayers>> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        results[i] = layers_in_box(cells[i], gi, k);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::map<Cell, BoxLayers> out;
  for (std::size_t i = 0; i < cells.size(); ++i) out.emplace(cells[i], std::move(*results[i]));
  return out;
}

}  // namespace

DistributedBuild build_k_layers_detailed(const PointSet& ps, int k, const DistributedOptions& options) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const std::size_t need = static_cast<std::size_t>(12 * k - 3);
  if (ps.size() < need) {
    throw PreconditionError("need n >= 12k-3 = " + std::to_string(need) + " points, have " +
                            std::to_string(ps.size()));
  }
  DistributedBuild out;
  const EdgeList mst = build_emst(ps);
  out.mst_bottleneck = bottleneck(mst, ps);
  bool below = false;
  if (options.beta) {
    if (options.beta->mantissa <= 0) throw PreconditionError("beta must be positive");
    out.beta = Beta::from_decimal(*options.beta);
    below = beta_below_bottleneck(ps, *options.beta, out.mst_bottleneck);
  } else {
    out.beta = Beta::from_bottleneck(out.mst_bottleneck);
  }

  auto structural = [&](const std::string& message) -> void {
    if (below) throw PreconditionError(message + " (beta below BE(MST))");
    std::ostringstream ctx;
    ctx << "k=" << k << " beta=" << out.beta.real(ps) << " cell_side=" << out.grid.cell_side;
    detail::fail(ps, message, ctx.str());
  };

  try {
    out.grid = grid_partition(ps, k, out.beta);
  } catch (const PreconditionError& e) {
    if (below) throw;
    structural(e.what());
  }
  try {
    check_grid(out.grid);
    out.boxes = all_boxes(out.grid, k, std::max(1u, options.threads));
    check_hulls(ps, out.boxes);
    check_box_graph(out.grid);
    out.connectors = connect_boxes(out.grid, out.boxes, k);
  } catch (const InternalError& e) {
    structural(e.what());
  }

  LayerSet& ls = out.layers;
  ls.k = k;
  ls.beta = out.beta.real(ps);
  ls.layers.resize(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    EdgeList& layer = ls.layers[static_cast<std::size_t>(j)];
    for (const auto& [cell, bl] : out.boxes) {
      const EdgeList& part = bl.layers[static_cast<std::size_t>(j)];
      layer.insert(layer.end(), part.begin(), part.end());
    }
    const EdgeList& conn = out.connectors[static_cast<std::size_t>(j)];
    layer.insert(layer.end(), conn.begin(), conn.end());
    std::sort(layer.begin(), layer.end());
  }

  try {
    std::set<Segment> all;
    for (int j = 0; j < k; ++j) {
      const EdgeList& layer = ls.layers[static_cast<std::size_t>(j)];
      if (std::adjacent_find(layer.begin(), layer.end()) != layer.end()) {
        throw InternalError("layer " + std::to_string(j) + " repeats an edge", "");
      }
      for (const Segment& e : layer) {
        if (!all.insert(e).second) {
          throw InternalError("edge " + detail::edge_text(e) + " appears in two layers", "");
        }
      }
      check_layer(ps, out.grid.frame, layer, j);
    }
  } catch (const InternalError& e) {
    structural(e.what());
  }

  for (const EdgeList& layer : ls.layers) {
    const BottleneckInfo b = bottleneck(layer, ps);
    ls.stats.push_back(LayerStats{b.length, layer.size()});
  }
  out.bound = 12.0 * std::sqrt(2.0) * k * ls.beta;
  return out;
}

LayerSet build_k_layers(const PointSet& ps, int k, const DistributedOptions& options) {
  return build_k_layers_detailed(ps, k, options).layers;
}

}  // namespace planelayers
