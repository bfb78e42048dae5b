#include <algorithm>
#include <cmath>
#include <map>

#include "detail.hpp"
#include "planelayers/distributed.hpp"
#include "planelayers/error.hpp"

namespace planelayers {

namespace {

using View = std::map<Cell, std::vector<PointId>>;

// Structures computed from views are keyed by the in-box ids the view saw,
// so a stale or partial view can never reuse a complete one.
class StructureCache {
 public:
  StructureCache(const Frame& frame, int k) : frame_(frame), k_(k) {}

  const BoxStructure& get(const Cell& box, const std::vector<PointId>& ids) {
    auto key = std::make_pair(box, ids);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, box_structure(frame_, box, ids, k_)).first;
    return it->second;
  }

 private:
  const Frame& frame_;
  int k_;
  std::map<std::pair<Cell, std::vector<PointId>>, BoxStructure> cache_;
};

View view_around(const Cell& center, const GridIndex& gi, int radius) {
  View v;
  for (std::int64_t di = -radius; di <= radius; ++di) {
    for (std::int64_t dj = -radius; dj <= radius; ++dj) {
      const Cell c{center.i + di, center.j + dj};
      const auto it = gi.cells.find(c);
      if (it != gi.cells.end()) v.emplace(c, it->second);
    }
  }
  return v;
}

// Edges initiated by x, using only the points of its view.
std::vector<EdgeList> initiate(PointId x, const View& view, const Frame& frame, int k, StructureCache& cache) {
  const Cell own = frame.cell_of(frame.pts[x]);
  std::set<Cell> dense;
  for (const auto& [cell, ids] : view) {
    if (ids.size() >= static_cast<std::size_t>(3 * k)) dense.insert(cell);
  }
  std::vector<EdgeList> out(static_cast<std::size_t>(k));
  const auto owner = nearest_dense_center(frame, frame.pts[x], dense);
  if (!owner) return out;
  const BoxStructure& bs = cache.get(*owner, view.at(*owner));
  for (int j = 0; j < k; ++j) {
    const PointId t = attach_target(bs, j, x, frame.pts[x], own == *owner);
    if (t != kNoPoint) out[static_cast<std::size_t>(j)].emplace_back(x, t);
  }
  if (dense.count(own) == 0) return out;

  std::set<Cell> near_dense;
  for (const Cell& c : dense) {
    if (chebyshev(c, own) <= 1) near_dense.insert(c);
  }
  for (const Cell& partner : connection_partners(own, near_dense)) {
    const BoxStructure& pb = cache.get(partner, view.at(partner));
    std::set<Segment> used;
    for (int j = 0; j < k; ++j) {
      const auto e = select_connector(bs, pb, j, frame, used);
      if (!e) continue;
      used.insert(*e);
      if (e->has(x)) out[static_cast<std::size_t>(j)].push_back(*e);
    }
  }
  return out;
}

}  // namespace

LocalityCertificate locality_certificate(const PointSet& ps, const DistributedBuild& build, PointId point) {
  ps.check_id(point);
  const GridIndex& gi = build.grid;
  const Frame& frame = gi.frame;
  const int k = build.layers.k;
  LocalityCertificate cert;
  cert.point = point;
  cert.euclidean_radius = 3.0 * std::sqrt(2.0) * gi.cell_side;
  cert.local.assign(static_cast<std::size_t>(k), {});
  cert.global.assign(static_cast<std::size_t>(k), {});

  StructureCache cache(frame, k);
  const Cell home = gi.cell_of[point];
  for (const auto& [cell, ids] : view_around(home, gi, cert.radius_cells)) {
    const View view = view_around(cell, gi, cert.radius_cells);
    std::size_t size = 0;
    for (const auto& [c, members] : view) size += members.size();
    for (PointId x : ids) {
      cert.max_view = std::max(cert.max_view, size);
      ++cert.initiators;
      const auto edges = initiate(x, view, frame, k, cache);
      for (int j = 0; j < k; ++j) {
        for (const Segment& e : edges[static_cast<std::size_t>(j)]) {
          if (e.has(point)) cert.local[static_cast<std::size_t>(j)].push_back(e);
        }
      }
    }
  }
  for (int j = 0; j < k; ++j) {
    EdgeList& local = cert.local[static_cast<std::size_t>(j)];
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    for (const Segment& e : build.layers.layers[static_cast<std::size_t>(j)]) {
      if (e.has(point)) cert.global[static_cast<std::size_t>(j)].push_back(e);
    }
  }
  cert.ok = cert.local == cert.global;
  if (!cert.ok) {
    std::string ctx;
    for (int j = 0; j < k; ++j) {
      ctx += "layer " + std::to_string(j) + " local: " + detail::edges_text(cert.local[static_cast<std::size_t>(j)]) +
             "\nlayer " + std::to_string(j) + " global: " +
             detail::edges_text(cert.global[static_cast<std::size_t>(j)]) + "\n";
    }
    detail::fail(ps, "locality violation at point " + std::to_string(point), ctx);
  }
  return cert;
}

LocalityCertificate locality_certificate(const PointSet& ps, int k, const std::optional<Decimal>& beta,
                                         PointId point) {
  DistributedOptions options;
  options.beta = beta;
  return locality_certificate(ps, build_k_layers_detailed(ps, k, options), point);
}

}  // namespace planelayers
