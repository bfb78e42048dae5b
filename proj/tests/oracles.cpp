#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

namespace oracle {

namespace {

BigRational sub_r(std::int64_t a, std::int64_t b) { return BigRational(BigInt(a) - BigInt(b)); }

}  // namespace

BigInt big_cross(const Point& o, const Point& a, const Point& b) {
  return (BigInt(a.x) - o.x) * (BigInt(b.y) - o.y) - (BigInt(a.y) - o.y) * (BigInt(b.x) - o.x);
}

bool rational_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  // p1 + t (p2 - p1) = q1 + u (q2 - q1)
  const BigRational rx = sub_r(p2.x, p1.x), ry = sub_r(p2.y, p1.y);
  const BigRational sx = sub_r(q2.x, q1.x), sy = sub_r(q2.y, q1.y);
  const BigRational den = rx * sy - ry * sx;
  if (den == 0) return false;
  const BigRational qpx = sub_r(q1.x, p1.x), qpy = sub_r(q1.y, p1.y);
  const BigRational t = (qpx * sy - qpy * sx) / den;
  const BigRational u = (qpx * ry - qpy * rx) / den;
  return t > 0 && t < 1 && u > 0 && u < 1;
}

EdgeList kruskal(const PointSet& ps) {
  struct Cand {
    BigInt d2;
    PointId a, b;
  };
  std::vector<Cand> all;
  for (PointId a = 0; a < ps.size(); ++a) {
    for (PointId b = a + 1; b < ps.size(); ++b) {
      const BigInt dx = BigInt(ps[a].x) - ps[b].x;
      const BigInt dy = BigInt(ps[a].y) - ps[b].y;
      all.push_back({dx * dx + dy * dy, a, b});
    }
  }
  std::sort(all.begin(), all.end(), [](const Cand& x, const Cand& y) {
    if (x.d2 != y.d2) return x.d2 < y.d2;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  std::vector<std::size_t> root(ps.size());
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  EdgeList out;
  for (const Cand& c : all) {
    const auto ra = find(c.a), rb = find(c.b);
    if (ra == rb) continue;
    root[ra] = rb;
    out.emplace_back(c.a, c.b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t bfs_components(const EdgeList& edges, std::size_t n) {
  std::vector<std::vector<PointId>> adj(n);
  for (const Segment& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (PointId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::deque<PointId> q{s};
    seen[s] = true;
    while (!q.empty()) {
      const PointId v = q.front();
      q.pop_front();
      for (PointId w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          q.push_back(w);
        }
      }
    }
  }
  return count;
}

std::set<PointId> brute_hull_vertices(std::span<const PointId> ids, const PointSet& ps) {
  // In general position p is a corner iff for some q every other point lies
  // strictly on one side of the line pq.
  std::set<PointId> out;
  if (ids.size() <= 2) return std::set<PointId>(ids.begin(), ids.end());
  for (PointId p : ids) {
    for (PointId q : ids) {
      if (q == p) continue;
      bool left_ok = true, right_ok = true;
      for (PointId r : ids) {
        if (r == p || r == q) continue;
        const BigInt c = big_cross(ps[p], ps[q], ps[r]);
        if (c <= 0) left_ok = false;
        if (c >= 0) right_ok = false;
      }
      if (left_ok || right_ok) {
        out.insert(p);
        break;
      }
    }
  }
  return out;
}

std::size_t brute_tukey_depth(const Point& c, std::span<const Point> pts) {
  using I = __int128;
  std::vector<Point> v;
  for (const Point& p : pts) v.push_back(Point{p.x - c.x, p.y - c.y});
  // Boundary directions: every c->p and every sum or difference of two, which
  // hits each open arc between consecutive critical directions.
  std::vector<Point> dirs = v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      dirs.push_back(Point{v[i].x + v[j].x, v[i].y + v[j].y});
      dirs.push_back(Point{v[i].x - v[j].x, v[i].y - v[j].y});
    }
  }
  std::size_t best = pts.size();
  for (const Point& d : dirs) {
    if (d.x == 0 && d.y == 0) continue;
    std::size_t left = 0, right = 0;
    for (const Point& w : v) {
      const I x = I{d.x} * w.y - I{d.y} * w.x;
      if (x >= 0) ++left;
      if (x <= 0) ++right;
    }
    best = std::min({best, left, right});
  }
  return best;
}

std::vector<std::size_t> angle_ranks(std::span<const Point> dirs) {
  auto quadrant = [](const Point& v) {
    if (v.x > 0 && v.y >= 0) return 0;
    if (v.x <= 0 && v.y > 0) return 1;
    if (v.x < 0 && v.y <= 0) return 2;
    return 3;
  };
  std::vector<std::size_t> rank(dirs.size(), 0);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      const int qi = quadrant(dirs[i]), qj = quadrant(dirs[j]);
      bool smaller = false;
      if (qj != qi) {
        smaller = qj < qi;
      } else {
        smaller = big_cross(Point{0, 0}, dirs[j], dirs[i]) > 0;
      }
      if (smaller) ++rank[i];
    }
  }
  return rank;
}

std::vector<std::vector<int>> tree_distances(const EdgeList& edges, std::size_t n) {
  std::vector<std::vector<PointId>> adj(n);
  for (const Segment& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (PointId s = 0; s < n; ++s) {
    std::deque<PointId> q{s};
    dist[s][s] = 0;
    while (!q.empty()) {
      const PointId v = q.front();
      q.pop_front();
      for (PointId w : adj[v]) {
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push_back(w);
        }
      }
    }
  }
  return dist;
}

PointSet random_general(std::size_t n, std::uint64_t seed, std::int64_t range, int scale) {
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  while (pts.size() < n) {
    const Point p{static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(range)),
                  static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(range))};
    bool ok = std::find(pts.begin(), pts.end(), p) == pts.end();
    for (std::size_t a = 0; ok && a < pts.size(); ++a) {
      for (std::size_t b = a + 1; ok && b < pts.size(); ++b) {
        if (big_cross(pts[a], pts[b], p) == 0) ok = false;
      }
    }
    if (ok) pts.push_back(p);
  }
  return PointSet(std::move(pts), scale);
}

BigRational line_offset(std::size_t i, const BigRational& eps) {
  const BigRational phi(BigInt(6180339887), BigInt(10000000000LL));
  BigRational f = phi * BigInt(i);
  const BigInt whole = boost::multiprecision::numerator(f) / boost::multiprecision::denominator(f);
  f -= BigRational(whole);
  return eps * (f - BigRational(1, 2));
}

}  // namespace oracle

namespace oracle {

bool plane(const EdgeList& edges, const PointSet& ps) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Segment& s = edges[i];
      const Segment& t = edges[j];
      if (s.has(t.a) || s.has(t.b)) continue;
      const Point &a = ps[s.a], &b = ps[s.b], &c = ps[t.a], &d = ps[t.b];
      if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
          std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y)) {
        continue;
      }
      if (rational_cross(a, b, c, d)) return false;
    }
  }
  return true;
}

bool spanning_tree(const EdgeList& edges, std::size_t n) {
  const std::set<Segment> distinct(edges.begin(), edges.end());
  return distinct.size() == edges.size() && edges.size() + 1 == n && bfs_components(edges, n) == 1;
}

BigInt max_squared(const EdgeList& edges, const PointSet& ps) {
  BigInt best = 0;
  for (const Segment& e : edges) {
    const BigInt dx = BigInt(ps[e.a].x) - ps[e.b].x;
    const BigInt dy = BigInt(ps[e.a].y) - ps[e.b].y;
    best = std::max(best, BigInt(dx * dx + dy * dy));
  }
  return best;
}

}  // namespace oracle
