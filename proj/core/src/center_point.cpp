#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>

#include "planelayers/distributed.hpp"
#include "planelayers/error.hpp"

namespace planelayers {

namespace {

Point sub(const Point& a, const Point& b) { return Point{a.x - b.x, a.y - b.y}; }

Int128 cross_vec(const Point& u, const Point& v) { return Int128{u.x} * v.y - Int128{u.y} * v.x; }

std::int64_t round_div(Int128 num, Int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int128 q = num / den;
  Int128 r = num % den;
  if (r < 0) {
    --q;
    r += den;
  }
  if (2 * r >= den) ++q;
  return static_cast<std::int64_t>(q);
}

std::int64_t median_of(std::vector<std::int64_t> v) {
  std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
  return v[v.size() / 2];
}

using Vec = std::pair<long double, long double>;

// Clips a convex polygon to the closed left side of the directed line a->b.
std::vector<Vec> clip(const std::vector<Vec>& poly, const Vec& a, const Vec& b) {
  auto side = [&](const Vec& p) {
    return (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
  };
  std::vector<Vec> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec& p = poly[i];
    const Vec& q = poly[(i + 1) % poly.size()];
    const long double sp = side(p);
    const long double sq = side(q);
    if (sp >= 0) out.push_back(p);
    if ((sp >= 0) != (sq >= 0)) {
      const long double t = sp / (sp - sq);
      out.emplace_back(p.first + t * (q.first - p.first), p.second + t * (q.second - p.second));
    }
  }
  return out;
}

// Lattice points spread over the approximate depth region.
std::vector<Point> region_candidates(std::span<const Point> pts, std::size_t need) {
  const Point origin = pts[0];
  auto rel = [&](const Point& p) {
    return Vec{static_cast<long double>(p.x - origin.x), static_cast<long double>(p.y - origin.y)};
  };
  long double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (const Point& p : pts) {
    const Vec v = rel(p);
    x0 = std::min(x0, v.first);
    x1 = std::max(x1, v.first);
    y0 = std::min(y0, v.second);
    y1 = std::max(y1, v.second);
  }
  std::vector<Vec> poly{{x0 - 1, y0 - 1}, {x1 + 1, y0 - 1}, {x1 + 1, y1 + 1}, {x0 - 1, y1 + 1}};
  for (const auto& [a, b] : depth_constraints(pts, need)) {
    poly = clip(poly, rel(pts[a]), rel(pts[b]));
    if (poly.empty()) return {};
  }
  long double cx = 0, cy = 0;
  for (const Vec& v : poly) {
    cx += v.first;
    cy += v.second;
  }
  cx /= static_cast<long double>(poly.size());
  cy /= static_cast<long double>(poly.size());
  auto lattice = [&](long double x, long double y) {
    return Point{origin.x + static_cast<std::int64_t>(std::llround(x)), origin.y + static_cast<std::int64_t>(std::llround(y))};
  };
  std::vector<Point> out{lattice(cx, cy)};
  for (const long double w : {0.5L, 0.25L, 0.75L}) {
    for (const Vec& v : poly) out.push_back(lattice(cx + w * (v.first - cx), cy + w * (v.second - cy)));
  }
  return out;
}

// One probe per face of the arrangement of pair lines and horizontal lines
// through the points, taken at several distances along the bisectors at each
// vertex. The clockwise order from +x, and with it every sector test, is
// constant on such a face.
std::vector<Point> face_candidates(std::span<const Point> pts) {
  const Point origin = pts[0];
  struct Line {
    Vec p;
    Vec d;
  };
  auto rel = [&](const Point& q) {
    return Vec{static_cast<long double>(q.x - origin.x), static_cast<long double>(q.y - origin.y)};
  };
  auto unit = [](long double x, long double y) {
    const long double len = std::hypot(x, y);
    return Vec{x / len, y / len};
  };
  std::vector<Line> lines;
  long double diam = 0;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    lines.push_back(Line{rel(pts[a]), Vec{1, 0}});
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const Vec pa = rel(pts[a]), pb = rel(pts[b]);
      lines.push_back(Line{pa, unit(pb.first - pa.first, pb.second - pa.second)});
      diam = std::max(diam, std::hypot(pb.first - pa.first, pb.second - pa.second));
    }
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Line& u = lines[i];
      const Line& v = lines[j];
      const long double den = u.d.first * v.d.second - u.d.second * v.d.first;
      if (std::abs(den) < 1e-15L) continue;
      const long double t = ((v.p.first - u.p.first) * v.d.second - (v.p.second - u.p.second) * v.d.first) / den;
      const Vec x{u.p.first + t * u.d.first, u.p.second + t * u.d.second};
      if (std::hypot(x.first, x.second) > 2 * diam) continue;
      const Vec dirs[4] = {unit(u.d.first + v.d.first, u.d.second + v.d.second),
                           unit(u.d.first - v.d.first, u.d.second - v.d.second),
                           unit(-u.d.first - v.d.first, -u.d.second - v.d.second),
                           unit(v.d.first - u.d.first, v.d.second - u.d.second)};
      for (int s = 4; s <= 40; s += 3) {
        const long double r = std::ldexp(diam, -s);
        for (const Vec& d : dirs) {
          out.push_back(Point{origin.x + static_cast<std::int64_t>(std::llround(x.first + r * d.first)),
                              origin.y + static_cast<std::int64_t>(std::llround(x.second + r * d.second))});
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<PointId, PointId>> depth_constraints(std::span<const Point> pts, std::size_t depth) {
  const std::size_t m = pts.size();
  std::vector<std::pair<PointId, PointId>> out;
  if (m < 2 || depth == 0) return out;
  auto less = [](const Point& u, const Point& v) { return compare_ccw_angle(u, v) < 0; };
  std::vector<Point> dirs;
  for (std::size_t a = 0; a < m; ++a) {
    dirs.clear();
    for (std::size_t b = 0; b < m; ++b) {
      if (b != a) dirs.push_back(sub(pts[b], pts[a]));
    }
    std::sort(dirs.begin(), dirs.end(), less);
    const std::size_t total = dirs.size();
    // points strictly inside the open angular interval (from, to), counter-clockwise
    auto between = [&](const Point& from, const Point& to) {
      const auto lo = static_cast<std::size_t>(std::upper_bound(dirs.begin(), dirs.end(), from, less) - dirs.begin());
      const auto hi = static_cast<std::size_t>(std::lower_bound(dirs.begin(), dirs.end(), to, less) - dirs.begin());
      return less(from, to) ? hi - lo : (total - lo) + hi;
    };
    for (std::size_t b = 0; b < m; ++b) {
      if (b == a) continue;
      const Point v = sub(pts[b], pts[a]);
      const Point back{-v.x, -v.y};
      if (between(back, v) < depth) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t tukey_depth_simple(const Point& c, std::span<const Point> pts) {
  const std::size_t m = pts.size();
  if (m == 0) return 0;
  std::vector<Point> dirs;
  dirs.reserve(m);
  for (const Point& p : pts) dirs.push_back(sub(p, c));
  std::sort(dirs.begin(), dirs.end(),
            [](const Point& u, const Point& v) { return compare_ccw_angle(u, v) < 0; });
  std::size_t best = m;
  std::size_t j = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (j < i + 1) j = i + 1;
    while (j < i + m && cross_vec(dirs[i], dirs[j % m]) > 0) ++j;
    const std::size_t left = j - i - 1;
    best = std::min({best, left, m - 1 - left});
  }
  return best;
}

bool clear_of_pairs(const Point& c, std::span<const Point> pts) {
  std::vector<Point> dirs;
  dirs.reserve(pts.size());
  for (const Point& p : pts) {
    Point d = sub(p, c);
    if (d.x == 0 && d.y == 0) return false;
    if (d.y < 0 || (d.y == 0 && d.x < 0)) d = Point{-d.x, -d.y};
    dirs.push_back(d);
  }
  std::sort(dirs.begin(), dirs.end(), [](const Point& u, const Point& v) { return cross_vec(u, v) > 0; });
  for (std::size_t i = 1; i < dirs.size(); ++i) {
    if (cross_vec(dirs[i - 1], dirs[i]) == 0) return false;
  }
  return true;
}

Point center_point_lattice(std::span<const Point> pts, const std::function<bool(const Point&)>& extra) {
  const std::size_t m = pts.size();
  if (m < 3) throw PreconditionError("center point needs at least 3 points");

  std::vector<Point> simple;
  Int128 sx = 0;
  Int128 sy = 0;
  for (const Point& p : pts) {
    sx += p.x;
    sy += p.y;
  }
  simple.push_back(Point{round_div(sx, static_cast<Int128>(m)), round_div(sy, static_cast<Int128>(m))});
  {
    std::vector<std::int64_t> xs;
    std::vector<std::int64_t> ys;
    for (const Point& p : pts) {
      xs.push_back(p.x);
      ys.push_back(p.y);
    }
    simple.push_back(Point{median_of(xs), median_of(ys)});
  }
  auto accept = [&](const Point& base, std::size_t need) -> std::optional<Point> {
    for (std::int64_t t = 0; t <= 32; ++t) {
      const Point c = t == 0 ? base : Point{base.x + t, base.y + (37 * t) % 11 - 5};
      if (clear_of_pairs(c, pts) && tukey_depth_simple(c, pts) >= need && (!extra || extra(c))) return c;
    }
    return std::nullopt;
  };
  // ceil(m/3) first; small sets in convex position only reach floor(m/3)
  for (const std::size_t need : {(m + 2) / 3, m / 3}) {
    for (const Point& base : simple) {
      if (auto c = accept(base, need)) return *c;
    }
    for (const Point& base : region_candidates(pts, need)) {
      if (auto c = accept(base, need)) return *c;
    }
    if (need == m / 3) break;
  }
  if (m <= 12) {
    for (const std::size_t need : {(m + 2) / 3, m / 3}) {
      for (const Point& c : face_candidates(pts)) {
        if (clear_of_pairs(c, pts) && tukey_depth_simple(c, pts) >= need && (!extra || extra(c))) return c;
      }
    }
  }
  throw InternalError("no lattice center point found for " + std::to_string(m) + " points", "");
}

Point center_point_lattice(std::span<const Point> pts) { return center_point_lattice(pts, {}); }

CenterPoint center_point(std::span<const PointId> ids, const PointSet& ps) {
  std::int64_t max_abs = 0;
  for (PointId id : ids) {
    ps.check_id(id);
    max_abs = std::max({max_abs, std::abs(ps[id].x), std::abs(ps[id].y)});
  }
  int r = 6;
  while (r > 0 && (ps.scale() + r > 18 ||
                   static_cast<long double>(max_abs) * std::pow(10.0L, r) > std::ldexp(1.0L, 58))) {
    --r;
  }
  std::int64_t lift = 1;
  for (int i = 0; i < r; ++i) lift *= 10;
  std::vector<Point> pts;
  pts.reserve(ids.size());
  for (PointId id : ids) pts.push_back(Point{ps[id].x * lift, ps[id].y * lift});
  CenterPoint cp;
  cp.lattice = center_point_lattice(pts);
  cp.scale = ps.scale() + r;
  const double unit = std::pow(10.0, -cp.scale);
  cp.x = static_cast<double>(cp.lattice.x) * unit;
  cp.y = static_cast<double>(cp.lattice.y) * unit;
  return cp;
}

}  // namespace planelayers
