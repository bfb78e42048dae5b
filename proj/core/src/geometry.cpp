#include "planelayers/geometry.hpp"

#include <cmath>
#include <numeric>

#include "planelayers/error.hpp"

namespace planelayers {

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::Clockwise:
      return "CLOCKWISE";
    case Orientation::CounterClockwise:
      return "COUNTERCLOCKWISE";
    case Orientation::Collinear:
      return "COLLINEAR";
  }
  return "?";
}

PointSet::PointSet(std::vector<Point> points, int scale) : points_(std::move(points)), scale_(scale) {
  if (scale < 0 || scale > 18) {
    throw PreconditionError("coordinate scale out of range: " + std::to_string(scale));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point& p = points_[i];
    if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate ||
        p.y < -kMaxCoordinate) {
      throw PreconditionError("coordinate magnitude too large at point " + std::to_string(i));
    }
  }
  std::vector<PointId> order(points_.size());
  std::iota(order.begin(), order.end(), PointId{0});
  std::sort(order.begin(), order.end(),
            [&](PointId a, PointId b) { return points_[a] < points_[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points_[order[i - 1]] == points_[order[i]]) {
      throw PreconditionError("duplicate points " + std::to_string(order[i - 1]) + " and " +
                              std::to_string(order[i]));
    }
  }
}

double PointSet::unit() const { return std::pow(10.0, -scale_); }

PointSet PointSet::mirrored() const {
  std::vector<Point> m = points_;
  for (Point& p : m) p.y = -p.y;
  return PointSet(std::move(m), scale_);
}

void PointSet::check_id(PointId id) const {
  if (id >= points_.size()) {
    throw PreconditionError("invalid point id " + std::to_string(id));
  }
}

Int128 cross(const Point& o, const Point& a, const Point& b) {
  const Int128 ax = Int128{a.x} - o.x;
  const Int128 ay = Int128{a.y} - o.y;
  const Int128 bx = Int128{b.x} - o.x;
  const Int128 by = Int128{b.y} - o.y;
  return ax * by - ay * bx;
}

Int128 dot(const Point& o, const Point& a, const Point& b) {
  const Int128 ax = Int128{a.x} - o.x;
  const Int128 ay = Int128{a.y} - o.y;
  const Int128 bx = Int128{b.x} - o.x;
  const Int128 by = Int128{b.y} - o.y;
  return ax * bx + ay * by;
}

Int128 squared_distance(const Point& a, const Point& b) {
  const Int128 dx = Int128{a.x} - b.x;
  const Int128 dy = Int128{a.y} - b.y;
  return dx * dx + dy * dy;
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const Int128 c = cross(p, q, r);
  if (c > 0) return Orientation::CounterClockwise;
  if (c < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

Orientation orientation(const PointSet& ps, PointId p, PointId q, PointId r) {
  return orientation(ps[p], ps[q], ps[r]);
}

double distance(const PointSet& ps, PointId a, PointId b) {
  return std::sqrt(static_cast<double>(squared_distance(ps[a], ps[b]))) * ps.unit();
}

double length(const PointSet& ps, const Segment& s) { return distance(ps, s.a, s.b); }

Int128 squared_length(const PointSet& ps, const Segment& s) {
  return squared_distance(ps[s.a], ps[s.b]);
}

namespace {

int sign(Orientation o) { return static_cast<int>(o); }

bool within_box(const Point& p, const Point& q, const Point& r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

// r lies on the closed segment pq.
bool on_segment(const Point& p, const Point& q, const Point& r) {
  return orientation(p, q, r) == Orientation::Collinear && within_box(p, q, r);
}

bool closed_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = sign(orientation(a, b, c));
  const int o2 = sign(orientation(a, b, d));
  const int o3 = sign(orientation(c, d, a));
  const int o4 = sign(orientation(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

}  // namespace

bool properly_cross(const Segment& s1, const Segment& s2, const PointSet& ps) {
  ps.check_id(s1.a);
  ps.check_id(s1.b);
  ps.check_id(s2.a);
  ps.check_id(s2.b);
  if (s1.has(s2.a) || s1.has(s2.b)) return false;
  const Point& a = ps[s1.a];
  const Point& b = ps[s1.b];
  const Point& c = ps[s2.a];
  const Point& d = ps[s2.b];
  return sign(orientation(a, b, c)) * sign(orientation(a, b, d)) < 0 &&
         sign(orientation(c, d, a)) * sign(orientation(c, d, b)) < 0;
}

bool improperly_meet(const Segment& s1, const Segment& s2, const PointSet& ps) {
  if (s1 == s2) return true;
  if (properly_cross(s1, s2, ps)) return false;
  PointId shared = kNoPoint;
  if (s1.has(s2.a)) shared = s2.a;
  if (s1.has(s2.b)) shared = s2.b;
  if (shared == kNoPoint) {
    return closed_intersect(ps[s1.a], ps[s1.b], ps[s2.a], ps[s2.b]);
  }
  const Point& o = ps[shared];
  const Point& u = ps[s1.other(shared)];
  const Point& v = ps[s2.other(shared)];
  return cross(o, u, v) == 0 && dot(o, u, v) > 0;
}

bool strictly_inside_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  const Orientation o = orientation(a, b, c);
  if (o == Orientation::Collinear) return false;
  return orientation(a, b, p) == o && orientation(b, c, p) == o && orientation(c, a, p) == o;
}

std::vector<PointId> convex_hull(std::span<const PointId> ids, const PointSet& ps) {
  std::vector<PointId> pts(ids.begin(), ids.end());
  for (PointId id : pts) ps.check_id(id);
  std::sort(pts.begin(), pts.end(), [&](PointId a, PointId b) {
    if (ps[a].x != ps[b].x) return ps[a].x < ps[b].x;
    if (ps[a].y != ps[b].y) return ps[a].y < ps[b].y;
    return a < b;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](PointId a, PointId b) { return ps[a] == ps[b]; }),
            pts.end());
  if (pts.size() <= 1) return pts;

  std::vector<PointId> hull(2 * pts.size());
  std::size_t k = 0;
  for (PointId id : pts) {
    while (k >= 2 && cross(ps[hull[k - 2]], ps[hull[k - 1]], ps[id]) <= 0) --k;
    hull[k++] = id;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const PointId id = pts[i];
    while (k >= lower && cross(ps[hull[k - 2]], ps[hull[k - 1]], ps[id]) <= 0) --k;
    hull[k++] = id;
  }
  hull.resize(k - 1);

  auto start = std::min_element(hull.begin(), hull.end(), [&](PointId a, PointId b) {
    if (ps[a].y != ps[b].y) return ps[a].y < ps[b].y;
    return ps[a].x < ps[b].x;
  });
  std::rotate(hull.begin(), start, hull.end());
  return hull;
}

int compare_ccw_angle(const Point& u, const Point& v) {
  auto half = [](const Point& w) { return (w.y < 0 || (w.y == 0 && w.x < 0)) ? 1 : 0; };
  const int hu = half(u);
  const int hv = half(v);
  if (hu != hv) return hu < hv ? -1 : 1;
  const Int128 c = Int128{u.x} * v.y - Int128{u.y} * v.x;
  if (c > 0) return -1;
  if (c < 0) return 1;
  return 0;
}

std::vector<PointId> ccw_order_around(PointId pivot, std::span<const PointId> ids,
                                      const PointSet& ps) {
  ps.check_id(pivot);
  const Point& o = ps[pivot];
  std::vector<PointId> out(ids.begin(), ids.end());
  for (PointId id : out) {
    ps.check_id(id);
    if (ps[id] == o) throw PreconditionError("ccw_order_around: pivot among ids");
  }
  std::sort(out.begin(), out.end(), [&](PointId a, PointId b) {
    const Point u{ps[a].x - o.x, ps[a].y - o.y};
    const Point v{ps[b].x - o.x, ps[b].y - o.y};
    const int c = compare_ccw_angle(u, v);
    if (c != 0) return c < 0;
    const Int128 da = squared_distance(o, ps[a]);
    const Int128 db = squared_distance(o, ps[b]);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

}  // namespace planelayers
