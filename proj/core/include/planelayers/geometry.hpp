#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace planelayers {

using Int128 = __int128;
using PointId = std::size_t;

inline constexpr PointId kNoPoint = static_cast<PointId>(-1);

// Coordinates are exact integers in units of 10^-scale of the owning set.
// The magnitude cap keeps every orientation determinant inside 128 bits.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 59;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  auto operator<=>(const Point&) const = default;
};

// Undirected edge between two point ids, normalized so that a < b.
struct Segment {
  PointId a = 0;
  PointId b = 0;

  Segment() = default;
  Segment(PointId u, PointId v) : a(std::min(u, v)), b(std::max(u, v)) {}

  bool has(PointId v) const { return a == v || b == v; }
  PointId other(PointId v) const { return v == a ? b : a; }

  auto operator<=>(const Segment&) const = default;
};

using EdgeList = std::vector<Segment>;

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

const char* to_string(Orientation o);

class PointSet {
 public:
  PointSet() = default;
  // Throws PreconditionError on duplicate points or coordinates beyond
  // kMaxCoordinate.
  PointSet(std::vector<Point> points, int scale);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](PointId id) const { return points_[id]; }
  const std::vector<Point>& points() const { return points_; }

  int scale() const { return scale_; }
  double unit() const;
  double real_x(PointId id) const { return static_cast<double>(points_[id].x) * unit(); }
  double real_y(PointId id) const { return static_cast<double>(points_[id].y) * unit(); }

  // Reflection across the x-axis.
  PointSet mirrored() const;

  void check_id(PointId id) const;

 private:
  std::vector<Point> points_;
  int scale_ = 0;
};

Int128 cross(const Point& origin, const Point& a, const Point& b);
Int128 dot(const Point& origin, const Point& a, const Point& b);
Int128 squared_distance(const Point& a, const Point& b);

Orientation orientation(const Point& p, const Point& q, const Point& r);
Orientation orientation(const PointSet& ps, PointId p, PointId q, PointId r);

double distance(const PointSet& ps, PointId a, PointId b);
double length(const PointSet& ps, const Segment& s);
Int128 squared_length(const PointSet& ps, const Segment& s);

// True iff the open segments meet in exactly one point and the segments share
// no endpoint. Collinear overlaps and touchings count as non-crossing.
bool properly_cross(const Segment& s1, const Segment& s2, const PointSet& ps);

// Closed segments meet somewhere other than a shared endpoint without crossing
// properly: T-junctions and collinear overlaps. Used by the optional overlap
// flag of the verifier.
bool improperly_meet(const Segment& s1, const Segment& s2, const PointSet& ps);

bool strictly_inside_triangle(const Point& a, const Point& b, const Point& c, const Point& p);

// Counterclockwise hull without collinear boundary points, starting at the
// lowest-y (then lowest-x) vertex.
std::vector<PointId> convex_hull(std::span<const PointId> ids, const PointSet& ps);

// Directions compared by counterclockwise angle from the positive x-axis.
// Both vectors must be nonzero. Returns negative/zero/positive.
int compare_ccw_angle(const Point& u, const Point& v);

// ids sorted by ccw angle from the positive x-axis at pivot; ties by distance
// then id.
std::vector<PointId> ccw_order_around(PointId pivot, std::span<const PointId> ids,
                                      const PointSet& ps);

}  // namespace planelayers
