#include <cmath>
#include <limits>

#include "planelayers/distributed.hpp"
#include "planelayers/error.hpp"

namespace planelayers {

namespace {

Int128 pow10(int e) {
  Int128 r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

unsigned __int128 ceil_sqrt(unsigned __int128 v) {
  auto x = static_cast<unsigned __int128>(std::sqrt(static_cast<long double>(v)));
  while (x > 0 && x * x > v) --x;
  while ((x + 1) * (x + 1) <= v) ++x;
  return x * x == v ? x : x + 1;
}

constexpr Int128 kInt128Max = static_cast<Int128>(~static_cast<unsigned __int128>(0) >> 1);

}  // namespace

std::int64_t chebyshev(const Cell& a, const Cell& b) {
  return std::max(std::abs(a.i - b.i), std::abs(a.j - b.j));
}

double Beta::real(const PointSet& ps) const {
  if (squared_units) return std::sqrt(static_cast<long double>(*squared_units)) * ps.unit();
  if (value) return static_cast<double>(value->mantissa) * std::pow(10.0, -value->scale);
  return 0.0;
}

double Frame::unit() const { return std::pow(10.0, -scale); }

Cell Frame::cell_of(const Point& p) const { return Cell{floor_div(p.x, side), floor_div(p.y, side)}; }

Point Frame::doubled_center(const Cell& c) const {
  return Point{(2 * c.i + 1) * side, (2 * c.j + 1) * side};
}

Frame make_frame(const PointSet& ps, int k, const Beta& beta) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  Int128 max_abs = 0;
  for (const Point& p : ps.points()) {
    max_abs = std::max({max_abs, Int128{p.x < 0 ? -p.x : p.x}, Int128{p.y < 0 ? -p.y : p.y}});
  }
  const Int128 kLimit = Int128{1} << 58;
  for (int r = 12; r >= 0; --r) {
    if (ps.scale() + r > 18) continue;
    const Int128 lift = pow10(r);
    if (max_abs * lift > kLimit / 2) continue;
    Int128 side = 0;
    if (beta.squared_units) {
      const Int128 d = *beta.squared_units;
      if (d <= 0) throw PreconditionError("beta must be positive");
      const Int128 t = Int128{6} * k * lift;
      const Int128 t2 = t * t;
      if (d > kInt128Max / t2) continue;
      side = static_cast<Int128>(ceil_sqrt(static_cast<unsigned __int128>(t2 * d)));
    } else if (beta.value) {
      const Decimal& b = *beta.value;
      if (b.mantissa <= 0) throw PreconditionError("beta must be positive");
      const int shift = ps.scale() + r - b.scale;
      const Int128 num = Int128{6} * k * b.mantissa;
      if (shift >= 0) {
        if (num > kLimit / pow10(shift)) continue;
        side = num * pow10(shift);
      } else {
        const Int128 den = pow10(-shift);
        side = (num + den - 1) / den;
      }
    } else {
      throw PreconditionError("beta not specified");
    }
    if (side % 2 != 0) ++side;
    if (side <= 0) side = 2;
    if (max_abs * lift + 3 * side > kLimit) continue;
    Frame f;
    f.lift = static_cast<std::int64_t>(lift);
    f.scale = ps.scale() + r;
    f.side = static_cast<std::int64_t>(side);
    f.pts.reserve(ps.size());
    for (const Point& p : ps.points()) f.pts.push_back(Point{p.x * f.lift, p.y * f.lift});
    return f;
  }
  throw PreconditionError("coordinates or beta outside the exact range of the grid lattice");
}

std::optional<Cell> nearest_dense_center(const Frame& frame, const Point& p,
                                         const std::set<Cell>& dense_nearby) {
  const Cell own = frame.cell_of(p);
  const Point p2{2 * p.x, 2 * p.y};
  std::optional<Cell> best;
  Int128 best_d = 0;
  for (const Cell& c : dense_nearby) {
    if (chebyshev(c, own) > 2) continue;
    const Int128 d = squared_distance(p2, frame.doubled_center(c));
    const bool better = !best || d < best_d ||
                        (d == best_d && c == own) ||
                        (d == best_d && *best != own && c < *best);
    if (better) {
      best = c;
      best_d = d;
    }
  }
  return best;
}

GridIndex grid_partition(const PointSet& ps, int k, const Beta& beta) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const std::size_t need = static_cast<std::size_t>(12 * k - 3);
  if (ps.size() < need) {
    throw PreconditionError("need n >= 12k-3 = " + std::to_string(need) + " points, have " +
                            std::to_string(ps.size()));
  }
  GridIndex gi;
  gi.k = k;
  gi.frame = make_frame(ps, k, beta);
  gi.beta = beta.real(ps);
  gi.cell_side = static_cast<double>(gi.frame.side) * gi.frame.unit();
  gi.cell_of.resize(ps.size());
  for (PointId id = 0; id < ps.size(); ++id) {
    gi.cell_of[id] = gi.frame.cell_of(gi.frame.pts[id]);
    gi.cells[gi.cell_of[id]].push_back(id);
  }
  for (const auto& [cell, ids] : gi.cells) {
    if (ids.size() >= static_cast<std::size_t>(3 * k)) gi.dense.insert(cell);
  }
  if (gi.dense.empty()) {
    throw PreconditionError("no dense cell (beta below BE(MST) or too few points)");
  }
  gi.assignment.resize(ps.size());
  for (PointId id = 0; id < ps.size(); ++id) {
    const Cell own = gi.cell_of[id];
    std::set<Cell> nearby;
    for (std::int64_t di = -2; di <= 2; ++di) {
      for (std::int64_t dj = -2; dj <= 2; ++dj) {
        const Cell c{own.i + di, own.j + dj};
        if (gi.dense.count(c) != 0) nearby.insert(c);
      }
    }
    const auto owner = nearest_dense_center(gi.frame, gi.frame.pts[id], nearby);
    if (!owner) {
      throw PreconditionError("point " + std::to_string(id) +
                              " has no dense cell within two cells (beta below BE(MST)?)");
    }
    gi.assignment[id] = *owner;
  }
  return gi;
}

}  // namespace planelayers
