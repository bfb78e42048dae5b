#include "planelayers/general_position.hpp"

#include <algorithm>
#include <vector>

#include "planelayers/error.hpp"

namespace planelayers {

namespace {

Int128 pow10(int e) {
  Int128 r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

Int128 abs128(Int128 v) { return v < 0 ? -v : v; }

// Rounded n/d for d > 0.
Int128 div_round(Int128 n, Int128 d) {
  if (n >= 0) return (n + d / 2) / d;
  return -((-n + d / 2) / d);
}

// Ten-digit fraction numerator from a splitmix64 step.
Int128 fraction(std::uint64_t key) {
  std::uint64_t z = key + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<Int128>(z % 10000000000ULL);
}

}  // namespace

std::optional<std::array<PointId, 3>> find_collinear_triple(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::vector<std::pair<Point, PointId>> dirs;
  for (PointId i = 0; i < n; ++i) {
    dirs.clear();
    for (PointId j = i + 1; j < n; ++j) {
      Point d{ps[j].x - ps[i].x, ps[j].y - ps[i].y};
      if (d.y < 0 || (d.y == 0 && d.x < 0)) d = Point{-d.x, -d.y};
      dirs.emplace_back(d, j);
    }
    std::sort(dirs.begin(), dirs.end(), [](const auto& u, const auto& v) {
      const int c = compare_ccw_angle(u.first, v.first);
      if (c != 0) return c < 0;
      return u.second < v.second;
    });
    for (std::size_t t = 1; t < dirs.size(); ++t) {
      if (compare_ccw_angle(dirs[t - 1].first, dirs[t].first) == 0) {
        return std::array<PointId, 3>{i, dirs[t - 1].second, dirs[t].second};
      }
    }
  }
  return std::nullopt;
}

PointSet perturb(const PointSet& ps, const PerturbOptions& options) {
  if (ps.empty()) return ps;
  std::int64_t min_x = ps[0].x, max_x = ps[0].x, min_y = ps[0].y, max_y = ps[0].y;
  Int128 max_abs = 0;
  for (const Point& p : ps.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
    max_abs = std::max({max_abs, abs128(p.x), abs128(p.y)});
  }
  Int128 extent = std::max(Int128{max_x} - min_x, Int128{max_y} - min_y);
  if (extent == 0) extent = pow10(ps.scale());

  // eps expressed as eps_num * 10^-eps_den_exp in the original units.
  Int128 eps_num = extent;
  int eps_exp = 7;
  if (options.epsilon) {
    if (options.epsilon->mantissa <= 0) throw PreconditionError("perturbation epsilon must be > 0");
    eps_num = options.epsilon->mantissa;
    eps_exp = options.epsilon->scale - ps.scale();
  }

  // Pick the extra digits so the offsets are resolved to ~1e-6 of eps while the
  // coordinates stay inside the exact range.
  int extra = 0;
  Int128 eps_units = 0;
  for (int e = 0; e <= 18; ++e) {
    if (e + ps.scale() > 18) break;
    if (max_abs * pow10(e) > kMaxCoordinate / 4) break;
    extra = e;
    const int shift = e - eps_exp;
    eps_units = shift >= 0 ? eps_num * pow10(shift) : eps_num / pow10(-shift);
    if (eps_units >= 1000000) break;
  }
  if (eps_units < 1) {
    throw PreconditionError("perturbation epsilon too small for the coordinate range");
  }
  const Int128 factor = pow10(extra);
  const Int128 kTen10 = pow10(10);
  const Int128 kHalf = kTen10 / 2;

  for (std::size_t attempt = 0; attempt < 8; ++attempt) {
    std::vector<Point> moved(ps.size());
    for (PointId i = 0; i < ps.size(); ++i) {
      const std::uint64_t t = 2 * (i + attempt * ps.size());
      const Int128 fa = fraction(t);
      const Int128 fb = fraction(t + 1);
      const Int128 dx = div_round(eps_units * (fa - kHalf), kTen10);
      const Int128 dy = div_round(eps_units * (fb - kHalf), kTen10);
      moved[i] = Point{static_cast<std::int64_t>(ps[i].x * factor + dx),
                       static_cast<std::int64_t>(ps[i].y * factor + dy)};
    }
    try {
      PointSet out(std::move(moved), ps.scale() + extra);
      if (!find_collinear_triple(out)) return out;
    } catch (const PreconditionError&) {
      // duplicate after moving; try the next sequence
    }
  }
  throw PreconditionError("perturbation failed to reach general position");
}

}  // namespace planelayers
