#include "planelayers/generators.hpp"

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "planelayers/error.hpp"

namespace planelayers {

namespace {

constexpr int kScale = 6;
constexpr double kUnitsPerOne = 1e6;

// Raw engine output only, so sequences do not depend on library distributions.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % bound;
}

double unit_open(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

}  // namespace

PointSet gen_uniform(std::size_t n, std::uint64_t seed, double side) {
  if (n == 0) throw UsageError("uniform needs n >= 1");
  if (!(side > 0) || side > 1e9) throw UsageError("uniform side must be in (0, 1e9]");
  std::mt19937_64 rng(seed);
  const auto range = static_cast<std::uint64_t>(std::llround(side * kUnitsPerOne)) + 1;
  std::set<Point> seen;
  std::vector<Point> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    const Point p{static_cast<std::int64_t>(below(rng, range)), static_cast<std::int64_t>(below(rng, range))};
    if (seen.insert(p).second) pts.push_back(p);
  }
  return PointSet(std::move(pts), kScale);
}

PointSet gen_clusters(std::size_t n, std::size_t clusters, std::uint64_t seed, double sigma, double side) {
  if (n == 0) throw UsageError("clusters needs n >= 1");
  if (clusters == 0) throw UsageError("clusters needs c >= 1");
  if (!(sigma > 0) || !(side > 0) || side > 1e9) throw UsageError("bad cluster parameters");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<double, double>> centers;
  for (std::size_t c = 0; c < clusters; ++c) {
    const double x = side * (0.1 + 0.8 * unit_open(rng));
    const double y = side * (0.1 + 0.8 * unit_open(rng));
    centers.emplace_back(x, y);
  }
  std::set<Point> seen;
  std::vector<Point> pts;
  pts.reserve(n);
  const double two_pi = 6.283185307179586;
  while (pts.size() < n) {
    const auto& [cx, cy] = centers[pts.size() % clusters];
    const double r = sigma * std::sqrt(-2.0 * std::log(unit_open(rng)));
    const double t = two_pi * unit_open(rng);
    const Point p{std::llround((cx + r * std::cos(t)) * kUnitsPerOne),
                  std::llround((cy + r * std::sin(t)) * kUnitsPerOne)};
    if (seen.insert(p).second) pts.push_back(p);
  }
  return PointSet(std::move(pts), kScale);
}

}  // namespace planelayers
