#pragma once

#include <array>
#include <optional>

#include "planelayers/geometry.hpp"
#include "planelayers/point_io.hpp"

namespace planelayers {

// Some collinear triple of the set, or nothing. O(n^2 log n).
std::optional<std::array<PointId, 3>> find_collinear_triple(const PointSet& ps);

struct PerturbOptions {
  // Offset magnitude in coordinate units; defaults to 1e-7 of the bounding-box
  // extent.
  std::optional<Decimal> epsilon;
};

// Deterministic perturbation: point i moves by eps*(f(2i) - 1/2, f(2i+1) - 1/2)
// where f is a splitmix64 hash reduced to a ten-digit fraction. The result is
// re-scaled so the offsets are exact decimals. Retries with shifted sequences
// until no collinear triple remains.
PointSet perturb(const PointSet& ps, const PerturbOptions& options = {});

}  // namespace planelayers
