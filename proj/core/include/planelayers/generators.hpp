#pragma once

#include <cstddef>
#include <cstdint>

#include "planelayers/geometry.hpp"

namespace planelayers {

// Coordinates carry 6 decimals; duplicates are resampled.
PointSet gen_uniform(std::size_t n, std::uint64_t seed, double side = 1000.0);

// Gaussian blobs around `clusters` centers drawn uniformly from the middle of
// [0, side]^2; points are split round-robin between blobs.
PointSet gen_clusters(std::size_t n, std::size_t clusters, std::uint64_t seed, double sigma = 25.0,
                      double side = 1000.0);

}  // namespace planelayers
