#pragma once

#include <cstddef>
#include <vector>

#include "thinseq/disc.hpp"

namespace thinseq {

/// Polar probe grid. Radii are placed by gap, logarithmically from 1 (the
/// origin) down to min_gap, so the boundary layer is sampled as densely as
/// the interior. Sups over a grid are lower bounds of sups over the disc.
struct PolarGrid {
  std::size_t radial = 100;
  std::size_t angular = 100;
  double min_gap = 1e-4;

  std::vector<DiscPoint> points() const;
};

/// The default sup-norm grid: 100 x 100 = 10^4 points, radii up to 1 - 1e-4.
inline PolarGrid default_grid() { return {}; }

}  // namespace thinseq
