#include "thinseq/grid.hpp"

#include <cmath>

#include "thinseq/error.hpp"

namespace thinseq {

std::vector<DiscPoint> PolarGrid::points() const {
  if (radial == 0 || angular == 0) throw DomainError("grid density must be positive");
  if (!(min_gap > 0.0 && min_gap < 1.0)) throw DomainError("grid min_gap must lie in (0, 1)");
  std::vector<DiscPoint> out;
  out.reserve(radial * angular);
  const double log_min = std::log(min_gap);
  for (std::size_t i = 0; i < radial; ++i) {
    const double frac = radial == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(radial - 1);
    const double gap = std::exp(frac * log_min);
    for (std::size_t k = 0; k < angular; ++k) {
      const double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(angular);
      out.push_back(DiscPoint::polar(gap, angle));
    }
  }
  return out;
}

}  // namespace thinseq
