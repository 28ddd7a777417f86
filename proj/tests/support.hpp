#pragma once

#include <cmath>
#include <random>

#include "thinseq/disc.hpp"
#include "thinseq/seqgen.hpp"

namespace thinseq::testing {

inline PointSequence supergeometric(std::size_t count = 12) {
  FamilySpec s;
  s.kind = FamilyKind::supergeometric;
  s.count = count;
  return generate(s);
}

inline PointSequence geometric(std::size_t count = 12) {
  FamilySpec s;
  s.kind = FamilyKind::geometric;
  s.count = count;
  return generate(s);
}

/// Uniform-in-area point with |z| <= rmax.
inline DiscPoint random_point(std::mt19937_64& rng, double rmax = 0.95) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = rmax * std::sqrt(u(rng));
  const double t = 2.0 * M_PI * u(rng);
  return DiscPoint(r * std::cos(t), r * std::sin(t));
}

inline cplx random_unimodular(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  return std::polar(1.0, u(rng));
}

/// Brute-force rho from Cartesian values.
inline double naive_rho(cplx z, cplx w) { return std::abs((z - w) / (1.0 - std::conj(w) * z)); }

}  // namespace thinseq::testing
