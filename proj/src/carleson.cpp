#include "thinseq/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thinseq/error.hpp"
#include "thinseq/gram.hpp"
#include "thinseq/grid.hpp"

namespace thinseq {

CarlesonBox CarlesonBox::over_point(const DiscPoint& z, double amplification) {
  if (z.is_origin()) throw DomainError("Carleson box over the origin is undefined (no centre direction)");
  if (!(amplification >= 1.0)) throw DomainError("amplification A must be >= 1");
  const double len = std::min(1.0, amplification * z.gap());
  return {z.angle(), len, len};
}

bool CarlesonBox::contains(const DiscPoint& z) const noexcept {
  if (z.gap() > depth) return false;
  if (arc_length >= 1.0) return true;
  if (z.is_origin()) return false;
  const double dist = std::abs(std::remainder(z.angle() - center_angle, 2.0 * M_PI));
  return dist <= M_PI * arc_length;
}

bool box_membership(const CarlesonBox& box, const DiscPoint& z) noexcept { return box.contains(z); }

double box_sum(const PointSequence& seq, std::size_t n, double amplification) {
  seq.require_distinct();
  const auto& zn = seq.at(n);
  const auto box = CarlesonBox::over_point(zn, amplification);
  double s = 0.0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k != n && box.contains(seq[k])) s += seq[k].gap();
  }
  return s / zn.gap();
}

DiscreteMeasure mu_measure(const PointSequence& seq, std::size_t tail) {
  DiscreteMeasure mu{{}, tail};
  for (const auto& z : seq.tail(tail)) mu.atoms.push_back({z, z.one_minus_abs2()});
  return mu;
}

DiscreteMeasure nu_measure(const PointSequence& seq, std::size_t tail, const SeparationReport& sep) {
  if (sep.delta_j.size() != seq.size()) throw DomainError("separation report does not match sequence");
  DiscreteMeasure nu{{}, tail};
  for (std::size_t k = tail; k < seq.size(); ++k) {
    nu.atoms.push_back({seq.at(k), seq[k].one_minus_abs2() / sep.delta_j[k]});
  }
  return nu;
}

double kernel_ratio_squared(const DiscreteMeasure& mu, const DiscPoint& z) noexcept {
  const double root_z = std::sqrt(z.one_minus_abs2());
  double s = 0.0;
  for (const auto& atom : mu.atoms) {
    const double u = root_z * std::sqrt(atom.weight) / std::abs(pair_terms(atom.point, z).denominator);
    s += u * u;
  }
  return s;
}

double kernel_embedding_constant(const DiscreteMeasure& mu, std::span<const DiscPoint> extra_probes,
                                 std::size_t grid_density, Exec exec) {
  if (mu.atoms.empty()) return 0.0;
  std::vector<DiscPoint> probes;
  for (const auto& a : mu.atoms) probes.push_back(a.point);
  probes.insert(probes.end(), extra_probes.begin(), extra_probes.end());
  if (grid_density > 0) {
    const auto grid = PolarGrid{grid_density, grid_density, 1e-4}.points();
    probes.insert(probes.end(), grid.begin(), grid.end());
  }
  const double best = max_over(probes.size(), [&](std::size_t i) { return kernel_ratio_squared(mu, probes[i]); }, exec);
  return std::sqrt(best);
}

double embedding_constant(const PointSequence& seq, std::size_t tail, Exec exec) {
  return tail_bounds(seq, tail, exec).upper;
}

WeierstrassGap weierstrass_gap(const PointSequence& seq, std::size_t tail, std::size_t n) {
  seq.require_distinct();
  if (tail >= seq.size() || n >= seq.size() || n < tail) {
    throw DomainError("weierstrass_gap needs tail <= n < length");
  }
  double log_lhs = 0.0;
  double excess = 0.0;  // sum_{k != n} (1 - rho^2)
  for (std::size_t k = tail; k < seq.size(); ++k) {
    if (k == n) continue;
    const double x = one_minus_rho2(seq[n], seq[k]);
    log_lhs += std::log1p(-x);
    excess += x;
  }
  WeierstrassGap w;
  w.lhs = std::exp(log_lhs);
  w.one_minus_lhs = -std::expm1(log_lhs);
  w.one_minus_rhs = excess;
  w.rhs = 1.0 - excess;
  w.holds = w.lhs >= w.rhs - 1e-12;
  return w;
}

CarlesonReport carleson_report(const PointSequence& seq, std::size_t tail, double amplification,
                               std::size_t grid_density, Exec exec) {
  CarlesonReport r;
  r.tail = tail;
  r.amplification = amplification;
  r.grid_density = grid_density;
  for (std::size_t n = tail; n < seq.size(); ++n) r.box_sums.push_back(box_sum(seq, n, amplification));
  r.kernel_constant = kernel_embedding_constant(mu_measure(seq, tail), {}, grid_density, exec);
  r.embedding = embedding_constant(seq, tail, exec);
  return r;
}

}  // namespace thinseq
