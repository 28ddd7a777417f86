#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "thinseq/disc.hpp"
#include "thinseq/exec.hpp"
#include "thinseq/separation.hpp"

namespace thinseq {

/// Carleson box S_I = {z : z/|z| in I, |z| >= 1 - depth} over an arc I of
/// the circle. Arc lengths are in normalized measure (whole circle = 1).
struct CarlesonBox {
  double center_angle = 0.0;  ///< radians
  double arc_length = 1.0;    ///< |I| in (0, 1]
  double depth = 1.0;         ///< |I|

  /// The box over A I_z, where I_z is centred at z/|z| with length 1 - |z|.
  /// Lengths are clipped to the full circle. Throws for z = 0 or A < 1.
  static CarlesonBox over_point(const DiscPoint& z, double amplification = 1.0);

  /// Boundary inclusive. The origin only belongs to full-circle boxes.
  bool contains(const DiscPoint& z) const noexcept;
};

bool box_membership(const CarlesonBox& box, const DiscPoint& z) noexcept;

/// (1 / |I_{z_n}|) sum_{k != n, z_k in S(A I_n)} (1 - |z_k|).
double box_sum(const PointSequence& seq, std::size_t n, double amplification);

struct Atom {
  DiscPoint point;
  double weight;
};

/// Finite positive measure sum_k w_k delta_{z_k} on the disc.
struct DiscreteMeasure {
  std::vector<Atom> atoms;
  std::size_t tail_offset = 0;
};

/// mu_N = sum_{k >= N} (1 - |z_k|^2) delta_{z_k}.
DiscreteMeasure mu_measure(const PointSequence& seq, std::size_t tail);

/// nu_N = sum_{k >= N} (1 - |z_k|^2) / delta_k delta_{z_k}, delta_k the
/// separation constants of the whole finite sequence.
DiscreteMeasure nu_measure(const PointSequence& seq, std::size_t tail, const SeparationReport& sep);

/// ||k_z||^2_{L^2(mu)} / ||k_z||^2_2 = (1 - |z|^2) sum_k w_k / |1 - conj(z_k) z|^2.
double kernel_ratio_squared(const DiscreteMeasure& mu, const DiscPoint& z) noexcept;

/// R(mu) = sup_z ||k_z||_{L^2(mu)} / ||k_z||_2 (norm ratio, not squared),
/// maximized over the atoms, the extra probes and a grid_density x
/// grid_density polar grid. This is a lower bound for the true supremum.
double kernel_embedding_constant(const DiscreteMeasure& mu, std::span<const DiscPoint> extra_probes,
                                 std::size_t grid_density = 64, Exec exec = kDefaultExec);

/// C(mu_N) = sup_f ||f||^2_{L^2(mu_N)} / ||f||^2_2 (squared ratio). Computed
/// exactly as lambda_max of the normalized tail Gram, since
/// ||f||^2_{L^2(mu_N)} = sum_{k >= N} |<f, h_{z_k}>|^2.
double embedding_constant(const PointSequence& seq, std::size_t tail, Exec exec = kDefaultExec);

/// Both sides of prod_{k >= N, k != n} rho(z_k, z_n)^2 >= 2 - ||h_{z_n}||^2_{L^2(mu_N)}.
struct WeierstrassGap {
  double lhs = 1.0;
  double rhs = 1.0;
  double one_minus_lhs = 0.0;  ///< accurate 1 - lhs
  double one_minus_rhs = 0.0;  ///< accurate ||h_{z_n}||^2_{mu_N} - 1
  bool holds = true;           ///< lhs >= rhs - 1e-12
};

WeierstrassGap weierstrass_gap(const PointSequence& seq, std::size_t tail, std::size_t n);

struct CarlesonReport {
  std::size_t tail = 0;
  double amplification = 1.0;
  std::size_t grid_density = 64;
  std::vector<double> box_sums;  ///< for n >= tail
  double kernel_constant = 0.0;  ///< R(mu_N)
  double embedding = 0.0;        ///< C(mu_N)
};

CarlesonReport carleson_report(const PointSequence& seq, std::size_t tail, double amplification,
                               std::size_t grid_density = 64, Exec exec = kDefaultExec);

}  // namespace thinseq
