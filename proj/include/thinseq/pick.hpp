#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "thinseq/disc.hpp"
#include "thinseq/exec.hpp"
#include "thinseq/hermitian.hpp"

namespace thinseq {

/// P_ij = (1 - a_i conj(a_j)) / (1 - z_i conj(z_j)). A norm-one H^infinity
/// interpolant of a on the nodes exists iff P is positive semidefinite.
struct PickMatrix {
  CMatrix entries;
  std::vector<DiscPoint> nodes;
  std::vector<cplx> targets;
};

/// Throws DomainError on a length mismatch or repeated nodes.
PickMatrix pick_matrix(const PointSequence& nodes, std::span<const cplx> targets);

/// D P D with D = diag(sqrt(1 - |z_i|^2)); congruent to P, so it has the
/// same inertia, but its entries stay O(1) when nodes crowd the circle.
CMatrix normalized_pick(std::span<const DiscPoint> nodes, std::span<const cplx> targets, double scale = 1.0);

inline constexpr double kFeasibilityTolerance = 1e-10;

/// Smallest eigenvalue of the normalized Pick matrix of (s a).
double pick_min_eigenvalue(std::span<const DiscPoint> nodes, std::span<const cplx> targets, double scale = 1.0);

/// lambda_min >= -tol, tested on the normalized form.
bool feasible_unit_ball(const PickMatrix& p, double tol = kFeasibilityTolerance);

struct ScaleSearch {
  double s_star = 1.0;
  /// Every probed scale with its normalized min eigenvalue, in probe order.
  std::vector<std::pair<double, double>> path;
};

/// Largest s in [0, 1] with s a feasible, by bisection to 1e-6. Valid because
/// P(s) = C - s^2 (C o a a^*) is Loewner-nonincreasing in s.
ScaleSearch max_feasible_scale(const PointSequence& nodes, std::span<const cplx> targets,
                               double tol = kFeasibilityTolerance, double bisect_tol = 1e-6);

/// Monte Carlo lower bound for the interpolation constant M of the tail
/// {z_j : j >= tail}: max over random unimodular targets a of 1 / s*(a).
/// Deterministic for a given seed.
double interpolation_constant_probe(const PointSequence& seq, std::size_t tail, std::size_t trials,
                                    std::uint64_t seed, double tol = kFeasibilityTolerance,
                                    Exec exec = kDefaultExec);

}  // namespace thinseq
