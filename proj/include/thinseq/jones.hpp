#pragma once

// Jones's explicit interpolation functions and the constructions built on
// them: bounded interpolation, turning approximate interpolation into exact
// interpolation, the residual recursion for p = 2, and the splitting pair.

#include <cstddef>
#include <span>
#include <vector>

#include "thinseq/blaschke.hpp"
#include "thinseq/disc.hpp"
#include "thinseq/exec.hpp"
#include "thinseq/gram.hpp"
#include "thinseq/grid.hpp"
#include "thinseq/separation.hpp"

namespace thinseq {

enum class Exponent { two, infinity };

/// Targets a_j for the tail j >= tail. The interpolation condition is
/// f(z_j) (1 - |z_j|^2)^{1/p} = a_j; for p = infinity the weight is 1.
struct InterpolationProblem {
  Exponent p = Exponent::infinity;
  std::size_t tail = 0;
  std::vector<cplx> targets;

  /// ||a||_{N, l^p}
  double norm() const noexcept;
};

/// The functions g_j(z) = B_j(z)/B_j(z_j) w_j(z) with
///   w_j(z) = ((1 - |z_j|^2)/(1 - conj(z_j) z))^2
///            exp(-sum_{|z_m| >= |z_j|} (K_m(z) - K_m(z_j)) (1 - |z_m|^2)),
///   K_m(z) = (1 + conj(z_m) z)/(1 - conj(z_m) z).
/// g_j(z_k) = [j == k]. Indices are 0-based.
class JonesBasis {
 public:
  /// Throws DomainError for repeated points.
  explicit JonesBasis(PointSequence seq, Exec exec = kDefaultExec);

  std::size_t size() const noexcept { return seq_.size(); }
  const PointSequence& sequence() const noexcept { return seq_; }
  const SeparationReport& separation() const noexcept { return sep_; }
  double delta() const noexcept { return sep_.delta; }

  cplx weight(std::size_t j, const DiscPoint& z) const;
  cplx eval(std::size_t j, const DiscPoint& z) const;

  /// All weights / all basis values at z in one pass (O(n) factor terms).
  std::vector<cplx> weights(const DiscPoint& z) const;
  std::vector<cplx> values(const DiscPoint& z) const;

  /// sum_{j >= from} |g_j(z)|
  double sum_abs(const DiscPoint& z, std::size_t from = 0) const;
  /// sum_j |w_j(z)|
  double weight_sum_abs(const DiscPoint& z) const;

  /// Grid sup of sum_{j >= from} |g_j|: the recorded constant C(delta).
  double recorded_sum_bound(std::span<const DiscPoint> grid, std::size_t from = 0, Exec exec = kDefaultExec) const;

 private:
  struct Terms;
  Terms terms(const DiscPoint& z) const;
  std::vector<cplx> weights_from(const Terms& t) const;

  PointSequence seq_;
  SeparationReport sep_;
  std::vector<LogValue> excluded_at_node_;  ///< B_j(z_j) in log form
  std::vector<cplx> exponent_at_node_;      ///< sum_{m in M_j} 2 (1 - |z_m|^2) / (1 - conj(z_m) z_j)
  std::vector<std::size_t> by_gap_;         ///< indices sorted by gap, ascending
  std::vector<std::size_t> members_;        ///< |M_j| = #{m : gap_m <= gap_j}
};

cplx jones_weight(const PointSequence& seq, std::size_t j, const DiscPoint& z);
cplx jones_basis_eval(const PointSequence& seq, std::size_t j, const DiscPoint& z);

/// g = sum_{j >= N} a_j g_j together with its diagnostics.
struct JonesInterpolant {
  JonesBasis basis;
  std::size_t tail = 0;
  std::vector<cplx> coefficients;  ///< a_j, j >= tail

  cplx operator()(const DiscPoint& z) const;

  double max_residual = 0.0;   ///< max_{j >= N} |g(z_j) - a_j|
  double grid_sup = 0.0;       ///< grid sup |g|
  double sum_bound = 0.0;      ///< recorded C = grid sup sum_{j >= N} |g_j|
  double bound = 0.0;          ///< sum_bound * ||a||_inf
};

/// Throws DomainError unless prob.p == infinity and the target count matches.
JonesInterpolant jones_interpolate(const JonesBasis& basis, const InterpolationProblem& prob,
                                   const PolarGrid& grid = default_grid(), Exec exec = kDefaultExec);

/// Correction h with (f - h)(z_k) = a_k, assembled block by block from
/// dyadic residual levels: block j holds the indices with
/// 2^{-(j+1)} <= |f(z_k) - a_k| <= 2^{-j} (block 0 also takes every residual
/// >= 1/2), and h_j = sum_{k in block j} (f(z_k) - a_k) g_k.
struct Exactification {
  struct Block {
    int level = 0;
    std::vector<std::size_t> indices;
    std::vector<cplx> residuals;
    double scale = 1.0;      ///< 2^{-level}; block 0 uses max(1, max residual)
    double grid_sup = 0.0;   ///< grid sup |h_j|
    double bound = 0.0;      ///< scale / delta * weight_sum_bound
  };

  JonesBasis basis;
  std::vector<Block> blocks;
  double weight_sum_bound = 0.0;  ///< recorded C: grid sup of sum_n |w_n|
  double grid_sup = 0.0;          ///< grid sup |h|

  cplx operator()(const DiscPoint& z) const;
  cplx block_value(std::size_t b, const DiscPoint& z) const;
};

Exactification exactify(const JonesBasis& basis, std::span<const cplx> approx_values, std::span<const cplx> targets,
                        const PolarGrid& grid = default_grid(), Exec exec = kDefaultExec);

/// Residual recursion for p = 2. The approximate solver maps a residual r to
/// f = sum_k r_k h_{z_k}, whose weighted node values are G_N r, so each round
/// shrinks the residual by at most eps = ||G_N - I||.
struct EisSolution {
  KernelCoefficients coefficients;    ///< over plain kernels k_{z_j}
  std::vector<double> residual_trace; ///< ||a^{(k)}||_2, k = 0..rounds
  double epsilon = 0.0;
  std::size_t rounds = 0;
  double final_residual = 0.0;        ///< ||a - weighted f(z_j)||_2, recomputed directly
  double norm = 0.0;                  ///< ||f||_{H^2}
  double norm_bound = 0.0;            ///< ||a||_2 / (1 - eps)
};

inline constexpr double kEisResidualTarget = 1e-10;

/// Throws NumericError("tail not contractive; increase N") when eps >= 1.
EisSolution iterative_eis_solve(const PointSequence& seq, const InterpolationProblem& prob,
                                Exec exec = kDefaultExec);

/// Functions F, G with F(z_j) = [j >= cut], G(z_j) = [j < cut] and
/// |F| + |G| <= gamma = 1/2 + 1/(2 (1 - delta_t)^2).
///
/// k = t b f, where b is the Blaschke product over the head {z_j : j < cut}
/// and f Jones-interpolates 1/b(z_j) on the tail. With c = 1 - delta_t the
/// disc automorphism phi_c sends 0 to -c and t to c, and h = phi_c(k)/c.
struct SplittingPair {
  JonesInterpolant tail_interpolant;
  BlaschkeProduct head;
  std::size_t cut = 0;
  double delta_prime = 1.0;    ///< min_{k >= cut} delta_k
  double head_tail_sup = 1.0;  ///< S = max(1, grid sup |b f|)
  double eps_recorded = 0.0;   ///< t = delta_prime / (1 + eps_recorded)
  double t = 0.0;
  double delta_t = 0.0;
  double gamma = 0.0;

  cplx k(const DiscPoint& z) const;
  cplx h(const DiscPoint& z) const;
  cplx F(const DiscPoint& z) const;
  cplx G(const DiscPoint& z) const;
};

/// Margin applied on top of the grid sup when choosing t, so |k| < 1 with room.
inline constexpr double kSplittingMargin = 0.01;

/// cut is 0-based (head = first `cut` points). Throws DomainError when
/// cut >= length (empty tail).
SplittingPair splitting_pair(const PointSequence& seq, std::size_t cut, const PolarGrid& grid = default_grid(),
                             Exec exec = kDefaultExec);

}  // namespace thinseq
