#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "thinseq/disc.hpp"
#include "thinseq/exec.hpp"
#include "thinseq/hermitian.hpp"

namespace thinseq {

/// Szego kernel k_w(z) = 1 / (1 - conj(w) z).
cplx szego_kernel(const DiscPoint& w, const DiscPoint& z) noexcept;

/// Unit-norm kernel h_w(z) = sqrt(1 - |w|^2) k_w(z).
cplx normalized_kernel(const DiscPoint& w, const DiscPoint& z) noexcept;

/// Model-space kernel (1 - conj(Theta(w)) Theta(z)) k_w(z) for the finite
/// Blaschke product Theta with the given zeros.
cplx model_kernel(std::span<const DiscPoint> theta_zeros, const DiscPoint& w, const DiscPoint& z);

/// Gram matrix of the normalized kernels {h_{z_n}}_{n >= tail_offset}.
/// Convention: entries(n, m) = <h_{z_m}, h_{z_n}>, so that a^* G a is the
/// squared norm of sum_n a_n h_{z_n}. Diagonal is exactly 1.
struct GramMatrix {
  CMatrix entries;
  std::size_t tail_offset = 0;
  std::vector<DiscPoint> nodes;  ///< z_n for n >= tail_offset

  std::size_t size() const noexcept { return entries.size(); }
};

/// Throws DomainError for repeated points or tail >= size.
GramMatrix gram_matrix(const PointSequence& seq, std::size_t tail = 0, Exec exec = kDefaultExec);

/// Plain-kernel Gram: entries(n, m) = k_{z_m}(z_n) = 1 / (1 - z_n conj(z_m)).
CMatrix unnormalized_gram(const PointSequence& seq, std::size_t tail = 0);

Spectrum hermitian_spectrum(const GramMatrix& g, bool want_vectors = true);

/// Extreme eigenvalues of the tail Gram: c_N ||a||^2 <= ||sum a_n h_n||^2 <= C_N ||a||^2.
struct TailBounds {
  std::size_t tail = 0;
  double lower = 1.0;  ///< c_N
  double upper = 1.0;  ///< C_N
};

TailBounds tail_bounds(const PointSequence& seq, std::size_t tail, Exec exec = kDefaultExec);

/// ||(G - I) e_n||_2, n a sequence index (>= g.tail_offset).
double gram_column_defect(const GramMatrix& g, std::size_t n);

/// f = sum_j coeffs[j] k_{z_{support[j]}}.
struct KernelCoefficients {
  std::vector<cplx> coeffs;
  std::vector<std::size_t> support;
  std::vector<DiscPoint> nodes;  ///< z at each support index
};

cplx evaluate_synthesis(const KernelCoefficients& c, const DiscPoint& z) noexcept;

/// ||f||_{H^2}^2 = c^* G~ c.
double synthesis_norm_squared(const KernelCoefficients& c);

/// Smallest normalized-Gram eigenvalue accepted by the interpolation solves.
inline constexpr double kMinGramEigenvalue = 1e-12;

/// Minimal-H^2-norm f with f(z_j) = targets[j - tail] for j >= tail. The
/// solution lies in span{k_{z_j}}; G~ c = w is solved through the
/// normalized Gram (diagonal scaling), which carries the conditioning guard.
/// Throws NumericError("sequence too clustered for requested tolerance")
/// when lambda_min(G) < kMinGramEigenvalue.
KernelCoefficients min_norm_interpolant(const PointSequence& seq, std::span<const cplx> targets,
                                        std::size_t tail = 0);

}  // namespace thinseq
