#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace thinseq {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static CMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const cplx> data() const noexcept { return data_; }

  double frobenius_norm() const;
  /// max |A_ij - conj(A_ji)|
  double hermitian_defect() const;

  std::vector<cplx> apply(std::span<const cplx> x) const;
  CMatrix adjoint() const;
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<cplx> data_;
};

struct Spectrum {
  std::vector<double> values;  ///< ascending
  CMatrix vectors;             ///< column k pairs with values[k]; empty if not requested
  int sweeps = 0;
  double off_diagonal = 0.0;   ///< Frobenius mass left off the diagonal
};

/// Cyclic Jacobi for a Hermitian matrix. Iterates until the off-diagonal
/// Frobenius mass falls below 1e-14 ||A||_F (or stops changing); throws
/// NumericError with the residual if it is still above 1e-12 ||A||_F after
/// 100 sweeps.
Spectrum hermitian_spectrum(const CMatrix& a, bool want_vectors = true);

/// Solves A x = b for Hermitian positive definite A by Cholesky with one step
/// of iterative refinement. Throws NumericError if a pivot is not positive.
std::vector<cplx> cholesky_solve(const CMatrix& a, std::span<const cplx> b);

double norm2(std::span<const cplx> v);

}  // namespace thinseq
