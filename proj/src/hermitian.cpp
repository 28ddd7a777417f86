#include "thinseq/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "thinseq/error.hpp"

namespace thinseq {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double CMatrix::hermitian_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

std::vector<cplx> CMatrix::apply(std::span<const cplx> x) const {
  std::vector<cplx> y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    cplx s{};
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  const std::size_t n = a.size();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

double norm2(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

namespace {

double off_diagonal_mass(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

}  // namespace

Spectrum hermitian_spectrum(const CMatrix& input, bool want_vectors) {
  const std::size_t n = input.size();
  CMatrix a = input;
  // Symmetrize and make the diagonal real.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
  CMatrix v = want_vectors ? CMatrix::identity(n) : CMatrix{};

  const double scale = a.frobenius_norm();
  constexpr int kMaxSweeps = 100;
  Spectrum out;
  double off = off_diagonal_mass(a);
  int sweep = 0;
  while (off > 1e-14 * scale && sweep < kMaxSweeps) {
    ++sweep;
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Negligible next to both diagonal entries: drop it.
        if (g <= 1e-300 || (std::abs(app) + 1e17 * g == std::abs(app) &&
                            std::abs(aqq) + 1e17 * g == std::abs(aqq))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotated = true;
        const cplx phase = apq / g;  // e^{i phi}
        const double zeta = (aqq - app) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Unitary acting on (p, q): column p = (c, -s conj(phase)), column q = (s, c conj(phase)).
        const cplx vpp = c;
        const cplx vqp = -s * std::conj(phase);
        const cplx vpq = s;
        const cplx vqq = c * std::conj(phase);
        // A <- A V on columns p, q.
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * vpp + akq * vqp;
          a(k, q) = akp * vpq + akq * vqq;
        }
        // A <- V^* A on rows p, q.
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const cplx vkp = v(k, p);
            const cplx vkq = v(k, q);
            v(k, p) = vkp * vpp + vkq * vqp;
            v(k, q) = vkp * vpq + vkq * vqq;
          }
        }
      }
    }
    off = off_diagonal_mass(a);
    if (!rotated) break;
  }
  if (off > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "Jacobi eigensolver did not converge after " << sweep << " sweeps; off-diagonal residual " << off;
    throw NumericError(msg.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a(order[k], order[k]).real();
  if (want_vectors) {
    out.vectors = CMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
  }
  out.sweeps = sweep;
  out.off_diagonal = off;
  return out;
}

namespace {

std::vector<cplx> cholesky_substitute(const CMatrix& l, std::span<const cplx> b) {
  const std::size_t n = l.size();
  std::vector<cplx> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
    y[i] = s / l(i, i).real();
  }
  std::vector<cplx> x(n);
  for (std::size_t i = n; i-- > 0;) {
    cplx s = y[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= std::conj(l(k, i)) * x[k];
    x[i] = s / l(i, i).real();
  }
  return x;
}

}  // namespace

std::vector<cplx> cholesky_solve(const CMatrix& a, std::span<const cplx> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DomainError("right-hand side length does not match matrix");
  CMatrix l(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0)) throw NumericError("matrix is not positive definite (Cholesky pivot " + std::to_string(j) + ")");
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / l(j, j).real();
    }
  }
  auto x = cholesky_substitute(l, b);
  const auto ax = a.apply(x);
  std::vector<cplx> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ax[i];
  const auto dx = cholesky_substitute(l, r);
  for (std::size_t i = 0; i < n; ++i) x[i] += dx[i];
  return x;
}

}  // namespace thinseq
