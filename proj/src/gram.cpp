#include "thinseq/gram.hpp"

#include <cmath>
#include <string>

#include "thinseq/blaschke.hpp"
#include "thinseq/error.hpp"

namespace thinseq {

cplx szego_kernel(const DiscPoint& w, const DiscPoint& z) noexcept {
  return 1.0 / pair_terms(w, z).denominator;
}

cplx normalized_kernel(const DiscPoint& w, const DiscPoint& z) noexcept {
  return std::sqrt(w.one_minus_abs2()) / pair_terms(w, z).denominator;
}

cplx model_kernel(std::span<const DiscPoint> theta_zeros, const DiscPoint& w, const DiscPoint& z) {
  const cplx tw = blaschke_eval(theta_zeros, w);
  const cplx tz = blaschke_eval(theta_zeros, z);
  return (1.0 - std::conj(tw) * tz) * szego_kernel(w, z);
}

GramMatrix gram_matrix(const PointSequence& seq, std::size_t tail, Exec exec) {
  seq.require_distinct();
  const auto nodes = seq.tail(tail);
  const std::size_t n = nodes.size();
  std::vector<double> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = std::sqrt(nodes[i].one_minus_abs2());

  GramMatrix g{CMatrix(n), tail, {nodes.begin(), nodes.end()}};
  // Row i holds the upper triangle entries (i, j >= i); rows are independent.
  const auto rows = map_indices<std::vector<cplx>>(
      n,
      [&](std::size_t i) {
        std::vector<cplx> row(n - i);
        row[0] = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
          row[j - i] = root[i] * root[j] / pair_terms(nodes[j], nodes[i]).denominator;
        }
        return row;
      },
      exec);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      g.entries(i, j) = rows[i][j - i];
      g.entries(j, i) = std::conj(rows[i][j - i]);
    }
    g.entries(i, i) = 1.0;
  }
  return g;
}

CMatrix unnormalized_gram(const PointSequence& seq, std::size_t tail) {
  const auto nodes = seq.tail(tail);
  const std::size_t n = nodes.size();
  CMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 1.0 / nodes[i].one_minus_abs2();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = szego_kernel(nodes[j], nodes[i]);
      g(i, j) = v;
      g(j, i) = std::conj(v);
    }
  }
  return g;
}

Spectrum hermitian_spectrum(const GramMatrix& g, bool want_vectors) {
  return hermitian_spectrum(g.entries, want_vectors);
}

TailBounds tail_bounds(const PointSequence& seq, std::size_t tail, Exec exec) {
  const auto spec = hermitian_spectrum(gram_matrix(seq, tail, exec), false);
  return {tail, spec.values.front(), spec.values.back()};
}

double gram_column_defect(const GramMatrix& g, std::size_t n) {
  if (n < g.tail_offset || n - g.tail_offset >= g.size()) {
    throw DomainError("column index " + std::to_string(n) + " outside the tail Gram range");
  }
  const std::size_t col = n - g.tail_offset;
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const cplx e = g.entries(i, col) - (i == col ? 1.0 : 0.0);
    s += std::norm(e);
  }
  return std::sqrt(s);
}

cplx evaluate_synthesis(const KernelCoefficients& c, const DiscPoint& z) noexcept {
  cplx s{};
  for (std::size_t j = 0; j < c.coeffs.size(); ++j) s += c.coeffs[j] * szego_kernel(c.nodes[j], z);
  return s;
}

double synthesis_norm_squared(const KernelCoefficients& c) {
  double s = 0.0;
  for (std::size_t n = 0; n < c.coeffs.size(); ++n) {
    s += std::norm(c.coeffs[n]) / c.nodes[n].one_minus_abs2();
    for (std::size_t m = n + 1; m < c.coeffs.size(); ++m) {
      s += 2.0 * (std::conj(c.coeffs[n]) * c.coeffs[m] * szego_kernel(c.nodes[m], c.nodes[n])).real();
    }
  }
  return s;
}

KernelCoefficients min_norm_interpolant(const PointSequence& seq, std::span<const cplx> targets, std::size_t tail) {
  const auto g = gram_matrix(seq, tail, Exec::serial);
  const std::size_t n = g.size();
  if (targets.size() != n) {
    throw DomainError("expected " + std::to_string(n) + " targets for tail " + std::to_string(tail) + ", got " +
                      std::to_string(targets.size()));
  }
  const auto spec = hermitian_spectrum(g, false);
  if (spec.values.front() < kMinGramEigenvalue) {
    throw NumericError("sequence too clustered for requested tolerance");
  }
  // G~ = D^{-1} G D^{-1} with D = diag(sqrt(1 - |z|^2)): solve G b = D w, c = D b.
  std::vector<double> root(n);
  std::vector<cplx> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    root[i] = std::sqrt(g.nodes[i].one_minus_abs2());
    rhs[i] = root[i] * targets[i];
  }
  auto b = cholesky_solve(g.entries, rhs);
  KernelCoefficients out;
  out.nodes = g.nodes;
  for (std::size_t i = 0; i < n; ++i) {
    out.coeffs.push_back(root[i] * b[i]);
    out.support.push_back(tail + i);
  }
  return out;
}

}  // namespace thinseq
