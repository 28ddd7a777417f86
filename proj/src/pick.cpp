#include "thinseq/pick.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "thinseq/error.hpp"

namespace thinseq {

PickMatrix pick_matrix(const PointSequence& nodes, std::span<const cplx> targets) {
  nodes.require_distinct();
  const std::size_t n = nodes.size();
  if (targets.size() != n) {
    throw DomainError("pick_matrix: " + std::to_string(n) + " nodes but " + std::to_string(targets.size()) +
                      " targets");
  }
  PickMatrix p{CMatrix(n), {nodes.points().begin(), nodes.points().end()}, {targets.begin(), targets.end()}};
  for (std::size_t i = 0; i < n; ++i) {
    p.entries(i, i) = (1.0 - std::norm(targets[i])) / nodes[i].one_minus_abs2();
    for (std::size_t j = i + 1; j < n; ++j) {
      // 1 - z_i conj(z_j) is the pair denominator with w = z_j, z = z_i.
      const cplx v = (1.0 - targets[i] * std::conj(targets[j])) / pair_terms(nodes[j], nodes[i]).denominator;
      p.entries(i, j) = v;
      p.entries(j, i) = std::conj(v);
    }
  }
  return p;
}

CMatrix normalized_pick(std::span<const DiscPoint> nodes, std::span<const cplx> targets, double scale) {
  const std::size_t n = nodes.size();
  CMatrix p(n);
  std::vector<double> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = std::sqrt(nodes[i].one_minus_abs2());
  const double s2 = scale * scale;
  for (std::size_t i = 0; i < n; ++i) {
    p(i, i) = 1.0 - s2 * std::norm(targets[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx kernel = root[i] * root[j] / pair_terms(nodes[j], nodes[i]).denominator;
      const cplx v = (1.0 - s2 * targets[i] * std::conj(targets[j])) * kernel;
      p(i, j) = v;
      p(j, i) = std::conj(v);
    }
  }
  return p;
}

double pick_min_eigenvalue(std::span<const DiscPoint> nodes, std::span<const cplx> targets, double scale) {
  return hermitian_spectrum(normalized_pick(nodes, targets, scale), false).values.front();
}

bool feasible_unit_ball(const PickMatrix& p, double tol) {
  return pick_min_eigenvalue(p.nodes, p.targets) >= -tol;
}

ScaleSearch max_feasible_scale(const PointSequence& nodes, std::span<const cplx> targets, double tol,
                               double bisect_tol) {
  nodes.require_distinct();
  if (targets.size() != nodes.size()) throw DomainError("max_feasible_scale: length mismatch");
  if (std::all_of(targets.begin(), targets.end(), [](cplx a) { return a == cplx{}; })) {
    throw DomainError("max_feasible_scale needs a nonzero target vector");
  }
  ScaleSearch out;
  auto probe = [&](double s) {
    const double lam = pick_min_eigenvalue(nodes.points(), targets, s);
    out.path.emplace_back(s, lam);
    return lam >= -tol;
  };
  if (probe(1.0)) {
    out.s_star = 1.0;
    return out;
  }
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > bisect_tol) {
    const double mid = 0.5 * (lo + hi);
    (probe(mid) ? lo : hi) = mid;
  }
  out.s_star = lo;
  return out;
}

double interpolation_constant_probe(const PointSequence& seq, std::size_t tail, std::size_t trials,
                                    std::uint64_t seed, double tol, Exec exec) {
  seq.require_distinct();
  const auto nodes = seq.tail(tail);
  const PointSequence tail_seq({nodes.begin(), nodes.end()});
  // Targets are drawn serially so the sample does not depend on threading.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::vector<std::vector<cplx>> samples(trials, std::vector<cplx>(nodes.size()));
  for (auto& a : samples) {
    for (auto& v : a) v = std::polar(1.0, angle(rng));
  }
  const double worst = max_over(
      trials, [&](std::size_t i) { return 1.0 / max_feasible_scale(tail_seq, samples[i], tol).s_star; }, exec);
  return std::max(1.0, worst);
}

}  // namespace thinseq
