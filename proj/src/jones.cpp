#include "thinseq/jones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "thinseq/error.hpp"

namespace thinseq {

namespace {

/// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(cplx x) noexcept {
    add_part(re_, re_err_, x.real());
    add_part(im_, im_err_, x.imag());
  }
  cplx value() const noexcept { return {re_ + re_err_, im_ + im_err_}; }

 private:
  static void add_part(double& sum, double& err, double x) noexcept {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      err += (sum - t) + x;
    } else {
      err += (x - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, im_ = 0.0, re_err_ = 0.0, im_err_ = 0.0;
};

void check_index(std::size_t j, std::size_t n) {
  if (j >= n) {
    throw DomainError("basis index " + std::to_string(j) + " out of range for sequence of length " +
                      std::to_string(n));
  }
}

}  // namespace

double InterpolationProblem::norm() const noexcept {
  if (p == Exponent::two) return norm2(targets);
  double m = 0.0;
  for (const auto& a : targets) m = std::max(m, std::abs(a));
  return m;
}

// Per-point factor data shared by every basis function.
struct JonesBasis::Terms {
  std::vector<cplx> den;         // 1 - conj(z_m) z
  std::vector<double> log_abs;   // log |b_m(z)|
  std::vector<double> arg;       // arg b_m(z)
  std::ptrdiff_t zero_index = -1;
};

JonesBasis::Terms JonesBasis::terms(const DiscPoint& z) const {
  const std::size_t n = seq_.size();
  Terms t;
  t.den.resize(n);
  t.log_abs.resize(n);
  t.arg.resize(n);
  const double root_z = std::sqrt(z.one_minus_abs2());
  for (std::size_t m = 0; m < n; ++m) {
    const auto& zm = seq_[m];
    const auto pt = pair_terms(zm, z);
    t.den[m] = pt.denominator;
    const bool vanishes = zm.is_origin() ? z.is_origin() : pt.rotated_difference == cplx{0.0, 0.0};
    if (vanishes) {
      t.zero_index = static_cast<std::ptrdiff_t>(m);
      t.log_abs[m] = -std::numeric_limits<double>::infinity();
      t.arg[m] = 0.0;
      continue;
    }
    if (zm.is_origin()) {
      t.log_abs[m] = std::log(z.modulus());
      t.arg[m] = z.angle();
      continue;
    }
    const double dabs = std::abs(pt.denominator);
    const double rho = std::abs(pt.rotated_difference) / dabs;
    if (rho < 0.5) {
      t.log_abs[m] = std::log(rho);
    } else {
      const double u = root_z * std::sqrt(zm.one_minus_abs2()) / dabs;
      t.log_abs[m] = 0.5 * std::log1p(-u * u);
    }
    t.arg[m] = std::arg(-pt.rotated_difference) - std::arg(pt.denominator);
  }
  return t;
}

JonesBasis::JonesBasis(PointSequence seq, Exec exec) : seq_(std::move(seq)) {
  sep_ = separation_constants(seq_, exec);
  const std::size_t n = seq_.size();

  by_gap_.resize(n);
  std::iota(by_gap_.begin(), by_gap_.end(), std::size_t{0});
  std::stable_sort(by_gap_.begin(), by_gap_.end(),
                   [&](std::size_t a, std::size_t b) { return seq_[a].gap() < seq_[b].gap(); });
  members_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double gj = seq_[j].gap();
    members_[j] = static_cast<std::size_t>(
        std::upper_bound(by_gap_.begin(), by_gap_.end(), gj,
                         [&](double g, std::size_t idx) { return g < seq_[idx].gap(); }) -
        by_gap_.begin());
  }

  excluded_at_node_.resize(n);
  exponent_at_node_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto t = terms(seq_[j]);
    LogValue v;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      v.log_abs += t.log_abs[k];
      v.arg += t.arg[k];
    }
    excluded_at_node_[j] = v;
    CompensatedSum s;
    for (std::size_t r = 0; r < members_[j]; ++r) {
      const std::size_t m = by_gap_[r];
      s.add(2.0 * seq_[m].one_minus_abs2() / t.den[m]);
    }
    exponent_at_node_[j] = s.value();
  }
}

std::vector<cplx> JonesBasis::weights_from(const Terms& t) const {
  const std::size_t n = seq_.size();
  // prefix[r] = sum of the r smallest-gap exponent terms.
  std::vector<cplx> prefix(n + 1);
  CompensatedSum s;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t m = by_gap_[r];
    s.add(2.0 * seq_[m].one_minus_abs2() / t.den[m]);
    prefix[r + 1] = s.value();
  }
  std::vector<cplx> w(n);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx ratio = seq_[j].one_minus_abs2() / t.den[j];
    const cplx exponent = prefix[members_[j]] - exponent_at_node_[j];
    w[j] = ratio * ratio * std::exp(-exponent);
  }
  return w;
}

std::vector<cplx> JonesBasis::weights(const DiscPoint& z) const { return weights_from(terms(z)); }

std::vector<cplx> JonesBasis::values(const DiscPoint& z) const {
  const std::size_t n = seq_.size();
  const auto t = terms(z);
  auto g = weights_from(t);
  if (t.zero_index >= 0) {
    const auto k = static_cast<std::size_t>(t.zero_index);
    LogValue v;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      v.log_abs += t.log_abs[i];
      v.arg += t.arg[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) {
        g[j] = 0.0;
        continue;
      }
      const auto& node = excluded_at_node_[j];
      g[j] *= std::polar(std::exp(v.log_abs - node.log_abs), v.arg - node.arg);
    }
    return g;
  }
  double total_log = 0.0;
  double total_arg = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total_log += t.log_abs[i];
    total_arg += t.arg[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& node = excluded_at_node_[j];
    const double log_ratio = (total_log - t.log_abs[j]) - node.log_abs;
    const double arg_ratio = (total_arg - t.arg[j]) - node.arg;
    g[j] *= std::polar(std::exp(log_ratio), arg_ratio);
  }
  return g;
}

cplx JonesBasis::weight(std::size_t j, const DiscPoint& z) const {
  check_index(j, size());
  return weights(z)[j];
}

cplx JonesBasis::eval(std::size_t j, const DiscPoint& z) const {
  check_index(j, size());
  return values(z)[j];
}

double JonesBasis::sum_abs(const DiscPoint& z, std::size_t from) const {
  const auto g = values(z);
  double s = 0.0;
  for (std::size_t j = from; j < g.size(); ++j) s += std::abs(g[j]);
  return s;
}

double JonesBasis::weight_sum_abs(const DiscPoint& z) const {
  double s = 0.0;
  for (const auto& w : weights(z)) s += std::abs(w);
  return s;
}

double JonesBasis::recorded_sum_bound(std::span<const DiscPoint> grid, std::size_t from, Exec exec) const {
  return max_over(grid.size(), [&](std::size_t i) { return sum_abs(grid[i], from); }, exec);
}

cplx jones_weight(const PointSequence& seq, std::size_t j, const DiscPoint& z) {
  return JonesBasis(seq, Exec::serial).weight(j, z);
}

cplx jones_basis_eval(const PointSequence& seq, std::size_t j, const DiscPoint& z) {
  return JonesBasis(seq, Exec::serial).eval(j, z);
}

cplx JonesInterpolant::operator()(const DiscPoint& z) const {
  const auto g = basis.values(z);
  cplx s{};
  for (std::size_t i = 0; i < coefficients.size(); ++i) s += coefficients[i] * g[tail + i];
  return s;
}

JonesInterpolant jones_interpolate(const JonesBasis& basis, const InterpolationProblem& prob, const PolarGrid& grid,
                                   Exec exec) {
  if (prob.p != Exponent::infinity) throw DomainError("Jones interpolation takes p = inf targets");
  if (prob.tail >= basis.size()) throw DomainError("tail offset out of range");
  if (prob.targets.size() != basis.size() - prob.tail) {
    throw DomainError("expected " + std::to_string(basis.size() - prob.tail) + " targets, got " +
                      std::to_string(prob.targets.size()));
  }
  JonesInterpolant g{basis, prob.tail, prob.targets};
  for (std::size_t j = prob.tail; j < basis.size(); ++j) {
    g.max_residual = std::max(g.max_residual, std::abs(g(basis.sequence()[j]) - prob.targets[j - prob.tail]));
  }
  const auto pts = grid.points();
  g.grid_sup = std::max(0.0, max_over(pts.size(), [&](std::size_t i) { return std::abs(g(pts[i])); }, exec));
  g.sum_bound = basis.recorded_sum_bound(pts, prob.tail, exec);
  g.bound = g.sum_bound * prob.norm();
  return g;
}

cplx Exactification::operator()(const DiscPoint& z) const {
  const auto g = basis.values(z);
  cplx s{};
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.indices.size(); ++i) s += b.residuals[i] * g[b.indices[i]];
  }
  return s;
}

cplx Exactification::block_value(std::size_t b, const DiscPoint& z) const {
  const auto g = basis.values(z);
  const auto& blk = blocks.at(b);
  cplx s{};
  for (std::size_t i = 0; i < blk.indices.size(); ++i) s += blk.residuals[i] * g[blk.indices[i]];
  return s;
}

Exactification exactify(const JonesBasis& basis, std::span<const cplx> approx_values, std::span<const cplx> targets,
                        const PolarGrid& grid, Exec exec) {
  const std::size_t n = basis.size();
  if (approx_values.size() != n || targets.size() != n) {
    throw DomainError("exactify needs one approximate value and one target per sequence point");
  }
  Exactification ex{basis, {}, 0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const cplx res = approx_values[k] - targets[k];
    const double r = std::abs(res);
    if (r == 0.0) continue;
    const int level = r >= 0.5 ? 0 : static_cast<int>(std::floor(-std::log2(r)));
    auto it = std::find_if(ex.blocks.begin(), ex.blocks.end(), [&](const auto& b) { return b.level == level; });
    if (it == ex.blocks.end()) {
      ex.blocks.push_back({level, {}, {}, std::ldexp(1.0, -level), 0.0, 0.0});
      it = std::prev(ex.blocks.end());
    }
    it->indices.push_back(k);
    it->residuals.push_back(res);
    if (level == 0) it->scale = std::max(it->scale, r);
  }
  std::sort(ex.blocks.begin(), ex.blocks.end(), [](const auto& a, const auto& b) { return a.level < b.level; });

  const auto pts = grid.points();
  ex.weight_sum_bound = max_over(pts.size(), [&](std::size_t i) { return basis.weight_sum_abs(pts[i]); }, exec);
  for (std::size_t b = 0; b < ex.blocks.size(); ++b) {
    auto& blk = ex.blocks[b];
    blk.grid_sup = max_over(pts.size(), [&](std::size_t i) { return std::abs(ex.block_value(b, pts[i])); }, exec);
    blk.bound = blk.scale / basis.delta() * ex.weight_sum_bound;
  }
  ex.grid_sup = ex.blocks.empty()
                    ? 0.0
                    : max_over(pts.size(), [&](std::size_t i) { return std::abs(ex(pts[i])); }, exec);
  return ex;
}

EisSolution iterative_eis_solve(const PointSequence& seq, const InterpolationProblem& prob, Exec exec) {
  if (prob.p != Exponent::two) throw DomainError("iterative EIS solver takes p = 2 targets");
  const auto g = gram_matrix(seq, prob.tail, exec);
  const std::size_t n = g.size();
  if (prob.targets.size() != n) {
    throw DomainError("expected " + std::to_string(n) + " targets, got " + std::to_string(prob.targets.size()));
  }
  const auto spec = hermitian_spectrum(g, false);
  EisSolution sol;
  sol.epsilon = std::max(spec.values.back() - 1.0, 1.0 - spec.values.front());
  if (!(sol.epsilon < 1.0)) throw NumericError("tail not contractive; increase N");

  const double a_norm = norm2(prob.targets);
  sol.norm_bound = a_norm / (1.0 - sol.epsilon);
  std::vector<cplx> accumulated(n);
  std::vector<cplx> residual = prob.targets;
  sol.residual_trace.push_back(a_norm);
  constexpr std::size_t kMaxRounds = 100000;
  while (sol.residual_trace.back() >= kEisResidualTarget && sol.rounds < kMaxRounds) {
    // f_k = sum_j a_j^{(k)} h_{z_j}; a^{(k+1)} = a^{(k)} - weighted f_k(z_j) = a^{(k)} - G a^{(k)}.
    const auto weighted = g.entries.apply(residual);
    for (std::size_t i = 0; i < n; ++i) {
      accumulated[i] += residual[i];
      residual[i] -= weighted[i];
    }
    ++sol.rounds;
    sol.residual_trace.push_back(norm2(residual));
  }
  if (sol.residual_trace.back() >= kEisResidualTarget) {
    throw NumericError("residual recursion did not reach the target after " + std::to_string(kMaxRounds) + " rounds");
  }

  const auto achieved = g.entries.apply(accumulated);
  std::vector<cplx> miss(n);
  double energy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    miss[i] = prob.targets[i] - achieved[i];
    energy += (std::conj(accumulated[i]) * achieved[i]).real();
  }
  sol.final_residual = norm2(miss);
  sol.norm = std::sqrt(std::max(0.0, energy));

  sol.coefficients.nodes = g.nodes;
  for (std::size_t i = 0; i < n; ++i) {
    sol.coefficients.coeffs.push_back(std::sqrt(g.nodes[i].one_minus_abs2()) * accumulated[i]);
    sol.coefficients.support.push_back(prob.tail + i);
  }
  return sol;
}

cplx SplittingPair::k(const DiscPoint& z) const { return t * head(z) * tail_interpolant(z); }

cplx SplittingPair::h(const DiscPoint& z) const {
  const double c = 1.0 - delta_t;
  const cplx kz = k(z);
  return (kz - c) / (1.0 - c * kz) / c;
}

cplx SplittingPair::F(const DiscPoint& z) const {
  const cplx v = 0.5 * (1.0 + h(z));
  return v * v;
}

cplx SplittingPair::G(const DiscPoint& z) const {
  const cplx v = 0.5 * (1.0 - h(z));
  return v * v;
}

SplittingPair splitting_pair(const PointSequence& seq, std::size_t cut, const PolarGrid& grid, Exec exec) {
  if (cut >= seq.size()) throw DomainError("splitting cut leaves an empty tail");
  JonesBasis basis(seq, exec);
  BlaschkeProduct head = head_product(seq, cut);

  InterpolationProblem prob{Exponent::infinity, cut, {}};
  for (std::size_t j = cut; j < seq.size(); ++j) prob.targets.push_back(1.0 / head(seq[j]));
  auto f = jones_interpolate(basis, prob, grid, exec);

  SplittingPair sp{std::move(f), std::move(head), cut};
  sp.delta_prime = basis.separation().tail_delta[cut];

  const auto pts = grid.points();
  const double grid_sup =
      max_over(pts.size(), [&](std::size_t i) { return std::abs(sp.head(pts[i]) * sp.tail_interpolant(pts[i])); }, exec);
  sp.head_tail_sup = std::max(1.0, grid_sup);
  sp.t = 1.0 / ((1.0 + kSplittingMargin) * sp.head_tail_sup);
  sp.eps_recorded = sp.delta_prime * (1.0 + kSplittingMargin) * sp.head_tail_sup - 1.0;
  sp.delta_t = solve_delta_t(sp.t);
  const double c = 1.0 - sp.delta_t;
  sp.gamma = 0.5 + 0.5 / (c * c);
  return sp;
}

}  // namespace thinseq
