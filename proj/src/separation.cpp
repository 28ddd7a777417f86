#include "thinseq/separation.hpp"

#include <algorithm>
#include <cmath>

#include "thinseq/error.hpp"

namespace thinseq {

SeparationReport separation_constants(const PointSequence& seq, Exec exec) {
  seq.require_distinct();
  const auto pts = seq.points();
  const std::size_t n = pts.size();

  SeparationReport r;
  r.log_delta_j = map_indices<double>(
      n,
      [&](std::size_t j) {
        double log_sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != j) log_sum += log_pseudo_distance(pts[j], pts[k]);
        }
        return log_sum;
      },
      exec);

  r.delta_j.resize(n);
  r.one_minus_delta_j.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    r.delta_j[j] = std::exp(r.log_delta_j[j]);
    r.one_minus_delta_j[j] = -std::expm1(r.log_delta_j[j]);
  }

  r.tail_delta.resize(n);
  r.one_minus_tail_delta.resize(n);
  double tail_log = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    tail_log = (i + 1 == n) ? r.log_delta_j[i] : std::min(tail_log, r.log_delta_j[i]);
    r.tail_delta[i] = std::exp(tail_log);
    r.one_minus_tail_delta[i] = -std::expm1(tail_log);
  }
  r.delta = r.tail_delta.front();
  return r;
}

ThinnessTrend thinness_trend(const FamilyGenerator& family, std::size_t max_length, Exec exec) {
  if (max_length == 0) throw DomainError("thinness trend needs at least one point");
  std::vector<DiscPoint> pts;
  pts.reserve(max_length);
  for (std::size_t i = 0; i < max_length; ++i) pts.push_back(family(i));
  const PointSequence full(std::move(pts));

  ThinnessTrend trend;
  for (std::size_t len = 1; len <= max_length; ++len) {
    auto report = separation_constants(full.prefix(len), exec);
    const std::size_t window = (len + 2) / 3;
    trend.lengths.push_back(len);
    trend.window_one_minus_tail_delta.push_back(report.one_minus_tail_delta[len - window]);
    if (len == max_length) trend.longest = std::move(report);
  }

  const auto& v = trend.window_one_minus_tail_delta;
  const std::size_t first = v.size() >= 3 ? v.size() - 3 : 0;
  bool decreasing = true;
  bool all_zero = true;
  for (std::size_t i = first; i < v.size(); ++i) {
    if (v[i] != 0.0) all_zero = false;
    if (i > first && !(v[i] < v[i - 1])) decreasing = false;
  }
  trend.thin_consistent = all_zero || (v.size() >= 2 && decreasing);
  return trend;
}

}  // namespace thinseq
