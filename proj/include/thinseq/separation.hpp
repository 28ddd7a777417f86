#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "thinseq/disc.hpp"
#include "thinseq/exec.hpp"

namespace thinseq {

/// Separation constants delta_j = |B_j(z_j)| of a finite sequence.
/// Alongside each value the report keeps log(delta_j) and 1 - delta_j, both
/// computed without cancellation, since thin sequences push delta_j to 1.
struct SeparationReport {
  std::vector<double> delta_j;
  std::vector<double> log_delta_j;
  std::vector<double> one_minus_delta_j;
  double delta = 1.0;  ///< min_j delta_j
  /// tail_delta[N] = min_{k >= N} delta_j[k]; nondecreasing in N.
  std::vector<double> tail_delta;
  std::vector<double> one_minus_tail_delta;
};

/// Throws DomainError("sequence not distinct") for repeated points.
SeparationReport separation_constants(const PointSequence& seq, Exec exec = kDefaultExec);

/// Produces the n-th point (0-based) of a sequence family; truncations of
/// the family are its prefixes.
using FamilyGenerator = std::function<DiscPoint(std::size_t)>;

struct ThinnessTrend {
  std::vector<std::size_t> lengths;
  /// 1 - tail_delta over the trailing window of each truncation; the window
  /// is the last ceil(L/3) points of a truncation of length L.
  std::vector<double> window_one_minus_tail_delta;
  /// Full delta_j of the longest truncation.
  SeparationReport longest;
  /// Strictly decreasing across the three longest truncations (or all zero).
  bool thin_consistent = false;
};

ThinnessTrend thinness_trend(const FamilyGenerator& family, std::size_t max_length, Exec exec = kDefaultExec);

}  // namespace thinseq
