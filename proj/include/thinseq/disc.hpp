#pragma once

// Points of the open unit disc and the pseudohyperbolic geometry on them.
//
// Thin sequences cluster at the circle much faster than double precision can
// resolve: 1 - 2^{-n^2} rounds to 1 already for n = 8. A DiscPoint therefore
// carries its distance to the circle, gap = 1 - |z|, as an independent field,
// and every two-point quantity (z - w, 1 - conj(w) z, rho, 1 - rho^2) is
// assembled from gaps and relative angles instead of from the rounded
// Cartesian value.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace thinseq {

using cplx = std::complex<double>;

class DiscPoint {
 public:
  /// The origin.
  DiscPoint() = default;

  /// z = re + i im. Throws DomainError unless |z| < 1.
  DiscPoint(double re, double im);

  /// z = (1 - gap) e^{i angle}; gap in (0, 1]. The gap is kept exactly.
  static DiscPoint polar(double gap, double angle);

  /// Cartesian value together with an independently known gap. Used by the
  /// file loader and by Mobius maps. The gap must agree with 1 - |z| to
  /// within 1e-12 absolute.
  static DiscPoint with_gap(double re, double im, double gap);

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  cplx value() const noexcept { return {re_, im_}; }
  double modulus() const noexcept { return modulus_; }
  double gap() const noexcept { return gap_; }
  double angle() const noexcept { return angle_; }
  /// 1 - |z|^2, accurate near the circle.
  double one_minus_abs2() const noexcept { return gap_ * (2.0 - gap_); }
  bool is_origin() const noexcept { return re_ == 0.0 && im_ == 0.0; }

  friend bool operator==(const DiscPoint& a, const DiscPoint& b) noexcept {
    return a.re_ == b.re_ && a.im_ == b.im_ && a.gap_ == b.gap_;
  }

 private:
  double re_ = 0.0;
  double im_ = 0.0;
  double modulus_ = 0.0;
  double gap_ = 1.0;
  double angle_ = 0.0;
};

/// Accurately computed building blocks for a pair (w, z).
struct PairTerms {
  /// e^{-i arg w} (z - w); equals z - w when w is the origin.
  cplx rotated_difference;
  /// 1 - conj(w) z.
  cplx denominator;
};

PairTerms pair_terms(const DiscPoint& w, const DiscPoint& z) noexcept;

/// rho(z, w) = |z - w| / |1 - conj(w) z|.
double pseudo_distance(const DiscPoint& z, const DiscPoint& w) noexcept;

/// 1 - rho(z, w)^2 = (1 - |z|^2)(1 - |w|^2) / |1 - conj(w) z|^2.
double one_minus_rho2(const DiscPoint& z, const DiscPoint& w) noexcept;

/// log rho(z, w); -inf when z == w.
double log_pseudo_distance(const DiscPoint& z, const DiscPoint& w) noexcept;

/// phi_c(z) = (z - c) / (1 - conj(c) z). phi_c(c) = 0 and phi_c^{-1} = phi_{-c}.
DiscPoint mobius_apply(const DiscPoint& c, const DiscPoint& z);

/// -c, with the gap carried over.
DiscPoint negate(const DiscPoint& c);

/// Solves rho(-1 + d, 1 - d) = t for d in (0, 1), t in (0, 1).
double solve_delta_t(double t);

/// Ordered list of disc points; distinctness is decided once at construction.
class PointSequence {
 public:
  /// Points closer than this in rho are considered equal.
  static constexpr double kDistinctTolerance = 1e-14;

  /// Throws DomainError for an empty list.
  explicit PointSequence(std::vector<DiscPoint> points);

  std::size_t size() const noexcept { return points_.size(); }
  const DiscPoint& operator[](std::size_t i) const { return points_[i]; }
  const DiscPoint& at(std::size_t i) const;
  std::span<const DiscPoint> points() const noexcept { return points_; }
  std::span<const DiscPoint> tail(std::size_t from) const;
  bool distinct() const noexcept { return distinct_; }

  /// Throws DomainError("sequence not distinct") unless distinct().
  void require_distinct() const;

  /// Sequence of the first `count` points.
  PointSequence prefix(std::size_t count) const;

  friend bool operator==(const PointSequence& a, const PointSequence& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<DiscPoint> points_;
  bool distinct_ = true;
};

}  // namespace thinseq
