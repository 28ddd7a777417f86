#include "thinseq/disc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thinseq/error.hpp"

namespace thinseq {

DiscPoint::DiscPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im)) throw DomainError("disc point must be finite");
  modulus_ = std::hypot(re, im);
  if (!(modulus_ < 1.0)) {
    throw DomainError("point (" + std::to_string(re) + ", " + std::to_string(im) +
                      ") is not inside the unit disc");
  }
  gap_ = 1.0 - modulus_;
  angle_ = std::atan2(im, re);
}

DiscPoint DiscPoint::polar(double gap, double angle) {
  if (!(gap > 0.0 && gap <= 1.0) || !std::isfinite(angle)) {
    throw DomainError("polar point needs gap in (0, 1], got " + std::to_string(gap));
  }
  DiscPoint p;
  p.gap_ = gap;
  p.modulus_ = 1.0 - gap;
  if (p.modulus_ == 0.0) return p;
  p.angle_ = std::remainder(angle, 2.0 * M_PI);
  p.re_ = p.modulus_ * std::cos(p.angle_);
  p.im_ = p.modulus_ * std::sin(p.angle_);
  if (p.angle_ == 0.0) p.im_ = 0.0;
  return p;
}

DiscPoint DiscPoint::with_gap(double re, double im, double gap) {
  if (!(gap > 0.0 && gap <= 1.0)) {
    throw DomainError("gap must lie in (0, 1], got " + std::to_string(gap));
  }
  if (!std::isfinite(re) || !std::isfinite(im)) throw DomainError("disc point must be finite");
  const double r = std::hypot(re, im);
  if (std::abs((1.0 - r) - gap) > 1e-12) {
    throw DomainError("gap " + std::to_string(gap) + " inconsistent with modulus " + std::to_string(r));
  }
  DiscPoint p;
  p.re_ = re;
  p.im_ = im;
  p.gap_ = gap;
  p.modulus_ = 1.0 - gap;
  p.angle_ = std::atan2(im, re);
  return p;
}

PairTerms pair_terms(const DiscPoint& w, const DiscPoint& z) noexcept {
  if (w.is_origin()) return {z.value(), cplx(1.0)};
  if (z.is_origin()) return {cplx(-w.modulus()), cplx(1.0)};
  const double rw = w.modulus();
  const double rz = z.modulus();
  const double sw = w.gap();
  const double sz = z.gap();
  const double delta = z.angle() - w.angle();
  const double half = std::sin(0.5 * delta);
  const double sin_full = std::sin(delta);
  const double chord = 2.0 * half * half;  // 1 - cos(delta)

  // 1 - rw rz e^{i delta}, with 1 - rw rz = sw + sz - sw sz.
  const cplx den{(sw + sz - sw * sz) + rw * rz * chord, -rw * rz * sin_full};
  // rz e^{i delta} - rw, with rz - rw = sw - sz.
  const cplx diff{(sw - sz) - rz * chord, rz * sin_full};
  return {diff, den};
}

double pseudo_distance(const DiscPoint& z, const DiscPoint& w) noexcept {
  const auto t = pair_terms(w, z);
  return std::abs(t.rotated_difference) / std::abs(t.denominator);
}

double one_minus_rho2(const DiscPoint& z, const DiscPoint& w) noexcept {
  const auto t = pair_terms(w, z);
  const double u = std::sqrt(z.one_minus_abs2()) * std::sqrt(w.one_minus_abs2()) / std::abs(t.denominator);
  return u * u;
}

double log_pseudo_distance(const DiscPoint& z, const DiscPoint& w) noexcept {
  const double rho = pseudo_distance(z, w);
  if (rho < 0.5) return std::log(rho);
  return 0.5 * std::log1p(-one_minus_rho2(z, w));
}

DiscPoint mobius_apply(const DiscPoint& c, const DiscPoint& z) {
  if (c.is_origin()) return z;
  const auto t = pair_terms(c, z);
  const cplx value = std::polar(1.0, c.angle()) * t.rotated_difference / t.denominator;
  const double one_minus_abs2 = one_minus_rho2(z, c);
  if (one_minus_abs2 >= 1.0) return DiscPoint{};
  const double modulus = std::abs(value);
  const double gap = one_minus_abs2 / (1.0 + std::min(modulus, 1.0));
  return DiscPoint::with_gap(value.real(), value.imag(), gap);
}

DiscPoint negate(const DiscPoint& c) {
  if (c.is_origin()) return c;
  return DiscPoint::with_gap(-c.re(), -c.im(), c.gap());
}

double solve_delta_t(double t) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("solve_delta_t needs t in (0, 1)");
  // u = 1 - d solves u^2 - (2/t) u + 1 = 0 with u <= 1, i.e.
  // u = t / (1 + sqrt(1 - t^2)); d = 1 - u is rewritten without cancellation.
  const double root = std::sqrt((1.0 - t) * (1.0 + t));
  return ((1.0 - t) + root) / (1.0 + root);
}

PointSequence::PointSequence(std::vector<DiscPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("point sequence must not be empty");
  for (std::size_t i = 0; i < points_.size() && distinct_; ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (pseudo_distance(points_[i], points_[j]) <= kDistinctTolerance) {
        distinct_ = false;
        break;
      }
    }
  }
}

const DiscPoint& PointSequence::at(std::size_t i) const {
  if (i >= points_.size()) {
    throw DomainError("index " + std::to_string(i) + " out of range for sequence of length " +
                      std::to_string(points_.size()));
  }
  return points_[i];
}

std::span<const DiscPoint> PointSequence::tail(std::size_t from) const {
  if (from >= points_.size()) {
    throw DomainError("tail offset " + std::to_string(from) + " out of range for sequence of length " +
                      std::to_string(points_.size()));
  }
  return std::span<const DiscPoint>(points_).subspan(from);
}

void PointSequence::require_distinct() const {
  if (!distinct_) throw DomainError("sequence not distinct");
}

PointSequence PointSequence::prefix(std::size_t count) const {
  if (count == 0 || count > points_.size()) throw DomainError("prefix length out of range");
  return PointSequence({points_.begin(), points_.begin() + static_cast<std::ptrdiff_t>(count)});
}

}  // namespace thinseq
