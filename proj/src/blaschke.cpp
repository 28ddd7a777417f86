#include "thinseq/blaschke.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "thinseq/error.hpp"

namespace thinseq {

cplx blaschke_factor(const DiscPoint& zero, const DiscPoint& z) noexcept {
  if (zero.is_origin()) return z.value();
  const auto t = pair_terms(zero, z);
  return -t.rotated_difference / t.denominator;
}

cplx LogValue::value() const {
  if (is_zero) return {0.0, 0.0};
  return std::polar(std::exp(log_abs), arg);
}

LogValue blaschke_log(std::span<const DiscPoint> zeros, const DiscPoint& z) noexcept {
  LogValue acc;
  for (const auto& w : zeros) {
    if (w.is_origin()) {
      if (z.is_origin()) return {-std::numeric_limits<double>::infinity(), 0.0, true};
      acc.log_abs += std::log(z.modulus());
      acc.arg += z.angle();
      continue;
    }
    const auto t = pair_terms(w, z);
    if (t.rotated_difference == cplx{0.0, 0.0}) {
      return {-std::numeric_limits<double>::infinity(), 0.0, true};
    }
    acc.log_abs += log_pseudo_distance(z, w);
    acc.arg += std::arg(-t.rotated_difference) - std::arg(t.denominator);
  }
  acc.arg = std::remainder(acc.arg, 2.0 * M_PI);
  return acc;
}

cplx blaschke_eval(std::span<const DiscPoint> zeros, const DiscPoint& z, ProductMode mode) {
  if (mode == ProductMode::automatic) {
    mode = zeros.size() > kLogDomainThreshold ? ProductMode::log_domain : ProductMode::direct;
  }
  if (mode == ProductMode::log_domain) return blaschke_log(zeros, z).value();
  cplx prod{1.0, 0.0};
  for (const auto& w : zeros) prod *= blaschke_factor(w, z);
  return prod;
}

namespace {

void check_index(const PointSequence& seq, std::size_t i, const char* what) {
  if (i >= seq.size()) {
    throw DomainError(std::string(what) + " index " + std::to_string(i) + " out of range for sequence of length " +
                      std::to_string(seq.size()));
  }
}

}  // namespace

BlaschkeProduct excluded_product(const PointSequence& seq, std::size_t j) {
  check_index(seq, j, "point");
  std::vector<DiscPoint> zeros;
  zeros.reserve(seq.size() - 1);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k != j) zeros.push_back(seq[k]);
  }
  return BlaschkeProduct(std::move(zeros));
}

BlaschkeProduct head_product(const PointSequence& seq, std::size_t count) {
  if (count > seq.size()) throw DomainError("head length out of range");
  auto pts = seq.points().first(count);
  return BlaschkeProduct({pts.begin(), pts.end()});
}

Subproducts subproducts(const PointSequence& seq, std::size_t j, std::size_t tail) {
  check_index(seq, j, "point");
  check_index(seq, tail, "tail");
  std::vector<DiscPoint> tail_zeros;
  for (std::size_t k = tail; k < seq.size(); ++k) {
    if (k != j) tail_zeros.push_back(seq[k]);
  }
  return {excluded_product(seq, j), head_product(seq, tail), BlaschkeProduct(std::move(tail_zeros))};
}

}  // namespace thinseq
