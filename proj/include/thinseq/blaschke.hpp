#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "thinseq/disc.hpp"

namespace thinseq {

/// (-conj(w)/|w|) (z - w) / (1 - conj(w) z); equals z when w is the origin.
cplx blaschke_factor(const DiscPoint& zero, const DiscPoint& z) noexcept;

enum class ProductMode {
  direct,      ///< plain running product
  log_domain,  ///< sum of log-moduli and arguments, exponentiated once
  automatic,   ///< log_domain above kLogDomainThreshold factors
};

inline constexpr std::size_t kLogDomainThreshold = 16;

/// Logarithmic form of a product value: value = exp(log_abs + i arg).
/// A product vanishing at z has is_zero set and log_abs = -inf.
struct LogValue {
  double log_abs = 0.0;
  double arg = 0.0;
  bool is_zero = false;

  cplx value() const;
};

LogValue blaschke_log(std::span<const DiscPoint> zeros, const DiscPoint& z) noexcept;

cplx blaschke_eval(std::span<const DiscPoint> zeros, const DiscPoint& z,
                   ProductMode mode = ProductMode::automatic);

/// Finite Blaschke product with an owned zero set.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  explicit BlaschkeProduct(std::vector<DiscPoint> zeros) : zeros_(std::move(zeros)) {}

  cplx operator()(const DiscPoint& z, ProductMode mode = ProductMode::automatic) const {
    return blaschke_eval(zeros_, z, mode);
  }
  LogValue log_eval(const DiscPoint& z) const noexcept { return blaschke_log(zeros_, z); }
  std::span<const DiscPoint> zeros() const noexcept { return zeros_; }

 private:
  std::vector<DiscPoint> zeros_;
};

/// The three subproducts of a sequence used by the interpolation arguments
/// (indices are 0-based):
///   excluded      B_j,     zeros {z_k : k != j}
///   head          b_{N-},  zeros {z_k : k <  N}
///   tail_excluded B_{j,N}, zeros {z_k : k >= N, k != j}
struct Subproducts {
  BlaschkeProduct excluded;
  BlaschkeProduct head;
  BlaschkeProduct tail_excluded;
};

/// Throws DomainError unless j < size and N < size.
Subproducts subproducts(const PointSequence& seq, std::size_t j, std::size_t tail);

BlaschkeProduct excluded_product(const PointSequence& seq, std::size_t j);
BlaschkeProduct head_product(const PointSequence& seq, std::size_t count);

}  // namespace thinseq
