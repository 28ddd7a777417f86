#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "thinseq/disc.hpp"

namespace thinseq {

enum class FamilyKind { geometric, supergeometric, power_tower, custom_file };
enum class AngleRule { radial, fixed_list };

/// Radial test families with known character:
///   geometric       1 - c q^n        interpolating, not thin
///   supergeometric  1 - c q^{n^2}    thin
///   power_tower     1 - c q^{a^n}    thin, faster
/// n runs from 1 to count. With AngleRule::fixed_list point n is placed at
/// angles[(n - 1) mod angles.size()].
struct FamilySpec {
  FamilyKind kind = FamilyKind::supergeometric;
  double c = 1.0;
  double q = 0.5;
  double a = 2.0;
  std::size_t count = 12;
  AngleRule angle_rule = AngleRule::radial;
  std::vector<double> angles;
  std::string path;  ///< custom_file only
};

inline constexpr std::size_t kMaxFamilyCount = 64;
inline constexpr double kMinFamilyGap = 1e-300;

/// Throws DomainError for parameters out of range (0 < q < 1, 0 < c <= 1,
/// a > 1, 1 <= count <= 64) or for a point with 1 - |z| < 1e-300.
PointSequence generate(const FamilySpec& spec);

/// The n-th point (n >= 1) of a generated family.
DiscPoint family_point(const FamilySpec& spec, std::size_t n);

FamilyKind parse_family_kind(const std::string& name);
std::string to_string(FamilyKind kind);

/// One-line description, e.g. "family=supergeometric c=1 q=0.5 count=12".
std::string describe(const FamilySpec& spec);

}  // namespace thinseq
