#include "thinseq/seqgen.hpp"

#include <cmath>
#include <sstream>

#include "thinseq/error.hpp"
#include "thinseq/seqio.hpp"

namespace thinseq {

namespace {

void validate(const FamilySpec& spec) {
  if (!(spec.q > 0.0 && spec.q < 1.0)) throw DomainError("q must lie in (0, 1)");
  if (!(spec.c > 0.0 && spec.c <= 1.0)) throw DomainError("c must lie in (0, 1]");
  if (spec.kind == FamilyKind::power_tower && !(spec.a > 1.0)) throw DomainError("a must exceed 1");
  if (spec.count < 1 || spec.count > kMaxFamilyCount) throw DomainError("count must lie in [1, 64]");
  if (spec.angle_rule == AngleRule::fixed_list && spec.angles.empty()) {
    throw DomainError("fixed_list angle rule needs at least one angle");
  }
}

double family_gap(const FamilySpec& spec, std::size_t n) {
  const double nn = static_cast<double>(n);
  double exponent = 0.0;
  switch (spec.kind) {
    case FamilyKind::geometric:
      exponent = nn;
      break;
    case FamilyKind::supergeometric:
      exponent = nn * nn;
      break;
    case FamilyKind::power_tower:
      exponent = std::pow(spec.a, nn);
      break;
    case FamilyKind::custom_file:
      throw DomainError("custom_file families have no closed form");
  }
  const double gap = spec.c * std::pow(spec.q, exponent);
  if (!(gap >= kMinFamilyGap)) {
    std::ostringstream msg;
    msg << "point " << n << " has 1 - |z| below " << kMinFamilyGap << "; reduce count";
    throw DomainError(msg.str());
  }
  return gap;
}

}  // namespace

DiscPoint family_point(const FamilySpec& spec, std::size_t n) {
  if (n == 0) throw DomainError("family points are numbered from 1");
  const double gap = family_gap(spec, n);
  const double angle = spec.angle_rule == AngleRule::radial ? 0.0 : spec.angles[(n - 1) % spec.angles.size()];
  return DiscPoint::polar(gap, angle);
}

PointSequence generate(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::custom_file) return load_sequence(spec.path);
  validate(spec);
  std::vector<DiscPoint> pts;
  pts.reserve(spec.count);
  for (std::size_t n = 1; n <= spec.count; ++n) pts.push_back(family_point(spec, n));
  return PointSequence(std::move(pts));
}

FamilyKind parse_family_kind(const std::string& name) {
  if (name == "geometric") return FamilyKind::geometric;
  if (name == "supergeometric") return FamilyKind::supergeometric;
  if (name == "power_tower") return FamilyKind::power_tower;
  if (name == "custom_file") return FamilyKind::custom_file;
  throw DomainError("unknown family '" + name + "'");
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::geometric:
      return "geometric";
    case FamilyKind::supergeometric:
      return "supergeometric";
    case FamilyKind::power_tower:
      return "power_tower";
    case FamilyKind::custom_file:
      return "custom_file";
  }
  return "unknown";
}

std::string describe(const FamilySpec& spec) {
  std::ostringstream out;
  out.precision(17);
  out << "family=" << to_string(spec.kind) << " c=" << spec.c << " q=" << spec.q;
  if (spec.kind == FamilyKind::power_tower) out << " a=" << spec.a;
  out << " count=" << spec.count;
  if (spec.angle_rule == AngleRule::fixed_list) {
    out << " angles=";
    for (std::size_t i = 0; i < spec.angles.size(); ++i) out << (i ? ";" : "") << spec.angles[i];
  }
  return out.str();
}

}  // namespace thinseq
