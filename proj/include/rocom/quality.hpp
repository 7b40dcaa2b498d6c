#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "rocom/annotated.hpp"

namespace rocom {

/// canonical = scale * x + offset
struct UnitDef {
  std::string name;
  std::string dimension;
  double scale = 1.0;
  double offset = 0.0;

  bool canonical() const noexcept { return scale == 1.0 && offset == 0.0; }
  bool operator==(const UnitDef&) const = default;
};

enum class Ordering { Less, Equal, Greater };

std::string_view to_string(Ordering o);

/// Values closer than this (in canonical units) compare Equal.
inline constexpr double kCompareTolerance = 1e-9;

/// Dimensioned units with affine conversions to one canonical unit per
/// dimension. Names are matched ASCII case-insensitively.
class UnitRegistry {
 public:
  UnitRegistry() = default;
  UnitRegistry(const UnitRegistry& other);
  UnitRegistry& operator=(const UnitRegistry& other);

  void register_unit(UnitDef def);

  bool contains(std::string_view name) const;
  std::optional<UnitDef> find(std::string_view name) const;
  std::optional<UnitDef> canonical_unit(std::string_view dimension) const;

  /// x expressed in `to`. Identity conversions return x unchanged.
  double convert(double value, std::string_view from, std::string_view to) const;
  double to_canonical(double value, std::string_view unit) const;

  /// Orders two numeric annotated values by canonical magnitude. Unitless
  /// values compare raw; mixing a unit with no unit is a DimensionMismatch.
  Ordering compare(const AnnotatedValue& a, const AnnotatedValue& b,
                   double tolerance = kCompareTolerance) const;

  /// Sorted by (dimension, canonical first, name).
  std::vector<UnitDef> units() const;

 private:
  const UnitDef& lookup_locked(std::string_view name) const;

  mutable std::shared_mutex mutex_;
  std::map<std::string, UnitDef> units_;  // keyed by lower-cased name
};

/// One issue per out-of-bounds field; empty when every present field is valid.
std::vector<Issue> validate_qoc(const QoC& q);

}  // namespace rocom
