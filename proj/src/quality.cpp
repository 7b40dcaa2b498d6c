#include "rocom/quality.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <mutex>

#include "rocom/error.hpp"

namespace rocom {

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "Equal";
}

std::string format_issue(const Issue& issue) {
  std::string out = issue.severity == Severity::Warning ? "warning: " : "error: ";
  out += issue.kind;
  if (!issue.subject.empty()) out += " [" + issue.subject + "]";
  if (!issue.message.empty()) out += " " + issue.message;
  return out;
}

namespace {

std::string fold(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

UnitRegistry::UnitRegistry(const UnitRegistry& other) {
  std::shared_lock lock(other.mutex_);
  units_ = other.units_;
}

UnitRegistry& UnitRegistry::operator=(const UnitRegistry& other) {
  if (this == &other) return *this;
  UnitRegistry copy(other);
  std::unique_lock lock(mutex_);
  units_ = std::move(copy.units_);
  return *this;
}

void UnitRegistry::register_unit(UnitDef def) {
  std::unique_lock lock(mutex_);
  if (def.name.empty() || def.dimension.empty()) fail(Errc::InvalidArgument, "unit needs a name and a dimension");
  auto key = fold(def.name);
  if (units_.contains(key)) fail(Errc::DuplicateUnit, def.name);
  if (def.scale == 0.0) fail(Errc::ZeroScale, def.name);
  if (!std::isfinite(def.scale) || !std::isfinite(def.offset)) {
    fail(Errc::InvalidArgument, def.name + ": non-finite conversion constant");
  }
  auto has_canonical = std::any_of(units_.begin(), units_.end(), [&](const auto& kv) {
    return kv.second.dimension == def.dimension && kv.second.canonical();
  });
  if (def.canonical() && has_canonical) {
    fail(Errc::DuplicateCanonical, def.dimension + " already has a canonical unit");
  }
  if (!def.canonical() && !has_canonical) {
    fail(Errc::MissingCanonicalUnit, def.dimension + " has no canonical unit yet");
  }
  units_.emplace(std::move(key), std::move(def));
}

const UnitDef& UnitRegistry::lookup_locked(std::string_view name) const {
  auto it = units_.find(fold(name));
  if (it == units_.end()) fail(Errc::UnknownUnit, std::string(name));
  return it->second;
}

bool UnitRegistry::contains(std::string_view name) const {
  std::shared_lock lock(mutex_);
  return units_.contains(fold(name));
}

std::optional<UnitDef> UnitRegistry::find(std::string_view name) const {
  std::shared_lock lock(mutex_);
  auto it = units_.find(fold(name));
  if (it == units_.end()) return std::nullopt;
  return it->second;
}

std::optional<UnitDef> UnitRegistry::canonical_unit(std::string_view dimension) const {
  std::shared_lock lock(mutex_);
  for (const auto& [_, u] : units_) {
    if (u.dimension == dimension && u.canonical()) return u;
  }
  return std::nullopt;
}

double UnitRegistry::convert(double value, std::string_view from, std::string_view to) const {
  std::shared_lock lock(mutex_);
  const auto& a = lookup_locked(from);
  const auto& b = lookup_locked(to);
  if (a.dimension != b.dimension) {
    fail(Errc::DimensionMismatch, a.name + " (" + a.dimension + ") vs " + b.name + " (" + b.dimension + ")");
  }
  if (fold(a.name) == fold(b.name)) return value;
  return ((a.scale * value + a.offset) - b.offset) / b.scale;
}

double UnitRegistry::to_canonical(double value, std::string_view unit) const {
  std::shared_lock lock(mutex_);
  const auto& u = lookup_locked(unit);
  return u.scale * value + u.offset;
}

Ordering UnitRegistry::compare(const AnnotatedValue& a, const AnnotatedValue& b, double tolerance) const {
  auto x = numeric(a.value);
  auto y = numeric(b.value);
  if (!x || !y) fail(Errc::TypeMismatch, "compare needs numeric values");
  double lhs = *x;
  double rhs = *y;
  if (a.unit.has_value() != b.unit.has_value()) {
    fail(Errc::DimensionMismatch, "cannot compare a unit-bearing value with a unitless one");
  }
  if (a.unit) {
    std::shared_lock lock(mutex_);
    const auto& ua = lookup_locked(*a.unit);
    const auto& ub = lookup_locked(*b.unit);
    if (ua.dimension != ub.dimension) fail(Errc::DimensionMismatch, ua.dimension + " vs " + ub.dimension);
    lhs = ua.scale * lhs + ua.offset;
    rhs = ub.scale * rhs + ub.offset;
  }
  if (std::abs(lhs - rhs) <= tolerance) return Ordering::Equal;
  return lhs < rhs ? Ordering::Less : Ordering::Greater;
}

std::vector<UnitDef> UnitRegistry::units() const {
  std::shared_lock lock(mutex_);
  std::vector<UnitDef> out;
  for (const auto& [_, u] : units_) out.push_back(u);
  std::sort(out.begin(), out.end(), [](const UnitDef& a, const UnitDef& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    if (a.canonical() != b.canonical()) return a.canonical();
    return a.name < b.name;
  });
  return out;
}

std::vector<Issue> validate_qoc(const QoC& q) {
  std::vector<Issue> issues;
  if (q.accuracy && !std::isfinite(*q.accuracy)) {
    issues.push_back({Severity::Error, "InvalidQoC", "accuracy", "must be finite"});
  }
  if (q.probability && !(*q.probability >= 0.0 && *q.probability <= 1.0)) {
    issues.push_back({Severity::Error, "InvalidQoC", "probability", "must lie in [0, 1]"});
  }
  if (q.resolution && !(*q.resolution > 0.0 && std::isfinite(*q.resolution))) {
    issues.push_back({Severity::Error, "InvalidQoC", "resolution", "must be positive"});
  }
  if (q.mean_error && !(*q.mean_error >= 0.0 && std::isfinite(*q.mean_error))) {
    issues.push_back({Severity::Error, "InvalidQoC", "meanError", "must be non-negative"});
  }
  return issues;
}

}  // namespace rocom
