#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rocom/datetime.hpp"
#include "rocom/value.hpp"

namespace rocom {

/// Quality-of-context annotations. Every field is optional.
struct QoC {
  std::optional<double> accuracy;
  std::optional<double> probability;  // [0, 1]
  std::optional<std::string> coverage;
  std::optional<double> resolution;  // > 0
  std::optional<double> mean_error;  // >= 0
  std::optional<std::string> recurrence;

  bool operator==(const QoC&) const = default;
};

/// A value with its fine-grained timestamp, encoding unit, quality and source.
struct AnnotatedValue {
  Value value;
  DateTime timestamp;
  std::optional<std::string> unit;
  QoC qoc;
  std::optional<std::string> source;

  bool operator==(const AnnotatedValue&) const = default;
};

enum class Severity { Warning, Error };

struct Issue {
  Severity severity = Severity::Error;
  std::string kind;     // e.g. "DomainRangeMismatch"
  std::string subject;  // term, field or record the issue is about
  std::string message;
};

std::string format_issue(const Issue& issue);

}  // namespace rocom
