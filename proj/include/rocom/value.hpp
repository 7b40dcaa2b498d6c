#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "rocom/datetime.hpp"

namespace rocom {

enum class ValueType { Text, Integer, Real, Boolean, DateTime };

std::string_view to_string(ValueType t);
/// Throws Errc::InvalidArgument for unknown names.
ValueType parse_value_type(std::string_view name);

/// Object of a relation fact.
struct IndividualRef {
  std::string id;
  friend auto operator<=>(const IndividualRef&, const IndividualRef&) = default;
};

using Value = std::variant<std::string, std::int64_t, double, bool, DateTime, IndividualRef>;

bool holds_type(const Value& v, ValueType t) noexcept;

/// Lexical parse of a literal for a declared type. Throws Errc::TypeMismatch.
Value parse_literal(ValueType t, std::string_view text);

/// Canonical lexical form: reals always carry a decimal point or exponent,
/// datetimes are ISO-8601, relation objects print their id.
std::string format_value(const Value& v);
std::string format_real(double x);

std::optional<double> numeric(const Value& v) noexcept;

}  // namespace rocom
