#include "rocom/value.hpp"

#include <charconv>
#include <cmath>

#include "rocom/error.hpp"

namespace rocom {

std::string_view to_string(ValueType t) {
  switch (t) {
    case ValueType::Text: return "text";
    case ValueType::Integer: return "integer";
    case ValueType::Real: return "real";
    case ValueType::Boolean: return "boolean";
    case ValueType::DateTime: return "datetime";
  }
  return "text";
}

ValueType parse_value_type(std::string_view name) {
  if (name == "text") return ValueType::Text;
  if (name == "integer") return ValueType::Integer;
  if (name == "real") return ValueType::Real;
  if (name == "boolean") return ValueType::Boolean;
  if (name == "datetime") return ValueType::DateTime;
  fail(Errc::InvalidArgument, "unknown value type '" + std::string(name) + "'");
}

bool holds_type(const Value& v, ValueType t) noexcept {
  switch (t) {
    case ValueType::Text: return std::holds_alternative<std::string>(v);
    case ValueType::Integer: return std::holds_alternative<std::int64_t>(v);
    case ValueType::Real: return std::holds_alternative<double>(v);
    case ValueType::Boolean: return std::holds_alternative<bool>(v);
    case ValueType::DateTime: return std::holds_alternative<DateTime>(v);
  }
  return false;
}

namespace {

[[noreturn]] void mismatch(ValueType t, std::string_view text) {
  fail(Errc::TypeMismatch, "'" + std::string(text) + "' is not a valid " + std::string(to_string(t)));
}

}  // namespace

Value parse_literal(ValueType t, std::string_view text) {
  switch (t) {
    case ValueType::Text:
      return std::string(text);
    case ValueType::Integer: {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) mismatch(t, text);
      return v;
    }
    case ValueType::Real: {
      double v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
        mismatch(t, text);
      }
      return v;
    }
    case ValueType::Boolean:
      if (text == "true") return true;
      if (text == "false") return false;
      mismatch(t, text);
    case ValueType::DateTime: {
      DateTime dt;
      if (!DateTime::try_parse(text, dt)) mismatch(t, text);
      return dt;
    }
  }
  mismatch(t, text);
}

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string out(buf, ptr);
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

std::string format_value(const Value& v) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_real(d); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(DateTime dt) const { return dt.iso(); }
    std::string operator()(const IndividualRef& r) const { return r.id; }
  };
  return std::visit(Visitor{}, v);
}

std::optional<double> numeric(const Value& v) noexcept {
  if (auto d = std::get_if<double>(&v)) return *d;
  if (auto i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  return std::nullopt;
}

}  // namespace rocom
