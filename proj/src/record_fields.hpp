#pragma once

// Typed access to the raw fields of a document record.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "rocom/document.hpp"

namespace rocom::detail {

[[noreturn]] inline void syntax(TextPos pos, const std::string& message) {
  throw Error(Errc::SyntaxError, message, pos);
}

class Fields {
 public:
  Fields(const Record& r, std::initializer_list<const char*> allowed)
      : Fields(r, std::vector<std::string>(allowed.begin(), allowed.end())) {}

  /// Rejects the leftmost field not in `allowed`, pointing at its name.
  Fields(const Record& r, const std::vector<std::string>& allowed) : r_(r) {
    const std::string* bad = nullptr;
    TextPos at;
    for (const auto& [k, v] : r.fields) {
      if (std::find(allowed.begin(), allowed.end(), k) != allowed.end()) continue;
      TextPos key_pos{v.pos.line, v.pos.column - k.size() - 1};
      if (!bad || key_pos.column < at.column) {
        bad = &k;
        at = key_pos;
      }
    }
    if (bad) syntax(at, "unknown field '" + *bad + "'");
  }

  const Record& record() const { return r_; }

  const FieldValue* get(const char* key) const { return r_.find(key); }

  const FieldValue& need(const char* key) const {
    auto* v = r_.find(key);
    if (!v) syntax(r_.pos, std::string("missing field '") + key + "'");
    return *v;
  }

  std::string scalar(const FieldValue& v) const {
    if (v.is_list) syntax(v.pos, "expected a single value, got a list");
    return v.scalar;
  }

  std::string text(const char* key) const { return scalar(need(key)); }

  std::optional<std::string> opt_text(const char* key) const {
    auto* v = get(key);
    if (!v) return std::nullopt;
    return scalar(*v);
  }

  std::vector<std::string> list(const char* key) const {
    auto* v = get(key);
    if (!v) return {};
    if (v->is_list) return v->items;
    return {v->scalar};
  }

  static TermName term_at(const std::string& s, TextPos pos) {
    if (!TermName::valid(s)) syntax(pos, "malformed term '" + s + "'");
    return TermName::parse(s);
  }

  TermName term(const char* key) const {
    const auto& v = need(key);
    return term_at(scalar(v), v.pos);
  }

  std::optional<TermName> opt_term(const char* key) const {
    auto* v = get(key);
    if (!v) return std::nullopt;
    return term_at(scalar(*v), v->pos);
  }

  std::vector<TermName> terms(const char* key) const {
    std::vector<TermName> out;
    auto* v = get(key);
    for (const auto& s : list(key)) out.push_back(term_at(s, v->pos));
    return out;
  }

  static std::string ident(const std::string& s, TextPos pos) {
    if (!valid_identifier(s)) syntax(pos, "malformed identifier '" + s + "'");
    return s;
  }

  std::optional<std::string> opt_ident(const char* key) const {
    auto* v = get(key);
    if (!v) return std::nullopt;
    return ident(scalar(*v), v->pos);
  }

  std::vector<std::string> idents(const char* key) const {
    std::vector<std::string> out;
    auto* v = get(key);
    for (const auto& s : list(key)) out.push_back(ident(s, v->pos));
    return out;
  }

  static double number_at(const std::string& s, TextPos pos) {
    auto parse = [&](std::string_view t) {
      double d = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), d);
      if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(d)) {
        syntax(pos, "malformed number '" + s + "'");
      }
      return d;
    };
    // Rational shorthand such as 5/9 keeps bundled tables readable.
    if (auto slash = s.find('/'); slash != std::string::npos) {
      double den = parse(std::string_view(s).substr(slash + 1));
      if (den == 0.0) syntax(pos, "division by zero in '" + s + "'");
      return parse(std::string_view(s).substr(0, slash)) / den;
    }
    return parse(s);
  }

  std::optional<double> opt_number(const char* key) const {
    auto* v = get(key);
    if (!v) return std::nullopt;
    return number_at(scalar(*v), v->pos);
  }

  bool flag(const char* key, bool fallback = false) const {
    auto* v = get(key);
    if (!v) return fallback;
    auto s = scalar(*v);
    if (s == "true") return true;
    if (s == "false") return false;
    syntax(v->pos, "expected true or false");
  }

  std::optional<DateTime> opt_time(const char* key) const {
    auto* v = get(key);
    if (!v) return std::nullopt;
    DateTime dt;
    if (!DateTime::try_parse(scalar(*v), dt)) syntax(v->pos, "malformed datetime '" + v->scalar + "'");
    return dt;
  }

  DateTime time(const char* key) const {
    need(key);
    return *opt_time(key);
  }

  static std::uint64_t integer_at(const std::string& s, TextPos pos) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || out == 0) {
      syntax(pos, "expected a positive integer, got '" + s + "'");
    }
    return out;
  }

 private:
  const Record& r_;
};

template <typename Enum, typename Parse>
inline Enum enum_field(const Fields& f, const char* key, Enum fallback, Parse parse) {
  auto* v = f.get(key);
  if (!v) return fallback;
  try {
    return parse(f.scalar(*v));
  } catch (const Error& e) {
    syntax(v->pos, e.detail());
  }
}

}  // namespace rocom::detail
