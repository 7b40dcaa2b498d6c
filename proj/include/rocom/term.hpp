#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace rocom {

/// Ontology term written `namespace#local`. A bare `local` is shorthand for
/// `local#local`, mirroring the `&person;person` convention.
class TermName {
 public:
  TermName() = default;

  /// Throws Errc::InvalidTerm on malformed input.
  static TermName parse(std::string_view text);
  static bool valid(std::string_view text) noexcept;

  const std::string& ns() const noexcept { return ns_; }
  const std::string& local() const noexcept { return local_; }
  bool empty() const noexcept { return local_.empty(); }

  /// Compact spelling: `local` when the namespace equals it.
  std::string str() const;

  friend auto operator<=>(const TermName&, const TermName&) = default;
  friend bool operator==(const TermName&, const TermName&) = default;

 private:
  TermName(std::string ns, std::string local) : ns_(std::move(ns)), local_(std::move(local)) {}

  std::string ns_;
  std::string local_;
};

/// Individual identifiers: `[A-Za-z_][A-Za-z0-9_.-]*`.
bool valid_identifier(std::string_view id) noexcept;

/// Actor placeholder for engine-originated changes.
inline constexpr std::string_view kSystemActor = "SYSTEM";

}  // namespace rocom

template <>
struct std::hash<rocom::TermName> {
  std::size_t operator()(const rocom::TermName& t) const noexcept {
    return std::hash<std::string>{}(t.ns()) * 31 ^ std::hash<std::string>{}(t.local());
  }
};
