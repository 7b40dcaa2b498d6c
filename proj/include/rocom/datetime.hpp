#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace rocom {

/// Naive (zone-less) ISO-8601 instant with one-second resolution.
class DateTime {
 public:
  constexpr DateTime() = default;
  static constexpr DateTime from_seconds(std::int64_t s) { return DateTime(s); }

  /// Accepts `YYYY-MM-DDTHH:MM:SS` or a bare `YYYY-MM-DD`.
  /// Throws Errc::TypeMismatch when malformed.
  static DateTime parse(std::string_view text);
  static bool try_parse(std::string_view text, DateTime& out) noexcept;
  static DateTime now();

  constexpr std::int64_t seconds() const noexcept { return secs_; }

  /// Always `YYYY-MM-DDTHH:MM:SS`.
  std::string iso() const;

  friend constexpr auto operator<=>(DateTime, DateTime) = default;

 private:
  constexpr explicit DateTime(std::int64_t s) : secs_(s) {}
  std::int64_t secs_ = 0;
};

/// Seconds between two instants (b - a).
constexpr std::int64_t seconds_between(DateTime a, DateTime b) { return b.seconds() - a.seconds(); }

}  // namespace rocom
