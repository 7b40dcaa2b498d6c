#include "rocom/datetime.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

#include "rocom/error.hpp"

namespace rocom {

namespace {

// Proleptic Gregorian day count relative to 1970-01-01.
constexpr std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Civil {
  std::int64_t y;
  unsigned m;
  unsigned d;
};

constexpr Civil civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const auto doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  return {y + (m <= 2), m, d};
}

constexpr bool leap(std::int64_t y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

constexpr unsigned month_days(std::int64_t y, unsigned m) {
  constexpr unsigned table[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && leap(y) ? 29 : table[m - 1];
}

bool read_fixed(std::string_view text, std::size_t pos, std::size_t len, unsigned& out) {
  if (pos + len > text.size()) return false;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, out);
  return ec == std::errc{};
}

}  // namespace

bool DateTime::try_parse(std::string_view text, DateTime& out) noexcept {
  unsigned y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  if (text.size() != 10 && text.size() != 19) return false;
  if (!read_fixed(text, 0, 4, y) || text[4] != '-' || !read_fixed(text, 5, 2, mo) || text[7] != '-' ||
      !read_fixed(text, 8, 2, d)) {
    return false;
  }
  if (text.size() == 19) {
    if (text[10] != 'T' || !read_fixed(text, 11, 2, h) || text[13] != ':' || !read_fixed(text, 14, 2, mi) ||
        text[16] != ':' || !read_fixed(text, 17, 2, s)) {
      return false;
    }
  }
  if (mo < 1 || mo > 12 || d < 1 || d > month_days(y, mo) || h > 23 || mi > 59 || s > 59) return false;
  out = DateTime(days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + s);
  return true;
}

DateTime DateTime::parse(std::string_view text) {
  DateTime out;
  if (!try_parse(text, out)) {
    fail(Errc::TypeMismatch, "malformed datetime '" + std::string(text) + "'");
  }
  return out;
}

DateTime DateTime::now() {
  auto since = std::chrono::system_clock::now().time_since_epoch();
  return DateTime(std::chrono::duration_cast<std::chrono::seconds>(since).count());
}

std::string DateTime::iso() const {
  std::int64_t days = secs_ >= 0 ? secs_ / 86400 : (secs_ - 86399) / 86400;
  std::int64_t rem = secs_ - days * 86400;
  Civil c = civil_from_days(days);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lld", static_cast<long long>(c.y), c.m, c.d,
                static_cast<long long>(rem / 3600), static_cast<long long>(rem / 60 % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

}  // namespace rocom
