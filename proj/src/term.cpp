#include "rocom/term.hpp"

#include "rocom/error.hpp"

namespace rocom {

namespace {

bool lower(char c) { return c >= 'a' && c <= 'z'; }
bool upper(char c) { return c >= 'A' && c <= 'Z'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

bool valid_ns(std::string_view s) {
  if (s.empty() || !lower(s.front())) return false;
  for (char c : s) {
    if (!lower(c) && !digit(c)) return false;
  }
  return true;
}

bool valid_local(std::string_view s) {
  if (s.empty() || !(lower(s.front()) || upper(s.front()))) return false;
  for (char c : s) {
    if (!lower(c) && !upper(c) && !digit(c)) return false;
  }
  return true;
}

}  // namespace

bool TermName::valid(std::string_view text) noexcept {
  auto hash = text.find('#');
  if (hash == std::string_view::npos) {
    return valid_ns(text);
  }
  return valid_ns(text.substr(0, hash)) && valid_local(text.substr(hash + 1));
}

TermName TermName::parse(std::string_view text) {
  if (!valid(text)) {
    fail(Errc::InvalidTerm, "malformed term '" + std::string(text) + "'");
  }
  auto hash = text.find('#');
  if (hash == std::string_view::npos) {
    return TermName(std::string(text), std::string(text));
  }
  return TermName(std::string(text.substr(0, hash)), std::string(text.substr(hash + 1)));
}

std::string TermName::str() const {
  if (ns_ == local_) return local_;
  return ns_ + "#" + local_;
}

bool valid_identifier(std::string_view id) noexcept {
  if (id.empty()) return false;
  char f = id.front();
  if (!(lower(f) || upper(f) || f == '_')) return false;
  for (char c : id) {
    if (!(lower(c) || upper(c) || digit(c) || c == '_' || c == '.' || c == '-')) return false;
  }
  return true;
}

}  // namespace rocom
