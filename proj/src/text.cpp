#include "octoplane/text.hpp"

namespace octo {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

bool strip_enclosing(std::string_view& s, char open, char close) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == open) ++depth;
    if (s[i] == close) --depth;
    if (depth == 0 && i + 1 < s.size()) return false;  // "(a)(b)"
  }
  s = s.substr(1, s.size() - 2);
  return true;
}

namespace detail {

std::string_view scan_number(std::string_view s, std::size_t& pos) {
  const std::size_t start = pos;
  auto digit = [&](std::size_t i) {
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  };
  while (digit(pos) || (pos < s.size() && s[pos] == '.')) ++pos;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    while (digit(pos)) ++pos;
  } else if (pos + 1 < s.size() && (s[pos] == 'e' || s[pos] == 'E') &&
             (s[pos + 1] == '+' || s[pos + 1] == '-') && digit(pos + 2)) {
    pos += 2;
    while (digit(pos)) ++pos;
  } else if (pos < s.size() && s[pos] == 'E' && digit(pos + 1)) {
    ++pos;
    while (digit(pos)) ++pos;
  }
  return s.substr(start, pos - start);
}

}  // namespace detail

}  // namespace octo
