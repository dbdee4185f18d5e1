#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "octoplane/octonion.hpp"

namespace octo {

std::string_view trim(std::string_view s);

/// Splits on `sep` at bracket depth 0, counting (), [] and {}.
std::vector<std::string_view> split_top_level(std::string_view s, char sep);

/// Strips one enclosing open/close pair; returns false if absent or unbalanced.
bool strip_enclosing(std::string_view& s, char open, char close);

/// Text form `a0 + a1 e1 + ... + a7 e7`, zero terms omitted, unit
/// coefficients elided ("1 + e1"), "0" for zero.
template <ScalarBackend S>
std::string format_octonion(const Octonion<S>& x) {
  std::string out;
  for (int i = 0; i < 8; ++i) {
    const S& c = x[i];
    if (c == S(0)) continue;
    const bool negative = c < S(0);
    const S mag = ScalarTraits<S>::abs(c);
    std::string body;
    if (i == 0) {
      body = ScalarTraits<S>::str(mag);
    } else if (mag == S(1)) {
      body = "e" + std::to_string(i);
    } else {
      body = ScalarTraits<S>::str(mag) + " e" + std::to_string(i);
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

/// Compact form: eight comma-separated scalars.
template <ScalarBackend S>
std::string format_octonion_compact(const Octonion<S>& x) {
  std::string out;
  for (int i = 0; i < 8; ++i) {
    if (i) out += ",";
    out += ScalarTraits<S>::str(x[i]);
  }
  return out;
}

namespace detail {

/// Scans one scalar token starting at pos; returns its text.
std::string_view scan_number(std::string_view s, std::size_t& pos);

}  // namespace detail

/// Parses the text form. Accepts "2 e3", "2*e3", "2e3" (unit, not exponent),
/// "1.5e-3" (exponent), "-e1", "e0". Throws ParseError naming the token.
template <ScalarBackend S>
Octonion<S> parse_octonion(std::string_view text) {
  const std::string_view s = trim(text);
  auto fail = [&](std::size_t at, std::string_view why) -> Octonion<S> {
    std::string token(s.substr(at, 1));
    if (at >= s.size()) token = "<end>";
    throw ParseError(std::string(why) + " at '" + token + "' in octonion literal '" +
                     std::string(text) + "'");
  };
  if (s.empty()) return fail(0, "empty literal");

  Octonion<S> result;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  bool first = true;
  while (true) {
    skip_ws();
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      negative = s[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      return fail(pos, "expected '+' or '-'");
    }
    first = false;

    S coefficient(1);
    bool have_number = false;
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
      const std::size_t start = pos;
      const std::string_view tok = detail::scan_number(s, pos);
      try {
        coefficient = ScalarTraits<S>::parse(tok);
      } catch (const ParseError&) {
        return fail(start, "malformed number '" + std::string(tok) + "'");
      }
      have_number = true;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_ws();
        if (pos >= s.size() || s[pos] != 'e') return fail(pos, "expected basis unit after '*'");
      }
    }
    int index = 0;
    if (pos < s.size() && s[pos] == 'e') {
      if (pos + 1 >= s.size() || s[pos + 1] < '0' || s[pos + 1] > '7') {
        return fail(pos, "expected basis unit e0..e7");
      }
      index = s[pos + 1] - '0';
      pos += 2;
      if (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) {
        return fail(pos, "unexpected character");
      }
    } else if (!have_number) {
      return fail(pos, "expected number or basis unit");
    }
    result[index] += negative ? -coefficient : coefficient;
    skip_ws();
    if (pos >= s.size()) break;
  }
  return result;
}

template <ScalarBackend S>
Octonion<S> parse_octonion_compact(std::string_view text) {
  const auto parts = split_top_level(trim(text), ',');
  if (parts.size() != 8) {
    throw ParseError("compact octonion needs 8 comma-separated scalars, got " +
                     std::to_string(parts.size()) + " in '" + std::string(text) + "'");
  }
  Octonion<S> x;
  for (int i = 0; i < 8; ++i) {
    const auto tok = trim(parts[static_cast<std::size_t>(i)]);
    try {
      x[i] = ScalarTraits<S>::parse(tok);
    } catch (const ParseError&) {
      throw ParseError("malformed scalar '" + std::string(tok) + "' in compact octonion '" +
                       std::string(text) + "'");
    }
  }
  return x;
}

template <ScalarBackend S>
S parse_scalar(std::string_view text) {
  const auto t = trim(text);
  try {
    return ScalarTraits<S>::parse(t);
  } catch (const ParseError&) {
    throw ParseError("malformed scalar '" + std::string(t) + "'");
  }
}

}  // namespace octo
