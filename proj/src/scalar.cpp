#include "octoplane/scalar.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>

#include "octoplane/errors.hpp"

namespace octo {

std::string ScalarTraits<double>::str(double a) {
  if (a == 0.0) return "0";  // also folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

double ScalarTraits<double>::parse(std::string_view s) {
  const std::string text(s);
  if (auto slash = text.find('/'); slash != std::string::npos) {
    // Exact parse first so "1/3" becomes the nearest double to 1/3.
    return parse_rational(text).to_double();
  }
  if (text.empty()) throw ParseError("empty scalar");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == ERANGE || text.find_first_of("xXnNiI") != std::string::npos) {
    throw ParseError("malformed scalar '" + text + "'");
  }
  return v;
}

template <>
Rational certified_sqrt<Rational>(const Rational& a, std::string_view what) {
  if (auto r = exact_sqrt(a)) return *r;
  throw InexactError(std::string(what) + " = sqrt(" + a.str() + ") is not rational");
}

template <>
double certified_sqrt<double>(const double& a, std::string_view what) {
  if (a < 0.0) throw DomainError(std::string(what) + ": square root of negative value");
  return std::sqrt(a);
}

}  // namespace octo
