#pragma once

#include <cmath>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include "octoplane/rational.hpp"

namespace octo {

/// Default absolute tolerance of the binary64 backend.
inline constexpr double kDefaultTolerance = 1e-12;

template <class S>
struct ScalarTraits;

/// Exact backend. Every comparison is equality of canonical rationals.
template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "rational";

  static Rational from_ratio(long num, long den) { return Rational(num, den); }
  static bool equal(const Rational& a, const Rational& b, double = 0.0) { return a == b; }
  static bool is_zero(const Rational& a, double = 0.0) { return a.is_zero(); }
  static bool is_positive(const Rational& a) { return a.sign() > 0; }
  /// Root only when certified rational.
  static std::optional<Rational> sqrt(const Rational& a) { return exact_sqrt(a); }
  static double to_double(const Rational& a) { return a.to_double(); }
  static std::string str(const Rational& a) { return a.str(); }
  static Rational parse(std::string_view s) { return parse_rational(s); }
  static Rational abs(const Rational& a) { return octo::abs(a); }
};

/// Floating backend. Comparisons use an absolute tolerance.
template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "float";

  static double from_ratio(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static bool equal(double a, double b, double eps = kDefaultTolerance) {
    return std::abs(a - b) <= eps;
  }
  static bool is_zero(double a, double eps = kDefaultTolerance) { return std::abs(a) <= eps; }
  static bool is_positive(double a) { return a > 0.0; }
  static std::optional<double> sqrt(double a) {
    if (a < 0.0) return std::nullopt;
    return std::sqrt(a);
  }
  static double to_double(double a) { return a; }
  /// 17 significant digits, enough to round-trip any binary64.
  static std::string str(double a);
  static double parse(std::string_view s);
  static double abs(double a) { return std::abs(a); }
};

template <class S>
concept ScalarBackend = requires(const S& a, const S& b) {
  { ScalarTraits<S>::exact } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a < b } -> std::convertible_to<bool>;
};

template <ScalarBackend S>
S ratio(long num, long den) {
  return ScalarTraits<S>::from_ratio(num, den);
}

/// Square root, exact when S is exact; throws InexactError when the
/// argument is not a rational square on the exact backend.
template <ScalarBackend S>
S certified_sqrt(const S& a, std::string_view what);

}  // namespace octo
