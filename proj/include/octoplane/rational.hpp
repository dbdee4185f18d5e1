#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace octo {

/// Exact arbitrary-precision rational, always in canonical form.
///
/// Thin value wrapper around GMP's mpq_class. Every operator returns a fully
/// evaluated Rational, so no gmpxx expression template ever reaches Eigen.
/// Division by zero throws DomainError instead of aborting.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(mpz_class(std::to_string(v))) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpq_class& gmp() const { return q_; }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
  friend Rational operator+(const Rational& a) { return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" or "p/q", lowest terms.
  std::string str() const { return q_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);

/// Square root if r is the square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Parses "p", "p/q", "-p/q", decimals "1.25" and decimal exponents
/// "1.5e-3" exactly. Throws ParseError naming the text on failure.
Rational parse_rational(std::string_view text);

}  // namespace octo

namespace Eigen {

template <>
struct NumTraits<octo::Rational> : GenericNumTraits<octo::Rational> {
  using Real = octo::Rational;
  using NonInteger = octo::Rational;
  using Literal = octo::Rational;
  using Nested = octo::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16
  };
  static inline octo::Rational epsilon() { return octo::Rational(0); }
  static inline octo::Rational dummy_precision() { return octo::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
