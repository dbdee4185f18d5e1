#include "octoplane/rational.hpp"

#include <cctype>

#include "octoplane/errors.hpp"

namespace octo {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class num = r.numerator();
  const mpz_class den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class sn;
  mpz_class sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(sn, sd));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ten_pow(unsigned long n) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, n);
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return fail();

  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    const mpz_class d{std::string(den), 10};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = mpq_class(mpz_class{std::string(num), 10}, d);
  } else {
    // decimal: digits [. digits] [(e|E) [+-] digits]
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      std::string_view ex = s.substr(e + 1);
      bool neg_exp = false;
      if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
        neg_exp = ex.front() == '-';
        ex.remove_prefix(1);
      }
      if (!all_digits(ex) || ex.size() > 6) return fail();
      exponent = std::stol(std::string(ex));
      if (neg_exp) exponent = -exponent;
    }
    std::string digits;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      const auto int_part = mantissa.substr(0, dot);
      const auto frac_part = mantissa.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) return fail();
      if ((!int_part.empty() && !all_digits(int_part)) ||
          (!frac_part.empty() && !all_digits(frac_part))) {
        return fail();
      }
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      if (!all_digits(mantissa)) return fail();
      digits = std::string(mantissa);
    }
    const mpz_class n{digits.empty() ? std::string("0") : digits, 10};
    if (exponent >= 0) {
      value = mpq_class(n * ten_pow(static_cast<unsigned long>(exponent)));
    } else {
      value = mpq_class(n, ten_pow(static_cast<unsigned long>(-exponent)));
    }
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(value);
}

}  // namespace octo
