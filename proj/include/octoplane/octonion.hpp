#pragma once

#include <Eigen/Core>
#include <array>
#include <string_view>

#include "octoplane/errors.hpp"
#include "octoplane/scalar.hpp"

namespace octo {

/// e_i * e_j = sign * e_index.
struct BasisProduct {
  int index = 0;
  int sign = 1;
  friend bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

using MultiplicationTable = std::array<std::array<BasisProduct, 8>, 8>;

/// Builds the Cayley table from e2e6 = e3e4 = e5e7 = e1, their cyclic index
/// shifts i -> i+1 (mod 7, on 1..7), e_i^2 = -1 and anticommutativity.
/// Throws DomainError if the relations ever assign two values to a product.
MultiplicationTable generate_multiplication_table();

/// The generated table, frozen at first use.
const MultiplicationTable& multiplication_table();

/// The same table written out by hand; tests require both to agree.
const MultiplicationTable& reference_multiplication_table();

/// Cayley number over the scalar backend S, in the basis 1 = e0, e1..e7.
template <ScalarBackend S>
class Octonion {
 public:
  using Scalar = S;
  using Coefficients = Eigen::Matrix<S, 8, 1>;

  Octonion() : c_(Coefficients::Constant(S(0))) {}
  Octonion(const S& real) : Octonion() { c_[0] = real; }  // NOLINT(google-explicit-constructor)
  Octonion(int real) : Octonion(S(real)) {}  // NOLINT(google-explicit-constructor)
  explicit Octonion(Coefficients c) : c_(std::move(c)) {}
  explicit Octonion(const std::array<S, 8>& c) : Octonion() {
    for (int i = 0; i < 8; ++i) c_[i] = c[i];
  }

  /// e_i (e_0 = 1).
  static Octonion unit(int i, const S& coefficient = S(1)) {
    if (i < 0 || i > 7) throw DomainError("basis index out of range");
    Octonion x;
    x.c_[i] = coefficient;
    return x;
  }

  const S& operator[](int i) const { return c_[i]; }
  S& operator[](int i) { return c_[i]; }
  const Coefficients& coeffs() const { return c_; }
  const S& real() const { return c_[0]; }

  Octonion& operator+=(const Octonion& o) { c_ += o.c_; return *this; }
  Octonion& operator-=(const Octonion& o) { c_ -= o.c_; return *this; }
  Octonion& operator*=(const S& s) { c_ *= s; return *this; }

  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(const Octonion& a) { return Octonion(Coefficients(-a.c_)); }
  friend Octonion operator*(Octonion a, const S& s) { return a *= s; }
  friend Octonion operator*(const S& s, Octonion a) { return a *= s; }
  friend Octonion operator/(const Octonion& a, const S& s) {
    if (ScalarTraits<S>::exact && s == S(0)) throw DomainError("division of octonion by zero");
    return a * (S(1) / s);
  }

  /// Bilinear product from the frozen table.
  friend Octonion operator*(const Octonion& x, const Octonion& y) {
    const auto& table = multiplication_table();
    Octonion r;
    for (int i = 0; i < 8; ++i) {
      if (x.c_[i] == S(0)) continue;
      for (int j = 0; j < 8; ++j) {
        if (y.c_[j] == S(0)) continue;
        const BasisProduct p = table[i][j];
        if (p.sign > 0) {
          r.c_[p.index] += x.c_[i] * y.c_[j];
        } else {
          r.c_[p.index] -= x.c_[i] * y.c_[j];
        }
      }
    }
    return r;
  }

  /// Coefficient-wise identity (exact even for doubles; see equal()).
  friend bool operator==(const Octonion& a, const Octonion& b) {
    for (int i = 0; i < 8; ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }

 private:
  Coefficients c_;
};

using OctonionQ = Octonion<Rational>;
using OctonionD = Octonion<double>;

template <ScalarBackend S>
Octonion<S> conj(const Octonion<S>& x) {
  Octonion<S> r = -x;
  r[0] = x[0];
  return r;
}

/// N(x) = x conj(x) = sum of squared coefficients.
template <ScalarBackend S>
S norm_sq(const Octonion<S>& x) {
  S n(0);
  for (int i = 0; i < 8; ++i) n += x[i] * x[i];
  return n;
}

/// |x|. On the exact backend only defined when N(x) is a rational square.
template <ScalarBackend S>
S modulus(const Octonion<S>& x) {
  return certified_sqrt<S>(norm_sq(x), "|x|");
}

template <ScalarBackend S>
bool is_zero(const Octonion<S>& x, double eps = kDefaultTolerance) {
  for (int i = 0; i < 8; ++i) {
    if (!ScalarTraits<S>::is_zero(x[i], eps)) return false;
  }
  return true;
}

/// x^{-1} = conj(x) / N(x). Throws on x = 0.
template <ScalarBackend S>
Octonion<S> inverse(const Octonion<S>& x) {
  const S n = norm_sq(x);
  if (n == S(0)) throw DomainError("inverse of zero octonion");
  return conj(x) * (S(1) / n);
}

/// Im(x) = (x - conj(x)) / 2.
template <ScalarBackend S>
Octonion<S> im(const Octonion<S>& x) {
  Octonion<S> r = x;
  r[0] = S(0);
  return r;
}

template <ScalarBackend S>
bool is_imaginary(const Octonion<S>& x) {
  return x[0] == S(0);
}

template <ScalarBackend S>
bool is_real(const Octonion<S>& x) {
  for (int i = 1; i < 8; ++i) {
    if (!(x[i] == S(0))) return false;
  }
  return true;
}

/// Backend-aware equality: exact on rationals, absolute tolerance on doubles.
template <ScalarBackend S>
bool equal(const Octonion<S>& a, const Octonion<S>& b, double eps = kDefaultTolerance) {
  for (int i = 0; i < 8; ++i) {
    if (!ScalarTraits<S>::equal(a[i], b[i], eps)) return false;
  }
  return true;
}

/// [x,y,z] = (xy)z - x(yz).
template <ScalarBackend S>
Octonion<S> associator(const Octonion<S>& x, const Octonion<S>& y, const Octonion<S>& z) {
  return (x * y) * z - x * (y * z);
}

/// Euclidean distance squared in R^8.
template <ScalarBackend S>
S distance_sq(const Octonion<S>& a, const Octonion<S>& b) {
  return norm_sq(a - b);
}

template <ScalarBackend T, ScalarBackend S>
Octonion<T> cast(const Octonion<S>& x) {
  Octonion<T> r;
  for (int i = 0; i < 8; ++i) {
    if constexpr (std::is_same_v<T, double> && std::is_same_v<S, Rational>) {
      r[i] = x[i].to_double();
    } else {
      r[i] = static_cast<T>(x[i]);
    }
  }
  return r;
}

}  // namespace octo
