#pragma once

#include <cmath>
#include <string>

#include "octoplane/cayley_dickson.hpp"
#include "octoplane/geometry.hpp"
#include "octoplane/triality.hpp"

namespace octo {

/// a_t in the split torus A, parametrized by lambda = e^t > 0 so that
/// cosh t = (lambda + 1/lambda)/2 and sinh t = (lambda - 1/lambda)/2 stay rational.
template <ScalarBackend S>
class AElement {
 public:
  AElement() : lambda_(S(1)) {}
  explicit AElement(S lambda) : lambda_(std::move(lambda)) {
    if (!ScalarTraits<S>::is_positive(lambda_)) {
      throw DomainError("A element needs lambda > 0, got " + ScalarTraits<S>::str(lambda_));
    }
  }
  /// a_t for real t (float backend only).
  static AElement from_t(double t) requires(!ScalarTraits<S>::exact) { return AElement(std::exp(t)); }

  const S& lambda() const { return lambda_; }
  S cosh() const { return (lambda_ + S(1) / lambda_) / S(2); }
  S sinh() const { return (lambda_ - S(1) / lambda_) / S(2); }

  AElement inverse() const { return AElement(S(1) / lambda_); }
  friend AElement operator*(const AElement& a, const AElement& b) { return AElement(a.lambda_ * b.lambda_); }
  friend bool operator==(const AElement&, const AElement&) = default;

 private:
  S lambda_;
};

/// u(y, z) in N, y imaginary.
template <ScalarBackend S>
class NElement {
 public:
  NElement() = default;
  NElement(Octonion<S> y, Octonion<S> z) : y_(std::move(y)), z_(std::move(z)) {
    if (!is_imaginary(y_)) {
      throw DomainError("N element needs imaginary y, got " + format_octonion(y_));
    }
  }

  const Octonion<S>& y() const { return y_; }
  const Octonion<S>& z() const { return z_; }
  bool central() const { return z_ == Octonion<S>(); }

  friend bool operator==(const NElement&, const NElement&) = default;

 private:
  Octonion<S> y_;
  Octonion<S> z_;
};

/// Element of M = Stab_K(1,0), given by a triality word with R''(1) = 1.
template <ScalarBackend S>
class MElement {
 public:
  MElement() = default;
  explicit MElement(SpinWord<S> word) : word_(std::move(word)) {
    if (!is_unital(word_)) {
      throw DomainError("M element needs a normalized word (R''(1) = 1); got R''(1) = " +
                        format_octonion(eval_Rpp(word_, Octonion<S>(1))));
    }
  }
  const SpinWord<S>& word() const { return word_; }
  friend bool operator==(const MElement&, const MElement&) = default;

 private:
  SpinWord<S> word_;
};

/// (t0, y0, z0) with p = a_{t0} u(y0, z0) (0,0), lambda0 = e^{t0}.
template <ScalarBackend S>
struct ANCoordinates {
  S lambda0;
  Octonion<S> y0;
  Octonion<S> z0;
  S r_sq;  ///< 1 - N(x1) - N(x2)
};

namespace detail {

template <ScalarBackend S>
Octonion<S> checked_inverse(const Octonion<S>& d, const char* what) {
  if (ScalarTraits<S>::is_zero(norm_sq(d), 0.0)) {
    throw DomainError(std::string("vanishing denominator ") + what);
  }
  return inverse(d);
}

template <ScalarBackend S>
HPoint<S> to_ball(const FinitePoint<S>& p, const char* action) {
  if (!in_ball(p.x, p.y)) {
    throw DomainError(std::string(action) + " left the ball at " + format_point(p));
  }
  return HPoint<S>(p);
}

}  // namespace detail

// ---- A ---------------------------------------------------------------------

/// sinh(t) x1 + cosh(t).
template <ScalarBackend S>
Octonion<S> a_denominator(const AElement<S>& a, const FinitePoint<S>& p) {
  return a.sinh() * p.x + Octonion<S>(a.cosh());
}

/// Möbius action of a_t on any finite point where it is defined:
/// ((cosh x1 + sinh)(sinh x1 + cosh)^{-1}, x2 (sinh x1 + cosh)^{-1}).
template <ScalarBackend S>
FinitePoint<S> a_apply(const AElement<S>& a, const FinitePoint<S>& p) {
  const Octonion<S> dinv = detail::checked_inverse(a_denominator(a, p), "sinh(t) x1 + cosh(t)");
  const Octonion<S> num = a.cosh() * p.x + Octonion<S>(a.sinh());
  return {num * dinv, p.y * dinv};
}

template <ScalarBackend S>
HPoint<S> a_act(const AElement<S>& a, const HPoint<S>& p) {
  return detail::to_ball(a_apply(a, p.point()), "a_act");
}

// ---- N ---------------------------------------------------------------------

namespace detail {

/// Shared pieces of the N action: w = 1 - conj(x1), T = (conj(z)(x2 w)) w^{-1},
/// h = |z|^2/2.
template <ScalarBackend S>
struct NTerms {
  Octonion<S> w;
  Octonion<S> t;
  Octonion<S> h;
};

template <ScalarBackend S>
NTerms<S> n_terms(const NElement<S>& n, const FinitePoint<S>& p) {
  const Octonion<S> one(1);
  const Octonion<S> w = one - conj(p.x);
  const Octonion<S> winv = checked_inverse(w, "1 - conj(x1) (x1 = 1 is not allowed)");
  const Octonion<S> t = (conj(n.z()) * (p.y * w)) * winv;
  return {w, t, Octonion<S>(norm_sq(n.z()) / S(2))};
}

}  // namespace detail

/// D = [-(|z|^2/2 + y) x1 + (conj(z)(x2(1 - conj(x1))))(1 - conj(x1))^{-1}
///      + 1 + |z|^2/2 + y] (1 - conj(x1)).
template <ScalarBackend S>
Octonion<S> n_denominator(const NElement<S>& n, const FinitePoint<S>& p) {
  const auto k = detail::n_terms(n, p);
  const Octonion<S> hy = k.h + n.y();
  return ((-(hy * p.x) + k.t) + Octonion<S>(1) + hy) * k.w;
}

/// u(y,z)(x1,x2) with the bracketing of the explicit N-action formulas:
///   x1' = [((1 - |z|^2/2 - y) x1 + T + |z|^2/2 + y)(1 - conj(x1))] D^{-1}
///   x2' = [(-z x1 + x2 + z)(1 - conj(x1))] D^{-1}
/// where T = (conj(z)(x2(1 - conj(x1))))(1 - conj(x1))^{-1}. Defined wherever
/// x1 != 1 and D != 0, which includes the whole ball.
template <ScalarBackend S>
FinitePoint<S> n_apply(const NElement<S>& n, const FinitePoint<S>& p) {
  const auto k = detail::n_terms(n, p);
  const Octonion<S> one(1);
  const Octonion<S> hy = k.h + n.y();
  const Octonion<S> d = ((-(hy * p.x) + k.t) + one + hy) * k.w;
  const Octonion<S> dinv = detail::checked_inverse(d, "D of the N action");
  const Octonion<S> num1 = ((((one - k.h) - n.y()) * p.x + k.t) + hy) * k.w;
  const Octonion<S> num2 = ((-(n.z() * p.x) + p.y) + n.z()) * k.w;
  return {num1 * dinv, num2 * dinv};
}

template <ScalarBackend S>
HPoint<S> n_act(const NElement<S>& n, const HPoint<S>& p) {
  return detail::to_ball(n_apply(n, p.point()), "n_act");
}

/// Center Z(N): u(y,0)(x1,x2) in its Möbius form
///   x1' = ((1 - y) x1 + y)(-y x1 + 1 + y)^{-1}
///   x2' = (x2(1 - conj(x1)))[(1 - conj(x1))^{-1} (-y x1 + 1 + y)^{-1}]
template <ScalarBackend S>
FinitePoint<S> z_apply(const Octonion<S>& y, const FinitePoint<S>& p) {
  if (!is_imaginary(y)) throw DomainError("center element needs imaginary y, got " + format_octonion(y));
  const Octonion<S> one(1);
  const Octonion<S> den = (-(y * p.x) + one) + y;
  const Octonion<S> dinv = detail::checked_inverse(den, "-y x1 + 1 + y");
  const Octonion<S> w = one - conj(p.x);
  const Octonion<S> winv = detail::checked_inverse(w, "1 - conj(x1) (x1 = 1 is not allowed)");
  const Octonion<S> x1 = ((one - y) * p.x + y) * dinv;
  const Octonion<S> x2 = (p.y * w) * (winv * dinv);
  return {x1, x2};
}

template <ScalarBackend S>
HPoint<S> z_act(const Octonion<S>& y, const HPoint<S>& p) {
  return detail::to_ball(z_apply(y, p.point()), "z_act");
}

/// u(y1,z1) u(y2,z2) = u(y1 + y2 + Im(conj(z1) z2), z1 + z2).
template <ScalarBackend S>
NElement<S> n_compose(const NElement<S>& n1, const NElement<S>& n2) {
  return NElement<S>(n1.y() + n2.y() + im(conj(n1.z()) * n2.z()), n1.z() + n2.z());
}

/// u(y,z)^{-1} = u(-y,-z); the Im(conj(z)(-z)) correction vanishes.
template <ScalarBackend S>
NElement<S> n_inverse(const NElement<S>& n) {
  return NElement<S>(-n.y(), -n.z());
}

/// a_t u(y,z) a_{-t} = u(e^{2t} y, e^t z).
template <ScalarBackend S>
NElement<S> a_conj_n(const AElement<S>& a, const NElement<S>& n) {
  const S& l = a.lambda();
  return NElement<S>(n.y() * (l * l), n.z() * l);
}

/// a_t u(y,z)(0,0) in closed form, E = e^t (|z|^2/2 + y):
///   x1 = (sinh t + E)(cosh t + E)^{-1},  x2 = z (cosh t + E)^{-1}
template <ScalarBackend S>
HPoint<S> orbit_origin(const AElement<S>& a, const NElement<S>& n) {
  const Octonion<S> e = (Octonion<S>(norm_sq(n.z()) / S(2)) + n.y()) * a.lambda();
  const Octonion<S> dinv = detail::checked_inverse(Octonion<S>(a.cosh()) + e, "cosh t + E");
  return detail::to_ball(FinitePoint<S>{(Octonion<S>(a.sinh()) + e) * dinv, n.z() * dinv}, "orbit_origin");
}

/// AN-coordinates of a ball point:
///   e^{-t0} = |1 - x1| / r,  y0 = (x1 - conj(x1)) / (2 r^2),
///   z0 = x2(1 - conj(x1)) / (|1 - x1| r),  r^2 = 1 - N(x1) - N(x2).
/// Roots are taken as lambda0 = sqrt(r^2 / N(1 - x1)) and
/// |1 - x1| r = sqrt(N(1 - x1) r^2); on the rational backend both must be
/// rational squares or InexactError is thrown.
template <ScalarBackend S>
ANCoordinates<S> an_coords(const HPoint<S>& p) {
  const Octonion<S> one(1);
  const S r_sq = p.r_sq();
  const S n1 = norm_sq(one - p.x1());
  const S lambda0 = certified_sqrt<S>(r_sq / n1, "e^{t0}");
  const S scale = certified_sqrt<S>(n1 * r_sq, "|1 - x1| r");
  const Octonion<S> y0 = (p.x1() - conj(p.x1())) / (S(2) * r_sq);
  const Octonion<S> z0 = (p.x2() * (one - conj(p.x1()))) / scale;
  return {lambda0, y0, z0, r_sq};
}

// ---- M ---------------------------------------------------------------------

template <ScalarBackend S>
FinitePoint<S> m_apply(const MElement<S>& m, const FinitePoint<S>& p) {
  return k_fixing_infinities_act(m.word(), p);
}

template <ScalarBackend S>
HPoint<S> m_act(const MElement<S>& m, const HPoint<S>& p) {
  return detail::to_ball(m_apply(m, p.point()), "m_act");
}

template <ScalarBackend S>
SpherePoint<S> m_act(const MElement<S>& m, const SpherePoint<S>& p) {
  const FinitePoint<S> q = m_apply(m, p.point());
  return SpherePoint<S>(q.x, q.y);
}

// ---- quaternionic reduction -------------------------------------------------

template <ScalarBackend S>
struct QuaternionPoint {
  CDElement<S> x1;
  CDElement<S> x2;
  friend bool operator==(const QuaternionPoint&, const QuaternionPoint&) = default;
};

namespace detail {

template <ScalarBackend S>
CDElement<S> require_quaternion(const CDElement<S>& q, const char* name) {
  if (static_cast<int>(q.level()) > static_cast<int>(AlgebraLevel::Quaternion)) {
    bool nonzero_tail = false;
    for (int i = 4; i < 8; ++i) nonzero_tail = nonzero_tail || !(q[i] == S(0));
    if (nonzero_tail) throw DomainError(std::string(name) + " is not quaternionic");
  }
  CDElement<S> r(AlgebraLevel::Quaternion, {q[0], q[1], q[2], q[3]});
  return r;
}

}  // namespace detail

/// N action over H, where associativity collapses the octonionic brackets:
///   x1' = ((1 - |z|^2/2 - y) x1 + conj(z) x2 + |z|^2/2 + y) Q^{-1}
///   x2' = (-z x1 + x2 + z) Q^{-1}
///   Q   = -(|z|^2/2 + y) x1 + conj(z) x2 + 1 + |z|^2/2 + y
/// Arithmetic is done in the Cayley-Dickson quaternions.
template <ScalarBackend S>
QuaternionPoint<S> quaternion_n_act(const CDElement<S>& y_in, const CDElement<S>& z_in,
                                    const QuaternionPoint<S>& p) {
  const CDElement<S> y = detail::require_quaternion(y_in, "y");
  const CDElement<S> z = detail::require_quaternion(z_in, "z");
  const CDElement<S> x1 = detail::require_quaternion(p.x1, "x1");
  const CDElement<S> x2 = detail::require_quaternion(p.x2, "x2");
  if (!(y[0] == S(0))) throw DomainError("y must be an imaginary quaternion");
  if (!(norm_sq(x1) + norm_sq(x2) < S(1))) throw DomainError("quaternionic point not in the ball");

  const CDElement<S> one(AlgebraLevel::Quaternion, {S(1)});
  const CDElement<S> h(AlgebraLevel::Quaternion, {norm_sq(z) / S(2)});
  const CDElement<S> zx2 = conj(z) * x2;
  const CDElement<S> q = -((h + y) * x1) + zx2 + one + h + y;
  if (norm_sq(q) == S(0)) throw DomainError("vanishing quaternionic denominator");
  const CDElement<S> qinv = inverse(q);
  return {(((one - h) - y) * x1 + zx2 + h + y) * qinv, (-(z * x1) + x2 + z) * qinv};
}

// ---- dynamics --------------------------------------------------------------

struct AttractingLimit {
  FinitePoint<double> image;  ///< a_{t_max}(p)
  double distance;            ///< Euclidean distance to (1,0) in R^16
};

/// a_t(p) for t = t_max and its distance to the attracting boundary point (1,0).
inline AttractingLimit attracting_limit(const HPoint<double>& p, double t_max) {
  const auto a = AElement<double>::from_t(t_max);
  const FinitePoint<double> image = a_apply(a, p.point());
  const double d = std::sqrt(distance_sq(image.x, Octonion<double>(1)) + norm_sq(image.y));
  return {image, d};
}

}  // namespace octo
