#pragma once

#include <string>
#include <variant>

#include "octoplane/octonion.hpp"
#include "octoplane/text.hpp"
#include "octoplane/triality.hpp"

namespace octo {

// Points of P^2(Cay): (x,y), (u), (inf).

template <ScalarBackend S>
struct FinitePoint {
  Octonion<S> x;
  Octonion<S> y;
  friend bool operator==(const FinitePoint&, const FinitePoint&) = default;
};

template <ScalarBackend S>
struct PointAtInfinity {
  Octonion<S> slope;
  friend bool operator==(const PointAtInfinity&, const PointAtInfinity&) = default;
};

struct InfinityPoint {
  friend bool operator==(const InfinityPoint&, const InfinityPoint&) = default;
};

template <ScalarBackend S>
using ProjPoint = std::variant<FinitePoint<S>, PointAtInfinity<S>, InfinityPoint>;

// Lines: [u,v] = {y = ux + v} + (u), [u] = {x = u} + (inf), [inf].

template <ScalarBackend S>
struct ObliqueLine {
  Octonion<S> slope;
  Octonion<S> intercept;
  friend bool operator==(const ObliqueLine&, const ObliqueLine&) = default;
};

template <ScalarBackend S>
struct VerticalLine {
  Octonion<S> x;
  friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

struct LineAtInfinity {
  friend bool operator==(const LineAtInfinity&, const LineAtInfinity&) = default;
};

template <ScalarBackend S>
using ProjLine = std::variant<ObliqueLine<S>, VerticalLine<S>, LineAtInfinity>;

/// Backend-aware equality of points.
template <ScalarBackend S>
bool equal(const ProjPoint<S>& p, const ProjPoint<S>& q, double eps = kDefaultTolerance) {
  if (p.index() != q.index()) return false;
  if (auto* a = std::get_if<FinitePoint<S>>(&p)) {
    const auto& b = std::get<FinitePoint<S>>(q);
    return equal(a->x, b.x, eps) && equal(a->y, b.y, eps);
  }
  if (auto* a = std::get_if<PointAtInfinity<S>>(&p)) {
    return equal(a->slope, std::get<PointAtInfinity<S>>(q).slope, eps);
  }
  return true;
}

template <ScalarBackend S>
bool equal(const ProjLine<S>& l, const ProjLine<S>& m, double eps = kDefaultTolerance) {
  if (l.index() != m.index()) return false;
  if (auto* a = std::get_if<ObliqueLine<S>>(&l)) {
    const auto& b = std::get<ObliqueLine<S>>(m);
    return equal(a->slope, b.slope, eps) && equal(a->intercept, b.intercept, eps);
  }
  if (auto* a = std::get_if<VerticalLine<S>>(&l)) {
    return equal(a->x, std::get<VerticalLine<S>>(m).x, eps);
  }
  return true;
}

template <ScalarBackend S>
bool incident(const ProjPoint<S>& p, const ProjLine<S>& line, double eps = kDefaultTolerance) {
  if (auto* f = std::get_if<FinitePoint<S>>(&p)) {
    if (auto* l = std::get_if<ObliqueLine<S>>(&line)) return equal(f->y, l->slope * f->x + l->intercept, eps);
    if (auto* l = std::get_if<VerticalLine<S>>(&line)) return equal(f->x, l->x, eps);
    return false;
  }
  if (auto* a = std::get_if<PointAtInfinity<S>>(&p)) {
    if (auto* l = std::get_if<ObliqueLine<S>>(&line)) return equal(a->slope, l->slope, eps);
    return std::holds_alternative<LineAtInfinity>(line);
  }
  return !std::holds_alternative<ObliqueLine<S>>(line);
}

/// The unique line through two distinct points. For finite points with
/// x1 != x2 the slope is (y1 - y2)(x1 - x2)^{-1}: u multiplies x on the left
/// in y = ux + v, which fixes the order of the factors.
template <ScalarBackend S>
ProjLine<S> join(const ProjPoint<S>& p, const ProjPoint<S>& q, double eps = kDefaultTolerance) {
  if (equal(p, q, eps)) throw DomainError("join of a point with itself");
  auto* fp = std::get_if<FinitePoint<S>>(&p);
  auto* fq = std::get_if<FinitePoint<S>>(&q);
  if (fp && fq) {
    if (equal(fp->x, fq->x, eps)) return VerticalLine<S>{fp->x};
    const Octonion<S> u = (fp->y - fq->y) * inverse(fp->x - fq->x);
    return ObliqueLine<S>{u, fp->y - u * fp->x};
  }
  if (!fp && !fq) return LineAtInfinity{};
  const FinitePoint<S>& f = fp ? *fp : *fq;
  const ProjPoint<S>& other = fp ? q : p;
  if (auto* a = std::get_if<PointAtInfinity<S>>(&other)) {
    return ObliqueLine<S>{a->slope, f.y - a->slope * f.x};
  }
  return VerticalLine<S>{f.x};
}

/// The unique common point of two distinct lines.
template <ScalarBackend S>
ProjPoint<S> meet(const ProjLine<S>& l, const ProjLine<S>& m, double eps = kDefaultTolerance) {
  if (equal(l, m, eps)) throw DomainError("meet of a line with itself");
  auto* ol = std::get_if<ObliqueLine<S>>(&l);
  auto* om = std::get_if<ObliqueLine<S>>(&m);
  if (ol && om) {
    if (equal(ol->slope, om->slope, eps)) return PointAtInfinity<S>{ol->slope};
    // u x + v = u' x + v'  =>  x = (u - u')^{-1} (v' - v)
    const Octonion<S> x = inverse(ol->slope - om->slope) * (om->intercept - ol->intercept);
    return FinitePoint<S>{x, ol->slope * x + ol->intercept};
  }
  if (ol || om) {
    const ObliqueLine<S>& o = ol ? *ol : *om;
    const ProjLine<S>& other = ol ? m : l;
    if (auto* v = std::get_if<VerticalLine<S>>(&other)) return FinitePoint<S>{v->x, o.slope * v->x + o.intercept};
    return PointAtInfinity<S>{o.slope};
  }
  // vertical/vertical, vertical/[inf]
  return InfinityPoint{};
}

/// The hyperbolic polarity on points:
///   (x,y), y != 0 -> [-conj(x y^{-1}), conj(y^{-1})]
///   (x,0), x != 0 -> [conj(x^{-1})]
///   (0,0)         -> [inf]
///   (u), u != 0   -> [-conj(u^{-1}), 0]
///   (0)           -> [0]
///   (inf)         -> [0,0]
/// The last three rows follow from a in P(b) <=> b in P(a).
template <ScalarBackend S>
ProjLine<S> polarity_point(const ProjPoint<S>& p) {
  const Octonion<S> zero;
  if (auto* f = std::get_if<FinitePoint<S>>(&p)) {
    if (!(f->y == zero)) {
      const Octonion<S> yinv = inverse(f->y);
      return ObliqueLine<S>{-conj(f->x * yinv), conj(yinv)};
    }
    if (!(f->x == zero)) return VerticalLine<S>{conj(inverse(f->x))};
    return LineAtInfinity{};
  }
  if (auto* a = std::get_if<PointAtInfinity<S>>(&p)) {
    if (!(a->slope == zero)) return ObliqueLine<S>{-conj(inverse(a->slope)), zero};
    return VerticalLine<S>{zero};
  }
  return ObliqueLine<S>{zero, zero};
}

/// Inverse of polarity_point, case by case.
template <ScalarBackend S>
ProjPoint<S> polarity_line(const ProjLine<S>& line) {
  const Octonion<S> zero;
  if (auto* o = std::get_if<ObliqueLine<S>>(&line)) {
    if (!(o->intercept == zero)) {
      // conj(y^{-1}) = v  =>  y = conj(v)^{-1};  x y^{-1} = -conj(u)  =>  x = -conj(u) y
      const Octonion<S> y = inverse(conj(o->intercept));
      return FinitePoint<S>{-conj(o->slope) * y, y};
    }
    if (!(o->slope == zero)) return PointAtInfinity<S>{-inverse(conj(o->slope))};
    return InfinityPoint{};
  }
  if (auto* v = std::get_if<VerticalLine<S>>(&line)) {
    if (!(v->x == zero)) return FinitePoint<S>{inverse(conj(v->x)), zero};
    return PointAtInfinity<S>{zero};
  }
  return FinitePoint<S>{zero, zero};
}

template <ScalarBackend S>
bool in_ball(const Octonion<S>& x1, const Octonion<S>& x2) {
  return norm_sq(x1) + norm_sq(x2) < S(1);
}

/// Exact on rationals; tolerance on doubles.
template <ScalarBackend S>
bool on_sphere(const Octonion<S>& x1, const Octonion<S>& x2, double eps = kDefaultTolerance) {
  return ScalarTraits<S>::equal(norm_sq(x1) + norm_sq(x2), S(1), eps);
}

/// Point (x1, x2) of H^2(Cay): N(x1) + N(x2) < 1.
template <ScalarBackend S>
class HPoint {
 public:
  HPoint() = default;
  HPoint(Octonion<S> x1, Octonion<S> x2) : x1_(std::move(x1)), x2_(std::move(x2)) {
    if (!in_ball(x1_, x2_)) {
      throw DomainError("point (" + format_octonion(x1_) + ", " + format_octonion(x2_) +
                        ") is not in the open unit ball");
    }
  }
  explicit HPoint(const FinitePoint<S>& p) : HPoint(p.x, p.y) {}

  const Octonion<S>& x1() const { return x1_; }
  const Octonion<S>& x2() const { return x2_; }
  FinitePoint<S> point() const { return {x1_, x2_}; }
  /// 1 - N(x1) - N(x2) > 0.
  S r_sq() const { return S(1) - norm_sq(x1_) - norm_sq(x2_); }

  friend bool operator==(const HPoint&, const HPoint&) = default;

 private:
  Octonion<S> x1_;
  Octonion<S> x2_;
};

/// Point with N(x1) + N(x2) = 1, e.g. the boundary point (1,0).
template <ScalarBackend S>
class SpherePoint {
 public:
  SpherePoint(Octonion<S> x1, Octonion<S> x2) : x1_(std::move(x1)), x2_(std::move(x2)) {
    if (!on_sphere(x1_, x2_)) {
      throw DomainError("point (" + format_octonion(x1_) + ", " + format_octonion(x2_) +
                        ") is not on the unit sphere");
    }
  }

  const Octonion<S>& x1() const { return x1_; }
  const Octonion<S>& x2() const { return x2_; }
  FinitePoint<S> point() const { return {x1_, x2_}; }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  Octonion<S> x1_;
  Octonion<S> x2_;
};

/// k(x, y) = (R''(x), R(y)): the element of K fixing (0) and (inf) attached
/// to a triality word.
template <ScalarBackend S>
FinitePoint<S> k_fixing_infinities_act(const SpinWord<S>& word, const FinitePoint<S>& p) {
  return {eval_Rpp(word, p.x), eval_R(word, p.y)};
}

template <ScalarBackend S>
HPoint<S> k_fixing_infinities_act(const SpinWord<S>& word, const HPoint<S>& p) {
  return HPoint<S>(k_fixing_infinities_act(word, p.point()));
}

// ---- literals ------------------------------------------------------------

template <ScalarBackend S>
std::string format_point(const FinitePoint<S>& p) {
  return "(" + format_octonion(p.x) + ", " + format_octonion(p.y) + ")";
}

template <ScalarBackend S>
std::string format_point(const ProjPoint<S>& p) {
  if (auto* f = std::get_if<FinitePoint<S>>(&p)) return format_point(*f);
  if (auto* a = std::get_if<PointAtInfinity<S>>(&p)) return "(" + format_octonion(a->slope) + ")";
  return "(inf)";
}

template <ScalarBackend S>
std::string format_line(const ProjLine<S>& l) {
  if (auto* o = std::get_if<ObliqueLine<S>>(&l)) {
    return "[" + format_octonion(o->slope) + ", " + format_octonion(o->intercept) + "]";
  }
  if (auto* v = std::get_if<VerticalLine<S>>(&l)) return "[" + format_octonion(v->x) + "]";
  return "[inf]";
}

/// `(x,y)`, `(u)` or `(inf)`.
template <ScalarBackend S>
ProjPoint<S> parse_point(std::string_view text) {
  std::string_view body = text;
  if (!strip_enclosing(body, '(', ')')) {
    throw ParseError("point literal must be enclosed in '(' ')': '" + std::string(text) + "'");
  }
  const auto parts = split_top_level(body, ',');
  if (parts.size() == 1) {
    if (trim(parts[0]) == "inf") return InfinityPoint{};
    return PointAtInfinity<S>{parse_octonion<S>(parts[0])};
  }
  if (parts.size() == 2) return FinitePoint<S>{parse_octonion<S>(parts[0]), parse_octonion<S>(parts[1])};
  throw ParseError("point literal '" + std::string(text) + "' has " + std::to_string(parts.size()) +
                   " components");
}

template <ScalarBackend S>
FinitePoint<S> parse_finite_point(std::string_view text) {
  auto p = parse_point<S>(text);
  if (auto* f = std::get_if<FinitePoint<S>>(&p)) return *f;
  throw ParseError("expected a finite point (x,y), got '" + std::string(text) + "'");
}

/// `[u,v]`, `[u]` or `[inf]`.
template <ScalarBackend S>
ProjLine<S> parse_line(std::string_view text) {
  std::string_view body = text;
  if (!strip_enclosing(body, '[', ']')) {
    throw ParseError("line literal must be enclosed in '[' ']': '" + std::string(text) + "'");
  }
  const auto parts = split_top_level(body, ',');
  if (parts.size() == 1) {
    if (trim(parts[0]) == "inf") return LineAtInfinity{};
    return VerticalLine<S>{parse_octonion<S>(parts[0])};
  }
  if (parts.size() == 2) return ObliqueLine<S>{parse_octonion<S>(parts[0]), parse_octonion<S>(parts[1])};
  throw ParseError("line literal '" + std::string(text) + "' has " + std::to_string(parts.size()) +
                   " components");
}

}  // namespace octo
