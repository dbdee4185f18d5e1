#include "octoplane/geometry.hpp"
#include "trial.hpp"

namespace octo::verify {

namespace {

template <ScalarBackend S>
ProjPoint<S> random_point(Sampler<S>& rng) {
  const auto kind = rng.integer(0, 9);
  if (kind == 0) return InfinityPoint{};
  if (kind <= 2) return PointAtInfinity<S>{rng.coin(0.1) ? Octonion<S>() : rng.octonion()};
  return FinitePoint<S>{rng.octonion(), rng.coin(0.1) ? Octonion<S>() : rng.octonion()};
}

template <ScalarBackend S>
ProjLine<S> random_line(Sampler<S>& rng) {
  const auto kind = rng.integer(0, 9);
  if (kind == 0) return LineAtInfinity{};
  if (kind <= 2) return VerticalLine<S>{rng.coin(0.1) ? Octonion<S>() : rng.octonion()};
  return ObliqueLine<S>{rng.octonion(), rng.coin(0.1) ? Octonion<S>() : rng.octonion()};
}

template <ScalarBackend S>
ProjPoint<S> random_point_on(Sampler<S>& rng, const ProjLine<S>& line) {
  if (auto* o = std::get_if<ObliqueLine<S>>(&line)) {
    if (rng.coin(0.1)) return PointAtInfinity<S>{o->slope};
    const Octonion<S> x = rng.octonion();
    return FinitePoint<S>{x, o->slope * x + o->intercept};
  }
  if (auto* v = std::get_if<VerticalLine<S>>(&line)) {
    if (rng.coin(0.1)) return InfinityPoint{};
    return FinitePoint<S>{v->x, rng.octonion()};
  }
  if (rng.coin(0.2)) return InfinityPoint{};
  return PointAtInfinity<S>{rng.octonion()};
}

template <ScalarBackend S>
FinitePoint<S> random_finite_point_on(Sampler<S>& rng, const ProjLine<S>& line) {
  while (true) {
    const ProjPoint<S> p = random_point_on(rng, line);
    if (auto* f = std::get_if<FinitePoint<S>>(&p)) return *f;
  }
}

/// Pair of distinct points; finite pairs share x-coordinates some of the time.
template <ScalarBackend S>
std::pair<ProjPoint<S>, ProjPoint<S>> distinct_points(Sampler<S>& rng, double eps) {
  while (true) {
    ProjPoint<S> p = random_point(rng);
    ProjPoint<S> q = random_point(rng);
    auto* fp = std::get_if<FinitePoint<S>>(&p);
    auto* fq = std::get_if<FinitePoint<S>>(&q);
    if (fp && fq && rng.coin(0.2)) fq->x = fp->x;
    if (!equal(p, q, eps)) return {p, q};
  }
}

}  // namespace

template <ScalarBackend S>
void suite_geometry_incidence(Trial<S>& t) {
  auto& rng = t.rng();
  const double eps = t.eps();
  {
    const auto [p, q] = distinct_points(rng, eps);
    t.input("p", p);
    t.input("q", q);
    const ProjLine<S> l = join(p, q, eps);
    t.input("join(p,q)", l);
    t.expect(incident(p, l, eps), "p on join(p,q)");
    t.expect(incident(q, l, eps), "q on join(p,q)");
    // Any other line through p meets join(p,q) only at p, so q is on no other line through p.
    for (int k = 0; k < 2; ++k) {
      const ProjPoint<S> r = random_point(rng);
      if (incident(r, l, eps)) continue;
      const ProjPoint<S>& base = k == 0 ? p : q;
      const ProjLine<S> other = join(base, r, eps);
      t.input("r", r);
      t.expect(!equal(other, l, eps), "line through an outside point differs from join(p,q)");
      t.expect(equal(meet(l, other, eps), base, eps), "other line through base meets join(p,q) at base");
    }
  }
  {
    ProjLine<S> l = random_line(rng);
    ProjLine<S> m = random_line(rng);
    while (equal(l, m, eps)) m = random_line(rng);
    t.input("L", l);
    t.input("M", m);
    const ProjPoint<S> x = meet(l, m, eps);
    t.input("meet(L,M)", x);
    t.expect(incident(x, l, eps), "meet(L,M) on L");
    t.expect(incident(x, m, eps), "meet(L,M) on M");
    // A third line through another point of L crosses M away from x (dual uniqueness).
    const ProjPoint<S> on_l = random_point_on(rng, l);
    if (!equal(on_l, x, eps)) {
      t.expect(equal(join(x, on_l, eps), l, eps), "join of meet(L,M) with a point of L is L");
      t.expect(!incident(on_l, m, eps), "a second point of L is not on M");
    }
  }
}

template <ScalarBackend S>
void suite_polarity(Trial<S>& t) {
  auto& rng = t.rng();
  const double eps = t.eps();
  const ProjPoint<S> b = random_point(rng);
  const ProjLine<S> pb = polarity_point(b);
  t.input("b", b);
  t.input("Pi(b)", pb);
  t.expect(equal(polarity_line(pb), b, eps), "Pi^{-1}(Pi(b)) = b");
  const ProjLine<S> l = random_line(rng);
  t.input("L", l);
  t.expect(equal(polarity_point(polarity_line(l)), l, eps), "Pi(Pi^{-1}(L)) = L");

  const ProjPoint<S> a = random_point_on(rng, pb);
  t.input("a on Pi(b)", a);
  t.expect(incident(b, polarity_point(a), eps), "a in Pi(b) => b in Pi(a)");
  const ProjPoint<S> c = random_point(rng);
  t.input("c", c);
  t.expect(incident(c, pb, eps) == incident(b, polarity_point(c), eps), "c in Pi(b) <=> b in Pi(c)");
}

template <ScalarBackend S>
void suite_self_conjugate(Trial<S>& t) {
  auto& rng = t.rng();
  const double eps = t.eps();
  const SpherePoint<S> s = random_sphere_point<S>(rng);
  const ProjPoint<S> p = s.point();
  t.input("sphere point", p);
  t.expect(on_sphere(s.x1(), s.x2(), eps), "sample lies on the sphere");
  t.expect(incident(p, polarity_point(p), eps), "sphere point is self-conjugate");

  S scale = rng.nonzero_scalar();
  while (ScalarTraits<S>::equal(scale * scale, S(1), 1e-6)) scale = rng.nonzero_scalar();
  const ProjPoint<S> off = FinitePoint<S>{s.x1() * scale, s.x2() * scale};
  t.input("off-sphere point", off);
  t.expect(!incident(off, polarity_point(off), eps), "off-sphere point is not self-conjugate");

  if constexpr (ScalarTraits<S>::exact) {
    // Curated points lie strictly inside the ball.
    const auto& fixture = t.fixture();
    const ProjPoint<S> inner = fixture[t.index() % fixture.size()].point();
    t.input("ball point", inner);
    t.expect(!incident(inner, polarity_point(inner), eps), "ball point is not self-conjugate");
  }

  const ProjPoint<S> q = random_point(rng);
  t.input("q", q);
  bool expected = false;
  if (auto* f = std::get_if<FinitePoint<S>>(&q)) expected = on_sphere(f->x, f->y, eps);
  t.expect(incident(q, polarity_point(q), eps) == expected, "q in Pi(q) <=> q on the sphere");
}

template <ScalarBackend S>
void suite_k_polarity(Trial<S>& t) {
  auto& rng = t.rng();
  const double eps = t.eps();
  std::vector<Octonion<S>> factors;
  for (long i = rng.integer(0, 4); i > 0; --i) factors.push_back(rng.unit_octonion());
  const SpinWord<S> word(std::move(factors));
  const FinitePoint<S> b{rng.octonion(), rng.octonion()};
  const FinitePoint<S> a = random_finite_point_on(rng, polarity_point(ProjPoint<S>(b)));
  const FinitePoint<S> c{rng.octonion(), rng.octonion()};
  t.input("word", word);
  t.input("b", b);
  t.input("a", a);
  t.input("c", c);
  auto k = [&](const FinitePoint<S>& p) { return ProjPoint<S>(k_fixing_infinities_act(word, p)); };
  t.expect(incident(k(a), polarity_point(k(b)), eps), "a in Pi(b) => k a in Pi(k b)");
  t.expect(incident(ProjPoint<S>(c), polarity_point(ProjPoint<S>(b)), eps) ==
               incident(k(c), polarity_point(k(b)), eps),
           "c in Pi(b) <=> k c in Pi(k b)");
  const FinitePoint<S> kb = k_fixing_infinities_act(word, b);
  t.expect_equal("k preserves N(x) + N(y)", norm_sq(kb.x) + norm_sq(kb.y), norm_sq(b.x) + norm_sq(b.y));
}

OCTO_INSTANTIATE_SUITE(suite_geometry_incidence)
OCTO_INSTANTIATE_SUITE(suite_polarity)
OCTO_INSTANTIATE_SUITE(suite_self_conjugate)
OCTO_INSTANTIATE_SUITE(suite_k_polarity)

}  // namespace octo::verify
