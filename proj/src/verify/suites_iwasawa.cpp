#include <functional>
#include <random>

#include "octoplane/group.hpp"
#include "octoplane/iwasawa.hpp"
#include "trial.hpp"

namespace octo::verify {

namespace {

template <ScalarBackend S>
HPoint<S> random_hpoint(Sampler<S>& rng) {
  auto [x1, x2] = rng.ball_pair();
  return HPoint<S>(x1, x2);
}

template <ScalarBackend S>
NElement<S> random_n(Sampler<S>& rng) {
  return NElement<S>(rng.imaginary(), rng.coin(0.1) ? Octonion<S>() : rng.octonion());
}

template <ScalarBackend S>
AElement<S> random_a(Sampler<S>& rng) {
  if constexpr (ScalarTraits<S>::exact) {
    return AElement<S>(S(rng.integer(1, 5), rng.integer(1, 5)));
  } else {
    return AElement<S>::from_t(std::uniform_real_distribution<double>(-2.0, 2.0)(rng.engine()));
  }
}

template <ScalarBackend S>
MElement<S> random_m(Sampler<S>& rng) {
  std::vector<Octonion<S>> f;
  for (long i = rng.integer(1, 4); i > 0; --i) f.push_back(rng.unit_octonion());
  return MElement<S>(normalize_unital(SpinWord<S>(std::move(f))));
}

template <ScalarBackend S>
std::string describe(const NElement<S>& n) {
  return "u(" + format_octonion(n.y()) + "; " + format_octonion(n.z()) + ")";
}

}  // namespace

template <ScalarBackend S>
void suite_n_group_action(Trial<S>& t) {
  auto& rng = t.rng();
  const HPoint<S> p = random_hpoint(rng);
  const NElement<S> n1 = random_n(rng);
  const NElement<S> n2 = random_n(rng);
  t.input("p", p);
  t.input("n1", describe(n1));
  t.input("n2", describe(n2));
  t.expect_equal("n1(n2 p) = (n1 n2) p", n_act(n1, n_act(n2, p)), n_act(n_compose(n1, n2), p));
  t.expect_equal("u(0,0) p = p", n_act(NElement<S>(), p), p);
  t.expect_equal("n^{-1}(n p) = p", n_act(n_inverse(n1), n_act(n1, p)), p);
}

template <ScalarBackend S>
void suite_n_group_laws(Trial<S>& t) {
  auto& rng = t.rng();
  const NElement<S> n1 = random_n(rng);
  const NElement<S> n2 = random_n(rng);
  const NElement<S> n3 = random_n(rng);
  const AElement<S> a = random_a(rng);
  t.input("n1", describe(n1));
  t.input("n2", describe(n2));
  t.input("n3", describe(n3));
  t.input("lambda", ScalarTraits<S>::str(a.lambda()));
  const NElement<S> l = n_compose(n_compose(n1, n2), n3);
  const NElement<S> r = n_compose(n1, n_compose(n2, n3));
  t.expect_equal("associativity (y)", l.y(), r.y());
  t.expect_equal("associativity (z)", l.z(), r.z());
  const NElement<S> e = n_compose(n1, n_inverse(n1));
  t.expect(is_zero(e.y(), t.eps()) && is_zero(e.z(), t.eps()), "n n^{-1} = u(0,0)");
  const NElement<S> lhs = a_conj_n(a, n_compose(n1, n2));
  const NElement<S> rhs = n_compose(a_conj_n(a, n1), a_conj_n(a, n2));
  t.expect_equal("a(n1 n2)a^{-1} = (a n1 a^{-1})(a n2 a^{-1}) (y)", lhs.y(), rhs.y());
  t.expect_equal("a(n1 n2)a^{-1} = (a n1 a^{-1})(a n2 a^{-1}) (z)", lhs.z(), rhs.z());
}

template <ScalarBackend S>
void suite_mixed_an(Trial<S>& t) {
  auto& rng = t.rng();
  const HPoint<S> p = random_hpoint(rng);
  const NElement<S> n = random_n(rng);
  const AElement<S> a = random_a(rng);
  t.input("p", p);
  t.input("n", describe(n));
  t.input("lambda", ScalarTraits<S>::str(a.lambda()));
  t.expect_equal("a(n p) = (a n a^{-1})(a p)", a_act(a, n_act(n, p)), n_act(a_conj_n(a, n), a_act(a, p)));
  const AElement<S> b = random_a(rng);
  t.expect_equal("a(b p) = (ab) p", a_act(a, a_act(b, p)), a_act(a * b, p));
  t.expect_equal("orbit_origin(a, n) = a(n(0,0))", orbit_origin(a, n),
                 a_act(a, n_act(n, HPoint<S>(Octonion<S>(), Octonion<S>()))));
}

template <ScalarBackend S>
void suite_ball_invariance(Trial<S>& t) {
  auto& rng = t.rng();
  const HPoint<S> p = random_hpoint(rng);
  const NElement<S> n = random_n(rng);
  const AElement<S> a = random_a(rng);
  const MElement<S> m = random_m(rng);
  t.input("p", p);
  t.input("n", describe(n));
  t.input("lambda", ScalarTraits<S>::str(a.lambda()));
  t.input("m", m.word());
  auto check = [&](const FinitePoint<S>& q, const std::string& what) {
    t.expect(in_ball(q.x, q.y), what + " stays in the open ball", "  image = " + format_point(q) + "\n");
  };
  check(n_apply(n, p.point()), "n_act");
  check(a_apply(a, p.point()), "a_act");
  check(z_apply(n.y(), p.point()), "z_act");
  check(m_apply(m, p.point()), "m_act");
}

template <ScalarBackend S>
void suite_denominators(Trial<S>& t) {
  auto& rng = t.rng();
  const HPoint<S> p = random_hpoint(rng);
  const NElement<S> n = random_n(rng);
  const AElement<S> a = random_a(rng);
  t.input("p", p);
  t.input("n", describe(n));
  t.input("lambda", ScalarTraits<S>::str(a.lambda()));
  const S nd = norm_sq(n_denominator(n, p.point()));
  const S na = norm_sq(a_denominator(a, p.point()));
  t.expect(ScalarTraits<S>::is_positive(nd), "N(D) != 0", "  N(D) = " + ScalarTraits<S>::str(nd) + "\n");
  t.expect(ScalarTraits<S>::is_positive(na), "N(sinh x1 + cosh) != 0",
           "  N = " + ScalarTraits<S>::str(na) + "\n");
  t.expect(ScalarTraits<S>::is_positive(norm_sq(Octonion<S>(1) - conj(p.x1()))), "1 - conj(x1) != 0");
}

template <ScalarBackend S>
void suite_center(Trial<S>& t) {
  auto& rng = t.rng();
  const HPoint<S> p = random_hpoint(rng);
  const Octonion<S> y = rng.imaginary();
  const Octonion<S> y2 = rng.imaginary();
  const NElement<S> n = random_n(rng);
  t.input("p", p);
  t.input("y", y);
  t.input("n", describe(n));
  const NElement<S> center(y, Octonion<S>());
  t.expect_equal("z_act(y, p) = n_act(u(y,0), p)", z_act(y, p), n_act(center, p));
  const NElement<S> l = n_compose(center, n);
  const NElement<S> r = n_compose(n, center);
  t.expect(equal(l.y(), r.y(), t.eps()) && equal(l.z(), r.z(), t.eps()), "u(y,0) is central in N");
  const NElement<S> sum = n_compose(center, NElement<S>(y2, Octonion<S>()));
  t.expect_equal("u(y,0)u(y',0) = u(y+y',0)", sum.y(), y + y2);
  t.expect(is_zero(sum.z(), t.eps()), "u(y,0)u(y',0) has z = 0");
}

template <ScalarBackend S>
void suite_reconstruction(Trial<S>& t) {
  if constexpr (ScalarTraits<S>::exact) {
    const auto& fixture = t.fixture();
    const HPoint<S>& p = fixture[t.index() % fixture.size()];
    t.input("p", p);
    const auto c = an_coords(p);
    t.input("lambda0", ScalarTraits<S>::str(c.lambda0));
    t.input("y0", c.y0);
    t.input("z0", c.z0);
    t.expect(is_imaginary(c.y0), "y0 is imaginary");
    t.expect_equal("a_{t0} u(y0,z0)(0,0) = p", orbit_origin(AElement<S>(c.lambda0), NElement<S>(c.y0, c.z0)), p);
  } else {
    const HPoint<S> p = random_hpoint(t.rng());
    t.input("p", p);
    const auto c = an_coords(p);
    t.expect_near("a_{t0} u(y0,z0)(0,0) = p",
                  orbit_origin(AElement<S>(c.lambda0), NElement<S>(c.y0, c.z0)).point(), p.point(), 1e-10);
  }
}

template <ScalarBackend S>
void suite_oracle(Trial<S>& t) {
  auto& rng = t.rng();
  const NElement<S> n = random_n(rng);
  if constexpr (ScalarTraits<S>::exact) {
    const auto& fixture = t.fixture();
    const HPoint<S>& p = fixture[t.index() % fixture.size()];
    t.input("p", p);
    t.input("n", describe(n));
    t.expect_equal("n_act = decomposition oracle", n_act(n, p), oracle_n_act_via_decomposition(n, p));
  } else {
    const HPoint<S> p = random_hpoint(rng);
    t.input("p", p);
    t.input("n", describe(n));
    t.expect_near("n_act = decomposition oracle", n_act(n, p).point(),
                  oracle_n_act_via_decomposition(n, p).point(), 1e-10);
  }
}

template <ScalarBackend S>
void suite_quaternion_reduction(Trial<S>& t) {
  auto& rng = t.rng();
  const CDElement<S> y = rng.quaternion(true);
  const CDElement<S> z = rng.coin(0.1) ? CDElement<S>(AlgebraLevel::Quaternion) : rng.quaternion();
  QuaternionPoint<S> p;
  while (true) {
    const S scale = S(1) / S(3);
    p = {scale * rng.quaternion(), rng.coin(0.15) ? CDElement<S>(AlgebraLevel::Quaternion) : scale * rng.quaternion()};
    if (norm_sq(p.x1) + norm_sq(p.x2) < S(1)) break;
  }
  t.input("y", cd_embed(y));
  t.input("z", cd_embed(z));
  t.input("p", FinitePoint<S>{cd_embed(p.x1), cd_embed(p.x2)});
  const QuaternionPoint<S> q = quaternion_n_act(y, z, p);
  const HPoint<S> expected =
      n_act(NElement<S>(cd_embed(y), cd_embed(z)), HPoint<S>(cd_embed(p.x1), cd_embed(p.x2)));
  t.expect_equal("quaternion formulas = n_act on embedded inputs",
                 FinitePoint<S>{cd_embed(q.x1), cd_embed(q.x2)}, expected.point());
}

template <ScalarBackend S>
void suite_m_action(Trial<S>& t) {
  auto& rng = t.rng();
  const MElement<S> m = random_m(rng);
  const HPoint<S> p = random_hpoint(rng);
  t.input("m", m.word());
  t.input("p", p);
  const SpherePoint<S> boundary(Octonion<S>(1), Octonion<S>());
  const SpherePoint<S> image = m_act(m, boundary);
  t.expect_equal("m (1,0) = (1,0)", image.point(), boundary.point());
  for (const S& lambda : {S(2), S(3), S(1) / S(2)}) {
    const AElement<S> a(lambda);
    t.expect_equal("m a_lambda p = a_lambda m p (lambda = " + ScalarTraits<S>::str(lambda) + ")",
                   m_act(m, a_act(a, p)), a_act(a, m_act(m, p)));
  }
  const HPoint<S> mp = m_act(m, p);
  t.expect_equal("m preserves N(x1) + N(x2)", mp.r_sq(), p.r_sq());
  const SpherePoint<S> s = random_sphere_point<S>(rng);
  t.input("s", s.point());
  const FinitePoint<S> ms = m_apply(m, s.point());
  t.expect(on_sphere(ms.x, ms.y, t.eps()), "m maps the sphere to itself");
}

void suite_dynamics(Trial<double>& t) {
  const HPoint<double> p = random_hpoint(t.rng());
  t.input("p", p);
  const AttractingLimit lim = attracting_limit(p, 20.0);
  t.expect_near("a_20 p -> (1,0)", lim.image, FinitePoint<double>{Octonion<double>(1), Octonion<double>()}, 1e-6);
}

namespace {

/// g is a random a, n or a product a n.
template <ScalarBackend S>
std::pair<std::string, std::function<FinitePoint<S>(const FinitePoint<S>&)>> random_an(Sampler<S>& rng) {
  const auto kind = rng.integer(0, 2);
  const AElement<S> a = random_a(rng);
  const NElement<S> n = random_n(rng);
  if (kind == 0) {
    return {"a(" + ScalarTraits<S>::str(a.lambda()) + ")", [a](const FinitePoint<S>& p) { return a_apply(a, p); }};
  }
  if (kind == 1) return {describe(n), [n](const FinitePoint<S>& p) { return n_apply(n, p); }};
  return {"a(" + ScalarTraits<S>::str(a.lambda()) + ") * " + describe(n),
          [a, n](const FinitePoint<S>& p) { return a_apply(a, n_apply(n, p)); }};
}

}  // namespace

template <ScalarBackend S>
void suite_collineation(Trial<S>& t) {
  auto& rng = t.rng();
  const HPoint<S> p = random_hpoint(rng);
  const HPoint<S> q = random_hpoint(rng);
  const S tau(S(rng.integer(1, 6)) / S(7));
  // A third point of the real segment, hence of the line through p and q.
  const FinitePoint<S> r{p.x1() + (q.x1() - p.x1()) * tau, p.x2() + (q.x2() - p.x2()) * tau};
  const auto [name, g] = random_an(rng);
  t.input("p", p);
  t.input("q", q);
  t.input("r", r);
  t.input("g", name);
  if (equal(ProjPoint<S>(p.point()), ProjPoint<S>(q.point()), t.eps())) return;
  const ProjLine<S> line = join(ProjPoint<S>(p.point()), ProjPoint<S>(q.point()), t.eps());
  t.expect(incident(ProjPoint<S>(r), line, t.eps()), "r on the line through p and q");
  const FinitePoint<S> gp = g(p.point());
  const FinitePoint<S> gq = g(q.point());
  const FinitePoint<S> gr = g(r);
  t.expect(in_ball(gp.x, gp.y) && in_ball(gq.x, gq.y) && in_ball(gr.x, gr.y), "images stay in the ball");
  t.expect(incident(ProjPoint<S>(gr), join(ProjPoint<S>(gp), ProjPoint<S>(gq), t.eps()), t.eps()),
           "g p, g q, g r collinear");
}

template <ScalarBackend S>
void suite_polarity_equivariance(Trial<S>& t) {
  auto& rng = t.rng();
  const HPoint<S> b = random_hpoint(rng);
  const auto [name, g] = random_an(rng);
  const ProjLine<S> polar = polarity_point(ProjPoint<S>(b.point()));
  t.input("b", b);
  t.input("g", name);
  // a lies on the polar of b, outside the ball; resample the rare points where
  // a formula denominator vanishes.
  for (int attempt = 0; attempt < 8; ++attempt) {
    FinitePoint<S> a;
    while (true) {
      const ProjPoint<S> cand = [&]() -> ProjPoint<S> {
        if (auto* o = std::get_if<ObliqueLine<S>>(&polar)) {
          const Octonion<S> x = rng.octonion();
          return FinitePoint<S>{x, o->slope * x + o->intercept};
        }
        if (auto* v = std::get_if<VerticalLine<S>>(&polar)) return FinitePoint<S>{v->x, rng.octonion()};
        return InfinityPoint{};
      }();
      if (auto* f = std::get_if<FinitePoint<S>>(&cand)) {
        a = *f;
        break;
      }
      return;  // polar of the origin is [inf]: no finite points to move
    }
    const FinitePoint<S> c{rng.octonion(), rng.octonion()};
    try {
      const FinitePoint<S> ga = g(a);
      const FinitePoint<S> gb = g(b.point());
      const FinitePoint<S> gc = g(c);
      t.input("a", a);
      t.input("c", c);
      const ProjLine<S> gpolar = polarity_point(ProjPoint<S>(gb));
      t.expect(incident(ProjPoint<S>(ga), gpolar, t.eps()), "a in Pi(b) => g a in Pi(g b)");
      t.expect(incident(ProjPoint<S>(c), polar, t.eps()) == incident(ProjPoint<S>(gc), gpolar, t.eps()),
               "c in Pi(b) <=> g c in Pi(g b)");
      return;
    } catch (const DomainError&) {
      continue;
    }
  }
  t.fail("sampling", "  no admissible point on the polar after 8 attempts\n");
}

OCTO_INSTANTIATE_SUITE(suite_n_group_action)
OCTO_INSTANTIATE_SUITE(suite_n_group_laws)
OCTO_INSTANTIATE_SUITE(suite_mixed_an)
OCTO_INSTANTIATE_SUITE(suite_ball_invariance)
OCTO_INSTANTIATE_SUITE(suite_denominators)
OCTO_INSTANTIATE_SUITE(suite_center)
OCTO_INSTANTIATE_SUITE(suite_reconstruction)
OCTO_INSTANTIATE_SUITE(suite_oracle)
OCTO_INSTANTIATE_SUITE(suite_quaternion_reduction)
OCTO_INSTANTIATE_SUITE(suite_m_action)
OCTO_INSTANTIATE_SUITE(suite_collineation)
OCTO_INSTANTIATE_SUITE(suite_polarity_equivariance)

}  // namespace octo::verify
