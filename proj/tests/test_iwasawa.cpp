#include "helpers.hpp"
#include "octoplane/group.hpp"
#include "octoplane/verify.hpp"

namespace octo::test {
namespace {

using A = AElement<Q>;
using N = NElement<Q>;

TEST(AAction, Examples) {
  const HPoint<Q> p = H("1/3 e1", "1/4 e5");
  EXPECT_EQ(a_act(A(Q(1)), p), p);
  EXPECT_EQ(a_act(A(Q(3)), H("0", "0")).point(), P("4/5", "0"));  // (λ²-1)/(λ²+1)
  EXPECT_EQ(a_act(A(Q(2)), H("1/2", "0")).point(), P("11/13", "0"));
  EXPECT_EQ(A(Q(2)).cosh(), Q(5, 4));
  EXPECT_EQ(A(Q(2)).sinh(), Q(3, 4));
  EXPECT_THROW(A(Q(0)), DomainError);
  EXPECT_THROW(A(Q(-1)), DomainError);
}

TEST(NAction, Examples) {
  const HPoint<Q> p = H("1/3 e1 - 1/5", "1/4 e5 + 1/7");
  EXPECT_EQ(n_act(N(O("0"), O("0")), p), p);
  EXPECT_EQ(n_act(N(O("0"), O("e2")), H("0", "0")).point(), P("1/3", "2/3 e2"));
  EXPECT_EQ(n_act(N(O("e1"), O("0")), H("1/2", "0")).point(), P("3/5 + 1/5 e1", "0"));
  EXPECT_THROW(N(O("1 + e1"), O("0")), DomainError);
}

TEST(NAction, AgreesWithFloatOracleWhereExactOracleIsUnavailable) {
  // e^{t0} = sqrt(3) for (1/2, 0): the decomposition route is only available in floats.
  EXPECT_THROW(an_coords(H("1/2", "0")), InexactError);
  const HPoint<double> pd(cast<double>(O("1/2")), OctonionD());
  const HPoint<double> oracle = oracle_n_act_via_decomposition(NElement<double>(cast<double>(O("e1")), OctonionD()), pd);
  const FinitePoint<double> expected{cast<double>(O("3/5 + 1/5 e1")), OctonionD()};
  EXPECT_LT(std::sqrt(distance_sq(oracle.x1(), expected.x) + distance_sq(oracle.x2(), expected.y)), 1e-12);
}

TEST(Center, Examples) {
  const HPoint<Q> p = H("1/3 e1 - 1/5", "1/4 e5 + 1/7");
  EXPECT_EQ(z_act(O("0"), p), p);
  EXPECT_EQ(z_act(O("e1"), H("0", "0")).point(), P("1/2 + 1/2 e1", "0"));
  EXPECT_EQ(z_act(O("e1"), H("1/2", "0")).point(), P("3/5 + 1/5 e1", "0"));
  EXPECT_EQ(z_act(O("e1 - 1/2 e4"), p), n_act(N(O("e1 - 1/2 e4"), O("0")), p));
  EXPECT_THROW(z_act(O("1"), p), DomainError);
}

TEST(ANCoords, Examples) {
  auto c = an_coords(H("0", "0"));
  EXPECT_EQ(c.lambda0, Q(1));
  EXPECT_EQ(c.y0, OctonionQ());
  EXPECT_EQ(c.z0, OctonionQ());

  c = an_coords(H("1/3", "2/3 e2"));
  EXPECT_EQ(c.lambda0, Q(1));
  EXPECT_EQ(c.y0, OctonionQ());
  EXPECT_OCT_EQ(c.z0, O("e2"));

  c = an_coords(H("3/5", "0"));  // tanh t with e^t = 2
  EXPECT_EQ(c.lambda0, Q(2));
  EXPECT_EQ(c.y0, OctonionQ());
  EXPECT_EQ(c.z0, OctonionQ());
}

TEST(ANCoords, FloatBackend) {
  const double t = 0.7;
  const auto c = an_coords(HPoint<double>(OctonionD(std::tanh(t)), OctonionD()));
  EXPECT_NEAR(c.lambda0, std::exp(t), 1e-12);
}

TEST(OrbitOrigin, Examples) {
  EXPECT_EQ(orbit_origin(A(Q(1)), N()).point(), P("0", "0"));
  EXPECT_EQ(orbit_origin(A(Q(1)), N(O("e1"), O("0"))).point(), P("1/2 + 1/2 e1", "0"));
  EXPECT_EQ(orbit_origin(A(Q(1)), N(O("0"), O("e2"))).point(), P("1/3", "2/3 e2"));
  const N n(O("1/2 e3"), O("1/3 - e6"));
  EXPECT_EQ(orbit_origin(A(Q(3, 2)), n), a_act(A(Q(3, 2)), n_act(n, H("0", "0"))));
}

TEST(NCompose, Examples) {
  const N n(O("1/2 e3"), O("1/3 - e6"));
  EXPECT_EQ(n_compose(N(), n), n);
  const N c = n_compose(N(O("0"), O("e1")), N(O("0"), O("e2")));
  EXPECT_OCT_EQ(c.y(), im(conj(O("e1")) * O("e2")));
  EXPECT_OCT_EQ(c.y(), O("-e6"));
  EXPECT_OCT_EQ(c.z(), O("e1 + e2"));
  EXPECT_EQ(n_compose(N(O("e1"), O("0")), N(O("e4"), O("0"))), N(O("e1 + e4"), O("0")));
  EXPECT_EQ(n_compose(n, n_inverse(n)), N());
}

TEST(AConjN, Examples) {
  const N n(O("e1"), O("e2"));
  EXPECT_EQ(a_conj_n(A(Q(1)), n), n);
  EXPECT_EQ(a_conj_n(A(Q(2)), n), N(O("4 e1"), O("2 e2")));
}

TEST(MAction, Examples) {
  const MElement<Q> m(normalize_unital(parse_word<Q>("3/5 + 4/5 e2; e5")));
  const SpherePoint<Q> pole(O("1"), O("0"));
  EXPECT_EQ(m_act(m, pole), pole);
  const HPoint<Q> p = H("1/3 e1 - 1/5", "1/4 e5 + 1/7");
  EXPECT_EQ(m_act(MElement<Q>(), p), p);
  EXPECT_EQ(m_act(m, p).r_sq(), p.r_sq());
  EXPECT_THROW(MElement<Q>(parse_word<Q>("e1")), DomainError);
}

TEST(QuaternionReduction, Examples) {
  using CD = CDElement<Q>;
  const CD zero(AlgebraLevel::Quaternion);
  const CD i = CD::basis(AlgebraLevel::Quaternion, 1);
  const QuaternionPoint<Q> p{CD(AlgebraLevel::Quaternion, std::array<Q, 1>{Q(1, 2)}), zero};
  EXPECT_EQ(quaternion_n_act(zero, zero, p), p);
  const QuaternionPoint<Q> r = quaternion_n_act(i, zero, p);
  EXPECT_OCT_EQ(cd_embed(r.x1), O("3/5 + 1/5 e1"));
  EXPECT_EQ(cd_embed(r.x2), OctonionQ());
  const CD octonionic = CD::basis(AlgebraLevel::Octonion, 5);
  EXPECT_THROW(quaternion_n_act(octonionic, zero, p), DomainError);
}

TEST(Dynamics, AttractingPoint) {
  EXPECT_LT(attracting_limit(HPoint<double>(), 20.0).distance, 1e-6);
  const HPoint<double> p(cast<double>(O("-1/2 + 1/3 e2")), cast<double>(O("1/4 e7")));
  EXPECT_LT(attracting_limit(p, 20.0).distance, 1e-6);
  const auto still = attracting_limit(HPoint<double>(), 0.0);
  EXPECT_NEAR(still.distance, 1.0, 1e-15);
}

TEST(GroupElement, ParseActFormat) {
  const auto g = parse_group_element<Q>("a(2) * u(0; e2)");
  EXPECT_EQ(act(g, H("0", "0")), a_act(A(Q(2)), H("1/3", "2/3 e2")));
  EXPECT_EQ(format_group_element(g), "a(2) * u(0; e2)");
  EXPECT_EQ(format_group_element(parse_group_element<Q>(format_group_element(g))), format_group_element(g));
  EXPECT_EQ(act(parse_group_element<Q>("z(e1)"), H("1/2", "0")).point(), P("3/5 + 1/5 e1", "0"));
  EXPECT_THROW(parse_group_element<Q>("z(1)"), DomainError);
  EXPECT_THROW(parse_group_element<Q>("q(1)"), ParseError);
  EXPECT_THROW(parse_group_element<Q>("m(e1)"), DomainError);
}

}  // namespace
}  // namespace octo::test
