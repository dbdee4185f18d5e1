#include "helpers.hpp"
#include "octoplane/triality.hpp"

namespace octo::test {
namespace {

using PP = ProjPoint<Q>;
using PL = ProjLine<Q>;

PP F(std::string_view x, std::string_view y) { return P(x, y); }
PP Inf(std::string_view u) { return PointAtInfinity<Q>{O(u)}; }
PL Obl(std::string_view u, std::string_view v) { return ObliqueLine<Q>{O(u), O(v)}; }
PL Vert(std::string_view x) { return VerticalLine<Q>{O(x)}; }

TEST(Incidence, Examples) {
  EXPECT_TRUE(incident(F("0", "0"), Obl("e3 - 1/2", "0")));
  EXPECT_TRUE(incident(Inf("e2"), Obl("e2", "5")));
  EXPECT_FALSE(incident(Inf("e2"), Obl("e3", "5")));
  EXPECT_TRUE(incident(PP(InfinityPoint{}), Vert("7")));
  EXPECT_TRUE(incident(PP(InfinityPoint{}), PL(LineAtInfinity{})));
  EXPECT_TRUE(incident(Inf("e2"), PL(LineAtInfinity{})));
  EXPECT_FALSE(incident(F("0", "0"), PL(LineAtInfinity{})));
}

TEST(Join, Examples) {
  EXPECT_TRUE(equal(join(F("0", "0"), F("1", "0")), Obl("0", "0")));
  EXPECT_TRUE(equal(join(F("1", "0"), F("1", "1")), Vert("1")));
  EXPECT_TRUE(equal(join(Inf("0"), PP(InfinityPoint{})), PL(LineAtInfinity{})));
  EXPECT_THROW(join(F("1", "e1"), F("1", "e1")), DomainError);
}

TEST(Join, SlopeUsesRightInverse) {
  const PP p = F("e1", "e2"), q = F("e3", "1 + e5");
  const PL l = join(p, q);
  EXPECT_TRUE(incident(p, l));
  EXPECT_TRUE(incident(q, l));
}

TEST(Meet, Examples) {
  EXPECT_TRUE(equal(meet(Obl("0", "0"), Obl("1", "0")), F("0", "0")));
  EXPECT_TRUE(equal(meet(Obl("e4", "e1"), PL(LineAtInfinity{})), Inf("e4")));
  EXPECT_TRUE(equal(meet(Obl("e4", "e1"), Obl("e4", "2")), Inf("e4")));
  EXPECT_TRUE(equal(meet(Vert("1"), Vert("2")), PP(InfinityPoint{})));
  EXPECT_THROW(meet(Vert("1"), Vert("1")), DomainError);
}

TEST(Polarity, Examples) {
  EXPECT_TRUE(equal(polarity_point(F("0", "0")), PL(LineAtInfinity{})));
  EXPECT_TRUE(equal(polarity_point(F("1/2", "0")), Vert("2")));
  EXPECT_TRUE(equal(polarity_point(F("0", "1/2")), Obl("0", "2")));
  EXPECT_TRUE(equal(polarity_line(PL(LineAtInfinity{})), F("0", "0")));
  EXPECT_TRUE(equal(polarity_line(Vert("2")), F("1/2", "0")));
}

TEST(Polarity, PointsAtInfinity) {
  EXPECT_TRUE(equal(polarity_point(Inf("e1")), Obl("-e1", "0")));  // -conj(e1^{-1}) = -e1
  EXPECT_TRUE(equal(polarity_point(Inf("2")), Obl("-1/2", "0")));
  EXPECT_TRUE(equal(polarity_point(Inf("0")), Vert("0")));
  EXPECT_TRUE(equal(polarity_point(PP(InfinityPoint{})), Obl("0", "0")));
}

TEST(Polarity, RoundTrip) {
  for (const PL& l : {Obl("e1 + 1/2", "3 e4"), Obl("2 e6", "0"), Obl("0", "0"), Vert("1/3 e2"), Vert("0"),
                      PL(LineAtInfinity{})}) {
    EXPECT_TRUE(equal(polarity_point(polarity_line(l)), l)) << format_line(l);
  }
}

TEST(Ball, Membership) {
  EXPECT_TRUE(in_ball(O("0"), O("0")));
  EXPECT_TRUE(on_sphere(O("1"), O("0")));
  EXPECT_FALSE(in_ball(O("1"), O("0")));
  EXPECT_TRUE(in_ball(O("3/5 + 1/5 e1"), O("0")));
  EXPECT_EQ(norm_sq(O("3/5 + 1/5 e1")), Q(10, 25));
  EXPECT_THROW(H("1", "0"), DomainError);
  EXPECT_THROW(SpherePoint<Q>(O("1/2"), O("0")), DomainError);
}

TEST(SelfConjugate, SphereOnly) {
  const PP s = F("3/5", "4/5 e2");
  EXPECT_TRUE(incident(s, polarity_point(s)));
  const PP b = F("3/10", "2/5 e2");
  EXPECT_FALSE(incident(b, polarity_point(b)));
}

TEST(KAction, Examples) {
  const SpinWord<Q> empty;
  EXPECT_EQ(k_fixing_infinities_act(empty, P("e1", "1/2")), P("e1", "1/2"));
  const SpinWord<Q> w = parse_word<Q>("3/5 + 4/5 e2; e5");
  EXPECT_EQ(k_fixing_infinities_act(w, P("0", "0")), P("0", "0"));
  const HPoint<Q> p = H("1/3 e1", "1/4 + 1/2 e6");
  const HPoint<Q> kp = k_fixing_infinities_act(w, p);
  EXPECT_EQ(kp.r_sq(), p.r_sq());
}

TEST(Literals, PointsAndLines) {
  EXPECT_EQ(format_point(parse_point<Q>("( 1/2 , -e3 )")), "(1/2, -e3)");
  EXPECT_EQ(format_point(parse_point<Q>("(e1)")), "(e1)");
  EXPECT_EQ(format_point(parse_point<Q>("(inf)")), "(inf)");
  EXPECT_EQ(format_line(parse_line<Q>("[e1, 2]")), "[e1, 2]");
  EXPECT_EQ(format_line(parse_line<Q>("[1/3]")), "[1/3]");
  EXPECT_EQ(format_line(parse_line<Q>("[inf]")), "[inf]");
  EXPECT_THROW(parse_point<Q>("(1, 2, 3)"), ParseError);
  EXPECT_THROW(parse_line<Q>("(1, 2)"), ParseError);
  EXPECT_THROW(parse_finite_point<Q>("(e1)"), ParseError);
}

}  // namespace
}  // namespace octo::test
