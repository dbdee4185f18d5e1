#include "helpers.hpp"
#include "octoplane/cayley_dickson.hpp"

namespace octo::test {
namespace {

TEST(Table, GeneratedMatchesHandWritten) {
  const auto& gen = multiplication_table();
  const auto& ref = reference_multiplication_table();
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      EXPECT_EQ(gen[i][j].index, ref[i][j].index) << i << "," << j;
      EXPECT_EQ(gen[i][j].sign, ref[i][j].sign) << i << "," << j;
    }
  }
}

TEST(Table, DefiningRelations) {
  EXPECT_EQ(OctonionQ::unit(2) * OctonionQ::unit(6), OctonionQ::unit(1));
  EXPECT_EQ(OctonionQ::unit(3) * OctonionQ::unit(4), OctonionQ::unit(1));
  EXPECT_EQ(OctonionQ::unit(5) * OctonionQ::unit(7), OctonionQ::unit(1));
  EXPECT_EQ(OctonionQ::unit(4) * OctonionQ::unit(5), OctonionQ::unit(2));
  for (int i = 1; i < 8; ++i) {
    EXPECT_EQ(OctonionQ::unit(i) * OctonionQ::unit(i), OctonionQ(-1));
    for (int j = 1; j < 8; ++j) {
      if (i != j) EXPECT_EQ(OctonionQ::unit(i) * OctonionQ::unit(j), -(OctonionQ::unit(j) * OctonionQ::unit(i)));
    }
  }
}

TEST(Table, UnitLaw) {
  const OctonionQ x = O("1/2 - 3 e1 + 2/7 e5 + e7");
  EXPECT_EQ(OctonionQ(1) * x, x);
  EXPECT_EQ(x * OctonionQ(1), x);
}

TEST(Octonion, Conjugate) {
  EXPECT_EQ(conj(OctonionQ(1)), OctonionQ(1));
  EXPECT_OCT_EQ(conj(O("e3")), O("-e3"));
  EXPECT_OCT_EQ(conj(O("2 + 3 e1")), O("2 - 3 e1"));
  const OctonionQ x = O("1 + 2 e2 - e6");
  EXPECT_EQ(x * conj(x), OctonionQ(norm_sq(x)));
}

TEST(Octonion, Norm) {
  EXPECT_EQ(norm_sq(O("e5")), Q(1));
  EXPECT_EQ(norm_sq(O("1 + e1")), Q(2));
  EXPECT_EQ(modulus(O("3/5 + 4/5 e4")), Q(1));
  EXPECT_THROW(modulus(O("1 + e1")), InexactError);
  EXPECT_NEAR(modulus(cast<double>(O("1 + e1"))), std::sqrt(2.0), 1e-15);
}

TEST(Octonion, Inverse) {
  EXPECT_OCT_EQ(inverse(O("e1")), O("-e1"));
  EXPECT_OCT_EQ(inverse(O("2")), O("1/2"));
  EXPECT_OCT_EQ(inverse(O("1 + e2")), O("1/2 - 1/2 e2"));
  const OctonionQ x = O("1 + e2");
  EXPECT_EQ(x * inverse(x), OctonionQ(1));
  EXPECT_EQ(inverse(x) * x, OctonionQ(1));
  EXPECT_THROW(inverse(OctonionQ()), DomainError);
}

TEST(Octonion, ImaginaryPart) {
  EXPECT_OCT_EQ(im(O("5")), O("0"));
  EXPECT_OCT_EQ(im(O("e7")), O("e7"));
  EXPECT_OCT_EQ(im(O("3 + 2 e4")), O("2 e4"));
  EXPECT_EQ(im(im(O("3 + 2 e4"))), im(O("3 + 2 e4")));
}

TEST(Octonion, NotAssociative) {
  const OctonionQ a = O("e1"), b = O("e2"), c = O("e3");
  EXPECT_NE((a * b) * c, a * (b * c));
  EXPECT_EQ(associator(a, a, c), OctonionQ());
}

TEST(Octonion, FloatBackendTolerance) {
  const OctonionD x = cast<double>(O("1/3 + e2"));
  EXPECT_TRUE(equal(x * inverse(x), OctonionD(1.0)));
  EXPECT_FALSE(equal(x, OctonionD(1.0)));
}

TEST(CayleyDickson, EmbedsQuaternions) {
  const auto i = CDElement<Q>::basis(AlgebraLevel::Quaternion, 1);
  const auto j = CDElement<Q>::basis(AlgebraLevel::Quaternion, 2);
  EXPECT_EQ(cd_embed(i), O("e1"));
  EXPECT_EQ(cd_embed(j), O("e2"));
  EXPECT_EQ(cd_embed(i * j), O("e1") * O("e2"));
  EXPECT_EQ(cd_embed(i * j), cd_embed(i) * cd_embed(j));
}

TEST(CayleyDickson, MultiplicativeOnEveryBasisPair) {
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const auto x = CDElement<Q>::basis(AlgebraLevel::Octonion, a);
      const auto y = CDElement<Q>::basis(AlgebraLevel::Octonion, b);
      EXPECT_EQ(cd_embed(x * y), cd_embed(x) * cd_embed(y)) << a << "," << b;
    }
  }
}

TEST(CayleyDickson, RestrictIsInverse) {
  const CDElement<Q> q(AlgebraLevel::Quaternion, std::array<Q, 4>{Q(1), Q(2), Q(-1, 3), Q(5)});
  EXPECT_EQ(cd_restrict(cd_embed(q), AlgebraLevel::Quaternion), q);
  EXPECT_THROW(cd_restrict(O("e7"), AlgebraLevel::Complex), DomainError);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6").str(), "1/2");
  EXPECT_EQ(parse_rational("-0.25").str(), "-1/4");
  EXPECT_EQ(parse_rational("1e-3").str(), "1/1000");
  EXPECT_EQ(parse_rational("010/012").str(), "5/6") << "leading zeros are decimal";
  EXPECT_EQ(parse_rational("0.08").str(), "2/25");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(Q(1) / Q(0), DomainError);
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(exact_sqrt(Q(9, 4)), Q(3, 2));
  EXPECT_FALSE(exact_sqrt(Q(3)).has_value());
  EXPECT_THROW(certified_sqrt(Q(2), "x"), InexactError);
  EXPECT_THROW(certified_sqrt(-1.0, "x"), DomainError);
}

}  // namespace
}  // namespace octo::test
