#include "helpers.hpp"
#include "octoplane/random.hpp"

namespace octo::test {
namespace {

TEST(OctonionText, Format) {
  EXPECT_EQ(format_octonion(O("0")), "0");
  EXPECT_EQ(format_octonion(O("3/5 + 1/5 e1")), "3/5 + 1/5 e1");
  EXPECT_EQ(format_octonion(O("-e3")), "-e3");
  EXPECT_EQ(format_octonion(O("2 - e1 + 1/2 e7")), "2 - e1 + 1/2 e7");
  EXPECT_EQ(format_octonion(OctonionD(0.1)), "0.10000000000000001");
}

TEST(OctonionText, ParseVariants) {
  EXPECT_EQ(O("1/2*e3"), O("1/2 e3"));
  EXPECT_EQ(O("e1 + e1"), O("2 e1"));
  EXPECT_EQ(O("e0"), O("1"));
  EXPECT_EQ(O("1e-1 e2"), O("1/10 e2"));
}

TEST(OctonionText, Errors) {
  EXPECT_THROW(O(""), ParseError);
  EXPECT_THROW(O("e8"), ParseError);
  EXPECT_THROW(O("1 +"), ParseError);
  EXPECT_THROW(O("x"), ParseError);
  try {
    O("1 + q3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("q3"), std::string::npos) << e.what();
  }
}

TEST(OctonionText, RoundTripRandom) {
  Sampler<Q> rq(3);
  Sampler<double> rd(3);
  for (int i = 0; i < 200; ++i) {
    const OctonionQ x = rq.octonion();
    EXPECT_EQ(O(format_octonion(x)), x);
    const OctonionD y = rd.octonion();
    EXPECT_EQ(parse_octonion<double>(format_octonion(y)), y);
  }
}

}  // namespace
}  // namespace octo::test
