#include "helpers.hpp"
#include "octoplane/random.hpp"
#include "octoplane/triality.hpp"

namespace octo::test {
namespace {

SpinWord<Q> W(std::string_view text) { return parse_word<Q>(text); }

TEST(Triality, EmptyWordIsIdentity) {
  const SpinWord<Q> w;
  const OctonionQ x = O("1/2 + e3 - 2 e7");
  EXPECT_EQ(eval_R(w, x), x);
  EXPECT_EQ(eval_Rp(w, x), x);
  EXPECT_EQ(eval_Rpp(w, x), x);
}

TEST(Triality, SingleUnitWord) {
  const SpinWord<Q> w = W("e1");
  EXPECT_OCT_EQ(eval_R(w, OctonionQ(1)), O("-1"));
  EXPECT_OCT_EQ(OctonionQ(eval_Rp(w, OctonionQ(1)) * eval_Rpp(w, OctonionQ(1))), O("-1"));
}

TEST(Triality, OutermostFactorFirst) {
  const SpinWord<Q> w = W("e1; e2");
  const OctonionQ x = O("e3");
  EXPECT_EQ(eval_Rp(w, x), O("e1") * (O("e2") * x));
  EXPECT_EQ(eval_Rpp(w, x), (x * O("e2")) * O("e1"));
  EXPECT_EQ(eval_R(w, x), (O("e1") * ((O("e2") * x) * O("e2"))) * O("e1"));
}

TEST(Triality, RelationOnSampleWords) {
  Sampler<Q> rng(7);
  for (int k = 0; k < 20; ++k) {
    std::vector<OctonionQ> f;
    for (int i = 0; i < 4; ++i) f.push_back(rng.unit_octonion());
    const TrialityTriple<Q> t{SpinWord<Q>(f)};
    EXPECT_TRUE(t.relation_holds(rng.octonion(), rng.octonion()));
  }
}

TEST(Triality, RejectsNonUnitFactor) {
  EXPECT_THROW(W("1 + e1"), DomainError);
  EXPECT_THROW(SpinWord<Q>({O("2")}), DomainError);
}

TEST(Normalize, SingleUnit) {
  const SpinWord<Q> n = normalize_unital(W("e1"));
  EXPECT_EQ(format_word(n), "-e1; e1");
  EXPECT_EQ(eval_Rpp(n, OctonionQ(1)), OctonionQ(1));
  EXPECT_TRUE(is_unital(n));
}

TEST(Normalize, AlreadyUnitalAndEmpty) {
  EXPECT_TRUE(normalize_unital(SpinWord<Q>()).empty());
  const SpinWord<Q> w = W("-e1; e1");
  EXPECT_EQ(normalize_unital(w), w);
}

TEST(Normalize, UnitalWordsHaveEqualRAndRp) {
  const SpinWord<Q> w = normalize_unital(W("3/5 + 4/5 e2; e5; -e1"));
  for (int i = 0; i < 8; ++i) EXPECT_EQ(eval_R(w, OctonionQ::unit(i)), eval_Rp(w, OctonionQ::unit(i)));
}

TEST(CayleyTransform, Examples) {
  EXPECT_EQ(cayley_transform(OctonionQ()), OctonionQ(1));
  EXPECT_OCT_EQ(cayley_transform(O("e1")), O("-e1"));
  EXPECT_EQ(norm_sq(cayley_transform(O("1/2 e3 - 2/3 e6"))), Q(1));
  EXPECT_THROW(cayley_transform(O("1 + e1")), DomainError);
}

TEST(Triality, MaterializeIsOrthogonal) {
  const SpinWord<Q> w = W("3/5 + 4/5 e2; e5");
  const Eigen::Matrix<double, 8, 8> m = materialize<Q>([&](const OctonionQ& x) { return eval_R(w, x); });
  EXPECT_TRUE((m.transpose() * m).isIdentity(1e-12));
}

TEST(Triality, WordRoundTrip) {
  const SpinWord<Q> w = W("3/5 + 4/5 e2; -e5");
  EXPECT_EQ(W(format_word(w)), w);
  EXPECT_THROW(W("e1;; e2"), ParseError);
}

}  // namespace
}  // namespace octo::test
