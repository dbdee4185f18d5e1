#include "helpers.hpp"
#include "octoplane/random.hpp"
#include "octoplane/verify.hpp"

namespace octo::test {
namespace {

SuiteOptions opts(std::uint64_t trials, Backend backend = Backend::Rational) {
  SuiteOptions o;
  o.trials = trials;
  o.backend = backend;
  return o;
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nonexistent", opts(1)), std::invalid_argument); }

TEST(Verify, NamedSuitesPass) {
  EXPECT_TRUE(run_suite("n-group-action", opts(200)).passed());
  EXPECT_TRUE(run_suite("triality", opts(100)).passed());
}

TEST(Verify, EverySuiteRunsOnBothBackends) {
  for (const auto& s : suites()) {
    for (Backend b : {Backend::Rational, Backend::Float}) {
      const SuiteReport r = run_suite(s.name, opts(10, b));
      EXPECT_TRUE(r.passed()) << r.to_text();
      EXPECT_EQ(r.skipped, b == Backend::Rational ? !s.rational : !s.floating);
    }
  }
}

TEST(Verify, DeterministicAcrossWorkerCounts) {
  SuiteOptions a = opts(40, Backend::Float);
  a.workers = 1;
  a.tolerance = 1e-30;  // force failures so the transcripts can be compared
  SuiteOptions b = a;
  b.workers = 4;
  const SuiteReport ra = run_suite("algebra", a);
  const SuiteReport rb = run_suite("algebra", b);
  ASSERT_FALSE(ra.failures.empty());
  EXPECT_EQ(ra.to_json(), rb.to_json());
  EXPECT_EQ(run_suite("algebra", a).to_json(), ra.to_json());
}

TEST(Verify, SeedMatters) {
  SuiteOptions a = opts(5, Backend::Float);
  a.tolerance = 1e-30;
  SuiteOptions b = a;
  b.seed = 2;
  EXPECT_NE(run_suite("algebra", a).to_json(), run_suite("algebra", b).to_json());
}

TEST(Verify, FailureTranscriptNamesInputs) {
  SuiteOptions o = opts(3, Backend::Float);
  o.tolerance = 1e-30;
  const SuiteReport r = run_suite("algebra", o);
  ASSERT_FALSE(r.passed());
  EXPECT_NE(r.failures.front().transcript.find("lhs"), std::string::npos);
  EXPECT_NE(r.to_text().find("FAIL"), std::string::npos);
}

TEST(Verify, JsonReport) {
  const std::string json = reports_to_json({run_suite("center", opts(5))});
  EXPECT_NE(json.find("\"passed\": true"), std::string::npos);
  EXPECT_NE(json.find("\"suite\": \"center\""), std::string::npos);
}

TEST(Fixture, CuratedPointsAreExact) {
  const auto& pts = curated_fixture();
  ASSERT_GE(pts.size(), 100u);
  for (const auto& p : pts) EXPECT_NO_THROW(an_coords(p)) << format_point(p.point());
}

TEST(Fixture, ParseErrors) {
  EXPECT_EQ(parse_fixture("# comment\n\n(0, 0)\n").size(), 1u);
  EXPECT_THROW(parse_fixture("(1, 0)\n"), ParseError);  // wrapped with the line number
  EXPECT_THROW(parse_fixture("(0, 0\n"), ParseError);
}

TEST(SpherePoints, ExactlyOnSphere) {
  Sampler<Q> rng(11);
  for (int i = 0; i < 50; ++i) {
    const SpherePoint<Q> s = random_sphere_point<Q>(rng);
    EXPECT_EQ(norm_sq(s.x1()) + norm_sq(s.x2()), Q(1));
  }
}

}  // namespace
}  // namespace octo::test
