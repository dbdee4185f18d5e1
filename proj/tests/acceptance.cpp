// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Each criterion runs the named suites at the stated size and backend.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "octoplane/verify.hpp"

namespace {

using namespace octo;

struct Run {
  const char* suite;
  Backend backend;
  std::uint64_t trials;
};

struct Criterion {
  int id;
  const char* title;
  std::vector<Run> runs;
};

constexpr auto kQ = Backend::Rational;
constexpr auto kF = Backend::Float;

}  // namespace

int main() {
  const std::uint64_t fixture_points = curated_fixture().size();
  const std::vector<Criterion> criteria = {
      {1, "algebra: norm multiplicative, alternative laws, (ab)conj(b) = N(b)a, two-generator associativity",
       {{"algebra", kQ, 1000}, {"two-generator", kQ, 1000}}},
      {2, "triality: R(xy) = R'(x)R''(y) for words of length <= 6; normalized-word properties",
       {{"triality", kQ, 1000}, {"unital-words", kQ, 1000}}},
      {3, "geometry: incidence axioms, polarity involution, self-conjugate locus = unit sphere",
       {{"geometry-incidence", kQ, 1000}, {"polarity", kQ, 1000}, {"self-conjugate", kQ, 1000}, {"k-polarity", kQ, 1000}}},
      {4, "N action: group law, mixed A/N law, ball invariance, denominators, center formulas",
       {{"n-group-action", kQ, 1000}, {"n-group-laws", kQ, 1000}, {"mixed-an", kQ, 1000},
        {"ball-invariance", kQ, 1000}, {"denominators", kQ, 1000}, {"center", kQ, 1000}}},
      {5, "oracle: n_act = decomposition route, exact on curated points, 1e-10 in floats",
       {{"oracle", kQ, std::max<std::uint64_t>(1000, fixture_points)}, {"reconstruction", kQ, fixture_points},
        {"oracle", kF, 1000}}},
      {6, "quaternion reduction: associative formulas = n_act on embedded quaternions",
       {{"quaternion-reduction", kQ, 1000}}},
      {7, "M: fixes (1,0), commutes with a(2), a(3), a(1/2), preserves norm",
       {{"m-action", kQ, 100}}},
      {8, "dynamics: |a_20(p) - (1,0)| < 1e-6 for random ball points",
       {{"dynamics", kF, 10}}},
      {9, "collineation and polarity equivariance under A and N",
       {{"collineation", kQ, 100}, {"polarity-equivariance", kQ, 100}}},
  };

  bool all = true;
  for (const auto& c : criteria) {
    bool ok = true;
    std::string detail;
    for (const auto& r : c.runs) {
      SuiteOptions o;
      o.seed = 1;
      o.trials = r.trials;
      o.backend = r.backend;
      const auto t0 = std::chrono::steady_clock::now();
      const SuiteReport rep = run_suite(r.suite, o);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      ok = ok && rep.passed() && !rep.skipped && secs < 60.0;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s%s/%s %llu trials %zu failures %.1fs", detail.empty() ? "" : "; ", r.suite,
                    std::string(to_string(r.backend)).c_str(), static_cast<unsigned long long>(r.trials),
                    rep.failures.size(), secs);
      detail += buf;
      if (!rep.passed()) std::fputs(rep.to_text().c_str(), stderr);
    }
    std::printf("%s  criterion %d  %s  [%s]\n", ok ? "PASS" : "FAIL", c.id, c.title, detail.c_str());
    all = all && ok;
  }
  std::printf("curated fixture: %llu exact points\n", static_cast<unsigned long long>(fixture_points));
  std::printf("%s\n", all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
  return all ? 0 : 1;
}
