#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "octoplane/iwasawa.hpp"

namespace octo {

enum class Backend { Rational, Float };

std::string_view to_string(Backend b);
Backend parse_backend(std::string_view text);

/// u(y,z) p computed along the decomposition route, never touching the
/// explicit N-action formulas:
///   p = a_{t0} u(y0,z0)(0,0)                     (an_coords)
///   u(y,z) a_{t0} = a_{t0} u(e^{-2t0} y, e^{-t0} z)   (a_conj_n)
///   u(...) u(y0,z0) = u(...)                      (n_compose)
///   a_{t0} u(...)(0,0)                            (orbit_origin)
/// Exact on the rational backend whenever an_coords is.
template <ScalarBackend S>
HPoint<S> oracle_n_act_via_decomposition(const NElement<S>& n, const HPoint<S>& p) {
  const ANCoordinates<S> c = an_coords(p);
  const AElement<S> a0(c.lambda0);
  const NElement<S> moved = a_conj_n(a0.inverse(), n);
  const NElement<S> combined = n_compose(moved, NElement<S>(c.y0, c.z0));
  return orbit_origin(a0, combined);
}

struct Failure {
  std::uint64_t trial = 0;
  std::string check;
  std::string transcript;  ///< inputs, both outputs and their difference
};

struct SuiteReport {
  std::string suite;
  std::uint64_t trials = 0;
  std::vector<Failure> failures;
  Backend backend = Backend::Rational;
  std::uint64_t seed = 0;
  bool skipped = false;  ///< suite does not apply to this backend
  std::string note;
  double tolerance = 0.0;  ///< absolute tolerance used (0 on the exact backend)

  bool passed() const { return skipped || failures.empty(); }
  std::string to_text() const;
  std::string to_json() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;
  Backend backend = Backend::Rational;
  unsigned workers = 0;  ///< 0: hardware concurrency
  std::optional<double> tolerance;  ///< float backend override
  std::optional<std::string> fixture_path;
};

struct SuiteInfo {
  std::string_view name;
  std::string_view description;
  bool rational;
  bool floating;
};

const std::vector<SuiteInfo>& suites();

/// Runs one named invariant suite. Deterministic in (seed, trials, backend):
/// trial i draws from its own generator seeded by (seed, suite, i).
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

/// Reports for every suite, in registry order.
std::vector<SuiteReport> run_all_suites(const SuiteOptions& options);

std::string reports_to_json(const std::vector<SuiteReport>& reports);

/// The curated exact points shipped with the library (data/curated_points_v1.txt):
/// every point has rational e^{t0} and |1 - x1| r.
const std::vector<HPoint<Rational>>& curated_fixture();

std::vector<HPoint<Rational>> parse_fixture(std::string_view text);
std::vector<HPoint<Rational>> load_fixture(const std::string& path);

/// Rational point of the unit sphere in Cay^2 by inverse stereographic
/// projection of a random vector of Q^15 (the pole coordinate is random).
template <ScalarBackend S, class Rng>
SpherePoint<S> random_sphere_point(Rng& sampler) {
  std::array<S, 16> v{};
  S s(0);
  const int pole = static_cast<int>(sampler.integer(0, 15));
  for (int i = 0; i < 16; ++i) {
    if (i == pole) continue;
    v[i] = sampler.coin(0.3) ? S(0) : sampler.scalar();
    s += v[i] * v[i];
  }
  const S denom = S(1) + s;
  for (int i = 0; i < 16; ++i) v[i] = i == pole ? (s - S(1)) / denom : S(2) * v[i] / denom;
  Octonion<S> x1;
  Octonion<S> x2;
  for (int i = 0; i < 8; ++i) {
    x1[i] = v[i];
    x2[i] = v[8 + i];
  }
  return SpherePoint<S>(x1, x2);
}

}  // namespace octo
