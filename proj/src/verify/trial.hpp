#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "octoplane/geometry.hpp"
#include "octoplane/random.hpp"
#include "octoplane/verify.hpp"

namespace octo::verify {

/// One randomized trial: its generator, recorded inputs and failed checks.
template <ScalarBackend S>
class Trial {
 public:
  Trial(std::uint64_t index, Sampler<S> sampler, double eps,
        const std::vector<HPoint<Rational>>* fixture)
      : index_(index), rng_(std::move(sampler)), eps_(eps), fixture_(fixture) {}

  Sampler<S>& rng() { return rng_; }
  std::uint64_t index() const { return index_; }
  double eps() const { return eps_; }
  const std::vector<HPoint<Rational>>& fixture() const { return *fixture_; }

  void input(const std::string& name, const std::string& value) {
    inputs_ += "  " + name + " = " + value + "\n";
  }
  void input(const std::string& name, const Octonion<S>& x) { input(name, format_octonion(x)); }
  void input(const std::string& name, const FinitePoint<S>& p) { input(name, format_point(p)); }
  void input(const std::string& name, const HPoint<S>& p) { input(name, format_point(p.point())); }
  void input(const std::string& name, const ProjPoint<S>& p) { input(name, format_point(p)); }
  void input(const std::string& name, const ProjLine<S>& l) { input(name, format_line(l)); }
  void input(const std::string& name, const SpinWord<S>& w) { input(name, "[" + format_word(w) + "]"); }

  void expect(bool ok, const std::string& check, const std::string& detail = {}) {
    if (ok) return;
    fail(check, detail);
  }

  void expect_equal(const std::string& check, const Octonion<S>& lhs, const Octonion<S>& rhs) {
    if (equal(lhs, rhs, eps_)) return;
    fail(check, "  lhs  = " + format_octonion(lhs) + "\n  rhs  = " + format_octonion(rhs) +
                    "\n  diff = " + format_octonion(Octonion<S>(lhs - rhs)) + "\n");
  }

  void expect_equal(const std::string& check, const FinitePoint<S>& lhs, const FinitePoint<S>& rhs) {
    if (equal(lhs.x, rhs.x, eps_) && equal(lhs.y, rhs.y, eps_)) return;
    fail(check, "  lhs  = " + format_point(lhs) + "\n  rhs  = " + format_point(rhs) +
                    "\n  diff = " + format_point(FinitePoint<S>{lhs.x - rhs.x, lhs.y - rhs.y}) + "\n");
  }

  void expect_equal(const std::string& check, const HPoint<S>& lhs, const HPoint<S>& rhs) {
    expect_equal(check, lhs.point(), rhs.point());
  }

  void expect_equal(const std::string& check, const S& lhs, const S& rhs) {
    if (ScalarTraits<S>::equal(lhs, rhs, eps_)) return;
    fail(check, "  lhs  = " + ScalarTraits<S>::str(lhs) + "\n  rhs  = " + ScalarTraits<S>::str(rhs) +
                    "\n  diff = " + ScalarTraits<S>::str(lhs - rhs) + "\n");
  }

  /// Euclidean distance in Cay^2 below `tol`.
  void expect_near(const std::string& check, const FinitePoint<S>& lhs, const FinitePoint<S>& rhs,
                   double tol) {
    const double d = std::sqrt(ScalarTraits<S>::to_double(distance_sq(lhs.x, rhs.x) + distance_sq(lhs.y, rhs.y)));
    if (d < tol) return;
    std::ostringstream os;
    os.precision(3);
    os << "  lhs  = " << format_point(lhs) << "\n  rhs  = " << format_point(rhs) << "\n  |diff| = " << d
       << " (tolerance " << tol << ")\n";
    fail(check, os.str());
  }

  void fail(const std::string& check, const std::string& detail) {
    failures_.push_back({index_, check, inputs_ + detail});
  }

  std::vector<Failure>& failures() { return failures_; }

 private:
  std::uint64_t index_;
  Sampler<S> rng_;
  double eps_;
  const std::vector<HPoint<Rational>>* fixture_;
  std::string inputs_;
  std::vector<Failure> failures_;
};

// Suite bodies: one call per trial.
#define OCTO_SUITE(name)                                         \
  template <ScalarBackend S>                                     \
  void name(Trial<S>& t);                                        \
  extern template void name<Rational>(Trial<Rational>&);         \
  extern template void name<double>(Trial<double>&);

OCTO_SUITE(suite_algebra)
OCTO_SUITE(suite_two_generator)
OCTO_SUITE(suite_cd_embed)
OCTO_SUITE(suite_triality)
OCTO_SUITE(suite_unital_words)
OCTO_SUITE(suite_geometry_incidence)
OCTO_SUITE(suite_polarity)
OCTO_SUITE(suite_self_conjugate)
OCTO_SUITE(suite_k_polarity)
OCTO_SUITE(suite_n_group_action)
OCTO_SUITE(suite_n_group_laws)
OCTO_SUITE(suite_mixed_an)
OCTO_SUITE(suite_ball_invariance)
OCTO_SUITE(suite_denominators)
OCTO_SUITE(suite_center)
OCTO_SUITE(suite_reconstruction)
OCTO_SUITE(suite_oracle)
OCTO_SUITE(suite_quaternion_reduction)
OCTO_SUITE(suite_m_action)
OCTO_SUITE(suite_collineation)
OCTO_SUITE(suite_polarity_equivariance)

#undef OCTO_SUITE

void suite_dynamics(Trial<double>& t);

#define OCTO_INSTANTIATE_SUITE(name)                    \
  template void name<Rational>(Trial<Rational>&);       \
  template void name<double>(Trial<double>&);

}  // namespace octo::verify
