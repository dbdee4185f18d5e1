#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "octoplane/cayley_dickson.hpp"
#include "octoplane/octonion.hpp"
#include "octoplane/triality.hpp"

namespace octo {

/// Deterministic sampler of scalars and octonions for a backend.
///
/// Rational draws are p/q with |p| <= kNum and 1 <= q <= kDen so that
/// nested exact evaluations stay small. Double draws are uniform.
template <ScalarBackend S>
class Sampler {
 public:
  static constexpr long kNum = 6;
  static constexpr long kDen = 6;

  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Seeded from (seed, stream, index): independent of evaluation order.
  Sampler(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : stream) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    rng_.seed(seq);
  }

  std::mt19937_64& engine() { return rng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Roughly in [-1, 1].
  S scalar() {
    if constexpr (ScalarTraits<S>::exact) {
      return S(integer(-kNum, kNum), integer(1, kDen));
    } else {
      return std::uniform_real_distribution<double>(-1.0, 1.0)(rng_);
    }
  }

  S nonzero_scalar() {
    S s = scalar();
    while (s == S(0)) s = scalar();
    return s;
  }

  /// Random octonion; with probability `sparsity` each coefficient is zero.
  Octonion<S> octonion(double sparsity = 0.2) {
    Octonion<S> x;
    for (int i = 0; i < 8; ++i) x[i] = coin(sparsity) ? S(0) : scalar();
    return x;
  }

  Octonion<S> nonzero_octonion() {
    Octonion<S> x = octonion();
    while (x == Octonion<S>()) x = octonion();
    return x;
  }

  Octonion<S> imaginary(double sparsity = 0.2) { return im(octonion(sparsity)); }

  Octonion<S> unit_octonion() {
    Octonion<S> q = imaginary(0.4);
    if constexpr (ScalarTraits<S>::exact) {
      return (Octonion<S>(1) - q) * inverse(Octonion<S>(1) + q);
    } else {
      const Octonion<S> x = nonzero_octonion();
      return x / std::sqrt(norm_sq(x));
    }
  }

  /// Point of the open unit ball of Cay^2, drawn at a few radii.
  std::pair<Octonion<S>, Octonion<S>> ball_pair() {
    while (true) {
      const S scale = pick_scale();
      Octonion<S> x1 = octonion() * scale;
      Octonion<S> x2 = coin(0.15) ? Octonion<S>() : octonion() * scale;
      if (coin(0.1)) x1 = Octonion<S>(x1.real());
      if (norm_sq(x1) + norm_sq(x2) < max_radius_sq()) return {x1, x2};
    }
  }

  /// Quaternion (level H) with random coefficients.
  CDElement<S> quaternion(bool imaginary_only = false) {
    CDElement<S> q(AlgebraLevel::Quaternion,
                   {imaginary_only ? S(0) : scalar(), scalar(), scalar(), scalar()});
    return q;
  }

 private:
  S pick_scale() {
    if constexpr (ScalarTraits<S>::exact) {
      static const S scales[] = {S(1, 2), S(1, 3), S(1, 4), S(1, 6)};
      return scales[integer(0, 3)];
    } else {
      return std::uniform_real_distribution<double>(0.1, 0.5)(rng_);
    }
  }
  S max_radius_sq() const {
    if constexpr (ScalarTraits<S>::exact) {
      return S(1);
    } else {
      return 0.95;  // keep float trials off the boundary
    }
  }

  std::mt19937_64 rng_;
};

/// Unit octonion from the Cayley transform of a random imaginary q with
/// small rational coefficients, determined by `seed`.
template <ScalarBackend S>
Octonion<S> random_unit_octonion(std::uint64_t seed) {
  Sampler<S> sampler(seed);
  if constexpr (ScalarTraits<S>::exact) {
    return cayley_transform(sampler.imaginary(0.4));
  } else {
    return sampler.unit_octonion();
  }
}

}  // namespace octo
