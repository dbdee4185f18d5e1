#include <functional>

#include "octoplane/cayley_dickson.hpp"
#include "octoplane/triality.hpp"
#include "trial.hpp"

namespace octo::verify {

template <ScalarBackend S>
void suite_algebra(Trial<S>& t) {
  auto& rng = t.rng();
  const Octonion<S> x = rng.octonion();
  const Octonion<S> y = rng.octonion();
  t.input("x", x);
  t.input("y", y);
  const Octonion<S> one(1);

  t.expect_equal("norm multiplicative N(xy) = N(x)N(y)", norm_sq(x * y), norm_sq(x) * norm_sq(y));
  t.expect_equal("flexible (xy)x = x(yx)", (x * y) * x, x * (y * x));
  t.expect_equal("left alternative x(xy) = x^2 y", x * (x * y), (x * x) * y);
  t.expect_equal("right alternative (xy)y = x y^2", (x * y) * y, x * (y * y));
  t.expect_equal("weak associativity (xy)conj(y) = N(y)x", (x * y) * conj(y), x * norm_sq(y));
  t.expect_equal("x conj(x) = N(x)", x * conj(x), Octonion<S>(norm_sq(x)));
  t.expect_equal("conj(conj(x)) = x", conj(conj(x)), x);
  t.expect_equal("conj(xy) = conj(y)conj(x)", conj(x * y), conj(y) * conj(x));
  t.expect_equal("Im(Im(x)) = Im(x)", im(im(x)), im(x));
  t.expect(is_imaginary(im(x)), "Im(x) has zero real part");
  t.expect_equal("unit law", one * x, x);
  t.expect_equal("unit law (right)", x * one, x);
  t.expect(norm_sq(x) >= S(0), "N(x) >= 0");
  t.expect((norm_sq(x) == S(0)) == (x == Octonion<S>()), "N(x) = 0 iff x = 0");
  if (!(x == Octonion<S>())) {
    const Octonion<S> xi = inverse(x);
    t.expect_equal("x x^{-1} = 1", x * xi, one);
    t.expect_equal("x^{-1} x = 1", xi * x, one);
    t.expect_equal("left division x^{-1}(xy) = y", xi * (x * y), y);
    t.expect_equal("right division (yx)x^{-1} = y", (y * x) * xi, y);
  }
}

namespace {

/// All bracketings of a[lo..hi).
template <ScalarBackend S>
std::vector<Octonion<S>> bracketings(const std::vector<Octonion<S>>& a, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return {a[lo]};
  std::vector<Octonion<S>> out;
  for (std::size_t mid = lo + 1; mid < hi; ++mid) {
    for (const auto& l : bracketings(a, lo, mid)) {
      for (const auto& r : bracketings(a, mid, hi)) out.push_back(l * r);
    }
  }
  return out;
}

}  // namespace

template <ScalarBackend S>
void suite_two_generator(Trial<S>& t) {
  auto& rng = t.rng();
  const Octonion<S> a = rng.octonion();
  const Octonion<S> b = rng.octonion();
  t.input("a", a);
  t.input("b", b);
  const Octonion<S> alphabet[] = {a, b, conj(a), conj(b), Octonion<S>(1)};
  const auto length = static_cast<std::size_t>(rng.integer(2, 4));
  std::vector<Octonion<S>> word;
  std::string spelled;
  static const char* names[] = {"a", "b", "conj(a)", "conj(b)", "1"};
  for (std::size_t i = 0; i < length; ++i) {
    const auto k = rng.integer(0, 4);
    word.push_back(alphabet[k]);
    spelled += (i ? " " : "") + std::string(names[k]);
  }
  t.input("word", spelled);
  const auto all = bracketings(word, 0, word.size());
  for (std::size_t i = 1; i < all.size(); ++i) {
    t.expect_equal("bracketing " + std::to_string(i) + " agrees with bracketing 0", all[i], all[0]);
  }
}

template <ScalarBackend S>
void suite_cd_embed(Trial<S>& t) {
  auto& rng = t.rng();
  const auto level = static_cast<AlgebraLevel>(rng.integer(0, 3));
  std::vector<S> cx(static_cast<std::size_t>(dimension(level)));
  std::vector<S> cy(cx.size());
  for (auto& c : cx) c = rng.scalar();
  for (auto& c : cy) c = rng.scalar();
  const CDElement<S> x(level, std::span<const S>(cx));
  const CDElement<S> y(level, std::span<const S>(cy));
  t.input("level", std::to_string(static_cast<int>(level)));
  t.input("embed(x)", cd_embed(x));
  t.input("embed(y)", cd_embed(y));
  t.expect_equal("embed(xy) = embed(x)embed(y)", cd_embed(x * y), cd_embed(x) * cd_embed(y));
  t.expect_equal("embed(conj x) = conj(embed x)", cd_embed(conj(x)), conj(cd_embed(x)));
  t.expect_equal("embed preserves norm", norm_sq(cd_embed(x)), norm_sq(x));
  t.expect(cd_restrict(cd_embed(x), level) == x, "restrict(embed(x)) = x");
}

namespace {

template <ScalarBackend S>
SpinWord<S> random_word(Sampler<S>& rng, int max_length) {
  const auto length = rng.integer(0, max_length);
  std::vector<Octonion<S>> f;
  for (long i = 0; i < length; ++i) f.push_back(rng.unit_octonion());
  return SpinWord<S>(std::move(f));
}

}  // namespace

template <ScalarBackend S>
void suite_triality(Trial<S>& t) {
  auto& rng = t.rng();
  const TrialityTriple<S> triple{random_word(rng, 6)};
  const Octonion<S> x = rng.octonion();
  const Octonion<S> y = rng.octonion();
  t.input("word", triple.word);
  t.input("x", x);
  t.input("y", y);
  t.expect_equal("R(xy) = R'(x)R''(y)", triple.R(x * y), triple.Rp(x) * triple.Rpp(y));
  t.expect_equal("N(R(x)) = N(x)", norm_sq(triple.R(x)), norm_sq(x));
  t.expect_equal("N(R'(x)) = N(x)", norm_sq(triple.Rp(x)), norm_sq(x));
  t.expect_equal("N(R''(x)) = N(x)", norm_sq(triple.Rpp(x)), norm_sq(x));
  t.expect_equal("R linear", triple.R(x + y), triple.R(x) + triple.R(y));
}

template <ScalarBackend S>
void suite_unital_words(Trial<S>& t) {
  auto& rng = t.rng();
  const SpinWord<S> raw = random_word(rng, 5);
  const SpinWord<S> word = normalize_unital(raw);
  const TrialityTriple<S> triple{word};
  Octonion<S> x = rng.nonzero_octonion();
  const Octonion<S> y = rng.octonion();
  t.input("word", raw);
  t.input("normalized", word);
  t.input("x", x);
  t.input("y", y);
  const Octonion<S> one(1);
  t.expect_equal("R''(1) = 1", triple.Rpp(one), one);
  t.expect_equal("R(x) = R'(x)", triple.R(x), triple.Rp(x));
  t.expect_equal("R(y) = R'(y)", triple.R(y), triple.Rp(y));
  t.expect_equal("R''(x^{-1}) = R''(x)^{-1}", triple.Rpp(inverse(x)), inverse(triple.Rpp(x)));
  const Octonion<S> rx = triple.Rpp(x);
  const Octonion<S> ry = triple.Rpp(y);
  t.expect_equal("Jordan R''(xy + yx) = R''(x)R''(y) + R''(y)R''(x)", triple.Rpp(x * y + y * x),
                 rx * ry + ry * rx);
  t.expect_equal("R''(x^2) = R''(x)^2", triple.Rpp(x * x), rx * rx);
  const S c2 = rng.scalar();
  const S c1 = rng.scalar();
  const S c0 = rng.scalar();
  auto p = [&](const Octonion<S>& v) { return (v * v) * c2 + v * c1 + Octonion<S>(c0); };
  t.input("p", ScalarTraits<S>::str(c2) + " t^2 + " + ScalarTraits<S>::str(c1) + " t + " +
                   ScalarTraits<S>::str(c0));
  t.expect_equal("R''(p(x)) = p(R''(x))", triple.Rpp(p(x)), p(rx));
}

OCTO_INSTANTIATE_SUITE(suite_algebra)
OCTO_INSTANTIATE_SUITE(suite_two_generator)
OCTO_INSTANTIATE_SUITE(suite_cd_embed)
OCTO_INSTANTIATE_SUITE(suite_triality)
OCTO_INSTANTIATE_SUITE(suite_unital_words)

}  // namespace octo::verify
