#pragma once

#include <Eigen/Core>
#include <span>
#include <string>
#include <vector>

#include "octoplane/octonion.hpp"
#include "octoplane/text.hpp"

namespace octo {

/// A rotation of Cay written as a word a_1 ... a_k of unit octonions.
///
/// The word acts through three maps, outermost factor first:
///   R   = T_{a_1} o ... o T_{a_k},  T_a(x) = a x a
///   R'  = L_{a_1} o ... o L_{a_k},  L_a(x) = a x
///   R'' = R_{a_1} o ... o R_{a_k},  R_a(x) = x a
/// By the Moufang identity a(xy)a = (ax)(ya) every such triple satisfies
/// R(xy) = R'(x) R''(y). The suites check this rather than assume it.
template <ScalarBackend S>
class SpinWord {
 public:
  SpinWord() = default;

  /// Throws DomainError on a factor of norm != 1 (tolerance on doubles).
  explicit SpinWord(std::vector<Octonion<S>> factors) : factors_(std::move(factors)) {
    for (const auto& a : factors_) {
      if (!ScalarTraits<S>::equal(norm_sq(a), S(1))) {
        throw DomainError("triality word factor " + format_octonion(a) + " is not a unit octonion");
      }
    }
  }

  std::span<const Octonion<S>> factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  /// New word with `a` as the outermost factor.
  SpinWord prepended(const Octonion<S>& a) const {
    std::vector<Octonion<S>> f;
    f.reserve(factors_.size() + 1);
    f.push_back(a);
    f.insert(f.end(), factors_.begin(), factors_.end());
    return SpinWord(std::move(f));
  }

  friend bool operator==(const SpinWord&, const SpinWord&) = default;

 private:
  std::vector<Octonion<S>> factors_;
};

template <ScalarBackend S>
Octonion<S> eval_R(const SpinWord<S>& word, Octonion<S> x) {
  const auto f = word.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) x = (*it * x) * *it;
  return x;
}

template <ScalarBackend S>
Octonion<S> eval_Rp(const SpinWord<S>& word, Octonion<S> x) {
  const auto f = word.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) x = *it * x;
  return x;
}

template <ScalarBackend S>
Octonion<S> eval_Rpp(const SpinWord<S>& word, Octonion<S> x) {
  const auto f = word.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) x = x * *it;
  return x;
}

/// Word with R''(1) = 1: prepends u^{-1} = conj(u) for u = R''(1), then
/// drops factors equal to 1 (they act trivially in all three roles).
template <ScalarBackend S>
SpinWord<S> normalize_unital(const SpinWord<S>& word) {
  const Octonion<S> u = eval_Rpp(word, Octonion<S>(1));
  std::vector<Octonion<S>> kept;
  const Octonion<S> head = conj(u);
  if (!equal(head, Octonion<S>(1))) kept.push_back(head);
  for (const auto& a : word.factors()) {
    if (!(a == Octonion<S>(1))) kept.push_back(a);
  }
  return SpinWord<S>(std::move(kept));
}

template <ScalarBackend S>
bool is_unital(const SpinWord<S>& word) {
  return equal(eval_Rpp(word, Octonion<S>(1)), Octonion<S>(1));
}

/// A word viewed as the triple (R, R', R'') of the triality relation.
template <ScalarBackend S>
struct TrialityTriple {
  SpinWord<S> word;

  Octonion<S> R(const Octonion<S>& x) const { return eval_R(word, x); }
  Octonion<S> Rp(const Octonion<S>& x) const { return eval_Rp(word, x); }
  Octonion<S> Rpp(const Octonion<S>& x) const { return eval_Rpp(word, x); }

  /// R(xy) == R'(x) R''(y).
  bool relation_holds(const Octonion<S>& x, const Octonion<S>& y) const {
    return equal(R(x * y), Rp(x) * Rpp(y));
  }
};

/// Unit octonion (1 - q)(1 + q)^{-1} for imaginary q; exactly of norm 1.
template <ScalarBackend S>
Octonion<S> cayley_transform(const Octonion<S>& q) {
  if (!is_imaginary(q)) throw DomainError("Cayley transform needs an imaginary octonion");
  return (Octonion<S>(1) - q) * inverse(Octonion<S>(1) + q);
}

/// Debug materialization: column j is map(e_j), in doubles.
template <ScalarBackend S, class Map>
Eigen::Matrix<double, 8, 8> materialize(const Map& map) {
  Eigen::Matrix<double, 8, 8> m;
  for (int j = 0; j < 8; ++j) {
    const Octonion<S> col = map(Octonion<S>::unit(j));
    for (int i = 0; i < 8; ++i) m(i, j) = ScalarTraits<S>::to_double(col[i]);
  }
  return m;
}

template <ScalarBackend S>
std::string format_word(const SpinWord<S>& word) {
  std::string out;
  for (const auto& a : word.factors()) {
    if (!out.empty()) out += "; ";
    out += format_octonion(a);
  }
  return out;
}

/// Semicolon-separated octonion literals; blank text is the empty word.
template <ScalarBackend S>
SpinWord<S> parse_word(std::string_view text) {
  const auto t = trim(text);
  if (t.empty()) return SpinWord<S>();
  std::vector<Octonion<S>> factors;
  for (auto part : split_top_level(t, ';')) factors.push_back(parse_octonion<S>(part));
  return SpinWord<S>(std::move(factors));
}

}  // namespace octo
