#pragma once

#include <Eigen/Core>
#include <array>
#include <span>
#include <vector>

#include "octoplane/octonion.hpp"

namespace octo {

/// Level of the Cayley-Dickson tower R -> C -> H -> O.
enum class AlgebraLevel { Real = 0, Complex = 1, Quaternion = 2, Octonion = 3 };

constexpr int dimension(AlgebraLevel level) { return 1 << static_cast<int>(level); }

/// Element of a Cayley-Dickson level, stored in 8 slots with zeros past 2^k.
///
/// Arithmetic uses the doubling rule (a,b)(c,d) = (ac - conj(d) b, da + b conj(c))
/// on the slot halves, so at the quaternion level slots 1,2,3 are i, j, k = ij.
/// This is independent of the octonion multiplication table and serves as
/// a second model of R, C and H.
template <ScalarBackend S>
class CDElement {
 public:
  using Coefficients = Eigen::Matrix<S, 8, 1>;

  explicit CDElement(AlgebraLevel level = AlgebraLevel::Real)
      : level_(level), c_(Coefficients::Constant(S(0))) {}

  CDElement(AlgebraLevel level, std::span<const S> coefficients) : CDElement(level) {
    if (static_cast<int>(coefficients.size()) > dimension(level)) {
      throw DomainError("too many coefficients for Cayley-Dickson level");
    }
    for (std::size_t i = 0; i < coefficients.size(); ++i) c_[static_cast<int>(i)] = coefficients[i];
  }

  CDElement(AlgebraLevel level, std::initializer_list<S> coefficients)
      : CDElement(level, std::span<const S>(coefficients.begin(), coefficients.size())) {}

  /// Basis element b_i of the given level.
  static CDElement basis(AlgebraLevel level, int i) {
    if (i < 0 || i >= dimension(level)) throw DomainError("basis index outside level");
    CDElement x(level);
    x.c_[i] = S(1);
    return x;
  }

  AlgebraLevel level() const { return level_; }
  const S& operator[](int i) const { return c_[i]; }
  const Coefficients& coeffs() const { return c_; }

  /// Same element viewed at a higher level.
  CDElement promoted(AlgebraLevel level) const {
    if (static_cast<int>(level) < static_cast<int>(level_)) {
      throw DomainError("cannot demote a Cayley-Dickson element");
    }
    CDElement r = *this;
    r.level_ = level;
    return r;
  }

  friend CDElement operator+(const CDElement& a, const CDElement& b) {
    CDElement r(max_level(a, b));
    r.c_ = a.c_ + b.c_;
    return r;
  }
  friend CDElement operator-(const CDElement& a, const CDElement& b) {
    CDElement r(max_level(a, b));
    r.c_ = a.c_ - b.c_;
    return r;
  }
  friend CDElement operator-(const CDElement& a) {
    CDElement r(a.level_);
    r.c_ = -a.c_;
    return r;
  }
  friend CDElement operator*(const S& s, const CDElement& a) {
    CDElement r(a.level_);
    r.c_ = a.c_ * s;
    return r;
  }

  friend CDElement operator*(const CDElement& a, const CDElement& b) {
    const AlgebraLevel level = max_level(a, b);
    const int n = dimension(level);
    std::vector<S> x(a.c_.data(), a.c_.data() + n);
    std::vector<S> y(b.c_.data(), b.c_.data() + n);
    std::vector<S> out = multiply(x, y);
    return CDElement(level, std::span<const S>(out));
  }

  friend bool operator==(const CDElement& a, const CDElement& b) {
    for (int i = 0; i < 8; ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }

  friend CDElement conj(const CDElement& a) {
    CDElement r = -a;
    r.c_[0] = a.c_[0];
    return r;
  }

  friend S norm_sq(const CDElement& a) {
    S n(0);
    for (int i = 0; i < 8; ++i) n += a.c_[i] * a.c_[i];
    return n;
  }

  friend CDElement inverse(const CDElement& a) {
    const S n = norm_sq(a);
    if (n == S(0)) throw DomainError("inverse of zero element");
    return (S(1) / n) * conj(a);
  }

 private:
  static AlgebraLevel max_level(const CDElement& a, const CDElement& b) {
    return static_cast<int>(a.level_) >= static_cast<int>(b.level_) ? a.level_ : b.level_;
  }

  static std::vector<S> conj_vec(const std::vector<S>& x) {
    std::vector<S> r(x.size());
    r[0] = x[0];
    for (std::size_t i = 1; i < x.size(); ++i) r[i] = -x[i];
    return r;
  }

  static std::vector<S> multiply(const std::vector<S>& x, const std::vector<S>& y) {
    const std::size_t n = x.size();
    if (n == 1) return {x[0] * y[0]};
    const std::size_t h = n / 2;
    const std::vector<S> a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
    const std::vector<S> c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
    const std::vector<S> ac = multiply(a, c);
    const std::vector<S> db = multiply(conj_vec(d), b);
    const std::vector<S> da = multiply(d, a);
    const std::vector<S> bc = multiply(b, conj_vec(c));
    std::vector<S> r(n);
    for (std::size_t i = 0; i < h; ++i) {
      r[i] = ac[i] - db[i];
      r[h + i] = da[i] + bc[i];
    }
    return r;
  }

  AlgebraLevel level_;
  Coefficients c_;
};

/// Signed basis images of the Cayley-Dickson slots in the octonion table.
/// Slots 0..3 go to 1, e1, e2 and e1e2; slot 4 goes to the first imaginary unit l
/// found to complete a multiplicative basis, and slot 4+k to image(k) * l.
struct EmbeddingBasis {
  std::array<BasisProduct, 8> image;
};

const EmbeddingBasis& cd_embedding_basis();

/// Algebra embedding of a Cayley-Dickson element into Cay.
template <ScalarBackend S>
Octonion<S> cd_embed(const CDElement<S>& x) {
  const auto& basis = cd_embedding_basis();
  Octonion<S> r;
  for (int i = 0; i < dimension(x.level()); ++i) {
    const BasisProduct b = basis.image[i];
    if (b.sign > 0) {
      r[b.index] += x[i];
    } else {
      r[b.index] -= x[i];
    }
  }
  return r;
}

/// Inverse of cd_embed on its image at the given level; throws DomainError if
/// x does not lie in the embedded copy of that level.
template <ScalarBackend S>
CDElement<S> cd_restrict(const Octonion<S>& x, AlgebraLevel level) {
  const auto& basis = cd_embedding_basis();
  CDElement<S> r(level);
  std::array<S, 8> c{};
  Octonion<S> rest = x;
  for (int i = 0; i < dimension(level); ++i) {
    const BasisProduct b = basis.image[i];
    c[i] = b.sign > 0 ? x[b.index] : -x[b.index];
    rest[b.index] = S(0);
  }
  if (!(rest == Octonion<S>())) throw DomainError("octonion outside the embedded subalgebra");
  return CDElement<S>(level, std::span<const S>(c.data(), static_cast<std::size_t>(dimension(level))));
}

}  // namespace octo
