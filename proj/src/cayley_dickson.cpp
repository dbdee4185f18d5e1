#include "octoplane/cayley_dickson.hpp"

#include <optional>

namespace octo {

namespace {

BasisProduct compose(BasisProduct a, BasisProduct b) {
  const BasisProduct p = multiplication_table()[a.index][b.index];
  return {p.index, p.sign * a.sign * b.sign};
}

bool is_multiplicative(const EmbeddingBasis& e) {
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const auto bi = CDElement<Rational>::basis(AlgebraLevel::Octonion, i);
      const auto bj = CDElement<Rational>::basis(AlgebraLevel::Octonion, j);
      const auto prod = bi * bj;
      int k = 0;
      while (prod[k] == Rational(0)) ++k;
      const int sign = prod[k].sign();
      const BasisProduct lhs{e.image[k].index, e.image[k].sign * sign};
      if (!(lhs == compose(e.image[i], e.image[j]))) return false;
    }
  }
  return true;
}

EmbeddingBasis find_embedding() {
  EmbeddingBasis e;
  e.image[0] = {0, 1};
  e.image[1] = {1, 1};
  e.image[2] = {2, 1};
  e.image[3] = compose(e.image[1], e.image[2]);
  for (int l = 1; l < 8; ++l) {
    if (l == e.image[1].index || l == e.image[2].index || l == e.image[3].index) continue;
    for (int sign : {1, -1}) {
      e.image[4] = {l, sign};
      for (int k = 1; k < 4; ++k) e.image[4 + k] = compose(e.image[k], e.image[4]);
      if (is_multiplicative(e)) return e;
    }
  }
  throw DomainError("no multiplicative embedding of the Cayley-Dickson octonions found");
}

}  // namespace

const EmbeddingBasis& cd_embedding_basis() {
  static const EmbeddingBasis basis = find_embedding();
  return basis;
}

}  // namespace octo
