#include <optional>
#include <string>

#include "octoplane/octonion.hpp"

namespace octo {

namespace {

using Partial = std::array<std::array<std::optional<BasisProduct>, 8>, 8>;

void assign(Partial& t, int i, int j, BasisProduct p) {
  auto& slot = t[i][j];
  if (slot && !(*slot == p)) {
    throw DomainError("inconsistent octonion relations at e" + std::to_string(i) + "e" +
                      std::to_string(j));
  }
  slot = p;
}

int shift(int index, int by) { return (index - 1 + by) % 7 + 1; }

}  // namespace

MultiplicationTable generate_multiplication_table() {
  Partial t;
  for (int i = 0; i < 8; ++i) {
    assign(t, 0, i, {i, 1});
    assign(t, i, 0, {i, 1});
  }
  for (int i = 1; i < 8; ++i) assign(t, i, i, {0, -1});

  // e_a e_b = e_c for each generating relation; a quaternionic triple also
  // gives e_b e_c = e_a and e_c e_a = e_b.
  constexpr int kRelations[3][3] = {{2, 6, 1}, {3, 4, 1}, {5, 7, 1}};
  for (const auto& rel : kRelations) {
    for (int s = 0; s < 7; ++s) {
      const int a = shift(rel[0], s);
      const int b = shift(rel[1], s);
      const int c = shift(rel[2], s);
      for (auto [x, y, z] : {std::array{a, b, c}, std::array{b, c, a}, std::array{c, a, b}}) {
        assign(t, x, y, {z, 1});
        assign(t, y, x, {z, -1});
      }
    }
  }

  MultiplicationTable out{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (!t[i][j]) {
        throw DomainError("octonion relations leave e" + std::to_string(i) + "e" +
                          std::to_string(j) + " undetermined");
      }
      out[i][j] = *t[i][j];
    }
  }
  return out;
}

const MultiplicationTable& multiplication_table() {
  static const MultiplicationTable table = generate_multiplication_table();
  return table;
}

const MultiplicationTable& reference_multiplication_table() {
  // Row i, column j holds e_i * e_j as {index, sign}.
  static const MultiplicationTable table = {{
      {{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}}},
      {{{1, 1}, {0, -1}, {6, 1}, {4, 1}, {3, -1}, {7, 1}, {2, -1}, {5, -1}}},
      {{{2, 1}, {6, -1}, {0, -1}, {7, 1}, {5, 1}, {4, -1}, {1, 1}, {3, -1}}},
      {{{3, 1}, {4, -1}, {7, -1}, {0, -1}, {1, 1}, {6, 1}, {5, -1}, {2, 1}}},
      {{{4, 1}, {3, 1}, {5, -1}, {1, -1}, {0, -1}, {2, 1}, {7, 1}, {6, -1}}},
      {{{5, 1}, {7, -1}, {4, 1}, {6, -1}, {2, -1}, {0, -1}, {3, 1}, {1, 1}}},
      {{{6, 1}, {2, 1}, {1, -1}, {5, 1}, {7, -1}, {3, -1}, {0, -1}, {4, 1}}},
      {{{7, 1}, {5, 1}, {3, 1}, {2, -1}, {6, 1}, {1, -1}, {4, -1}, {0, -1}}},
  }};
  return table;
}

}  // namespace octo
