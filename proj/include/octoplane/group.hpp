#pragma once

#include <string>
#include <variant>
#include <vector>

#include "octoplane/iwasawa.hpp"

namespace octo {

/// u(y,0) acting through the center formulas rather than the general N action.
template <ScalarBackend S>
struct CenterElement {
  Octonion<S> y;
  friend bool operator==(const CenterElement&, const CenterElement&) = default;
};

template <ScalarBackend S>
using GroupFactor = std::variant<AElement<S>, NElement<S>, CenterElement<S>, MElement<S>>;

/// Formal product g_1 * ... * g_k; acts right to left.
template <ScalarBackend S>
struct GroupElement {
  std::vector<GroupFactor<S>> factors;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

template <ScalarBackend S>
FinitePoint<S> apply(const GroupFactor<S>& g, const FinitePoint<S>& p) {
  if (auto* a = std::get_if<AElement<S>>(&g)) return a_apply(*a, p);
  if (auto* n = std::get_if<NElement<S>>(&g)) return n_apply(*n, p);
  if (auto* c = std::get_if<CenterElement<S>>(&g)) return z_apply(c->y, p);
  return m_apply(std::get<MElement<S>>(g), p);
}

template <ScalarBackend S>
HPoint<S> act(const GroupElement<S>& g, const HPoint<S>& p) {
  FinitePoint<S> q = p.point();
  for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it) {
    q = octo::apply(*it, q);
    if (!in_ball(q.x, q.y)) throw DomainError("group action left the ball at " + format_point(q));
  }
  return HPoint<S>(q);
}

template <ScalarBackend S>
std::string format_factor(const GroupFactor<S>& g) {
  if (auto* a = std::get_if<AElement<S>>(&g)) return "a(" + ScalarTraits<S>::str(a->lambda()) + ")";
  if (auto* n = std::get_if<NElement<S>>(&g)) {
    return "u(" + format_octonion(n->y()) + "; " + format_octonion(n->z()) + ")";
  }
  if (auto* c = std::get_if<CenterElement<S>>(&g)) return "z(" + format_octonion(c->y) + ")";
  return "m(" + format_word(std::get<MElement<S>>(g).word()) + ")";
}

template <ScalarBackend S>
std::string format_group_element(const GroupElement<S>& g) {
  std::string out;
  for (const auto& f : g.factors) {
    if (!out.empty()) out += " * ";
    out += format_factor(f);
  }
  return out.empty() ? "a(1)" : out;
}

/// One factor: `a(lambda)`, `u(y;z)`, `z(y)` or `m(word)`.
template <ScalarBackend S>
GroupFactor<S> parse_factor(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.size() < 3 || t[1] != '(' || t.back() != ')') {
    throw ParseError("malformed group element '" + std::string(t) +
                     "'; expected a(lambda), u(y;z), z(y) or m(word)");
  }
  std::string_view body = t.substr(1);
  if (!strip_enclosing(body, '(', ')')) {
    throw ParseError("unbalanced parentheses in group element '" + std::string(t) + "'");
  }
  switch (t[0]) {
    case 'a':
      return AElement<S>(parse_scalar<S>(body));
    case 'u': {
      const auto parts = split_top_level(body, ';');
      if (parts.size() != 2) {
        throw ParseError("u(y;z) needs exactly two ';'-separated octonions in '" + std::string(t) + "'");
      }
      return NElement<S>(parse_octonion<S>(parts[0]), parse_octonion<S>(parts[1]));
    }
    case 'z': {
      auto y = parse_octonion<S>(body);
      if (!is_imaginary(y)) throw DomainError("z(y) needs imaginary y, got " + format_octonion(y));
      return CenterElement<S>{std::move(y)};
    }
    case 'm':
      return MElement<S>(parse_word<S>(body));
    default:
      throw ParseError("unknown group element kind '" + std::string(1, t[0]) + "' in '" +
                       std::string(t) + "'");
  }
}

/// Factors separated by top-level '*'.
template <ScalarBackend S>
GroupElement<S> parse_group_element(std::string_view text) {
  GroupElement<S> g;
  for (auto part : split_top_level(trim(text), '*')) g.factors.push_back(parse_factor<S>(part));
  return g;
}

}  // namespace octo
