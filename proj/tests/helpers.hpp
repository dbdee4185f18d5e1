#pragma once

#include <gtest/gtest.h>

#include "octoplane/geometry.hpp"
#include "octoplane/iwasawa.hpp"
#include "octoplane/text.hpp"

namespace octo::test {

using Q = Rational;

inline OctonionQ O(std::string_view text) { return parse_octonion<Q>(text); }
inline FinitePoint<Q> P(std::string_view x, std::string_view y) { return {O(x), O(y)}; }
inline HPoint<Q> H(std::string_view x, std::string_view y) { return HPoint<Q>(O(x), O(y)); }

}  // namespace octo::test

#define EXPECT_OCT_EQ(a, b) EXPECT_EQ(::octo::format_octonion(a), ::octo::format_octonion(b))
#define EXPECT_POINT_EQ(a, b) EXPECT_EQ(::octo::format_point(a), ::octo::format_point(b))
