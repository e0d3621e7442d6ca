// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "latstab/error.hpp"
#include "latstab/rational.hpp"

namespace latstab {
namespace {

TEST(RationalParse, DecimalsAreExact) {
  EXPECT_EQ(Rational::parse("2.3"), Rational(23, 10));
  EXPECT_EQ(Rational::parse("1.70"), Rational(17, 10));
  EXPECT_EQ(Rational::parse("0.5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-0.25"), Rational(-1, 4));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
}

TEST(RationalParse, FractionsAndExponents) {
  EXPECT_EQ(Rational::parse("10/23"), Rational(10, 23));
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("1.5e2"), Rational(150));
  EXPECT_EQ(Rational::parse("25e-3"), Rational(1, 40));
}

TEST(RationalParse, ReportsOffset) {
  try {
    Rational::parse("2.3x");
    FAIL() << "no throw";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse("1e99"), Error);
}

TEST(Rational, NormalizesSign) {
  Rational r(3, -6);
  EXPECT_EQ(r.num(), -1);
  EXPECT_EQ(r.den(), 2);
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(Rational(23, 5).floor(), 4);
  EXPECT_EQ(Rational(23, 5).ceil(), 5);
  EXPECT_EQ(Rational(-23, 5).floor(), -5);
  EXPECT_EQ(Rational(-23, 5).ceil(), -4);
  EXPECT_EQ(Rational(6).floor(), 6);
  EXPECT_EQ(Rational(6).ceil(), 6);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(Rational(23, 10).reciprocal(), Rational(10, 23));
  EXPECT_THROW(Rational(0).reciprocal(), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, OrderingIsExact) {
  // 1/3 and 0.333...3 differ past double precision.
  EXPECT_LT(Rational(333333333333333333LL, 1000000000000000000LL), Rational(1, 3));
  EXPECT_GT(Rational(10, 17), Rational(10, 23));
}

TEST(Rational, OverflowIsReported) {
  const Rational big(INT64_MAX / 2 + 1);
  EXPECT_THROW(big + big, Error);
  EXPECT_THROW(big * Rational(3), Error);
}

TEST(Rational, ToString) {
  EXPECT_EQ(Rational(7).to_string(), "7");
  EXPECT_EQ(Rational(-10, 23).to_string(), "-10/23");
  EXPECT_EQ(Rational::parse("0.3").to_string(), "3/10");
}

}  // namespace
}  // namespace latstab
