// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#include "latstab/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "latstab/error.hpp"

namespace latstab {
namespace {

__extension__ typedef __int128 wide_t;

constexpr wide_t kMax = std::numeric_limits<std::int64_t>::max();
constexpr wide_t kMin = std::numeric_limits<std::int64_t>::min();

wide_t wide_gcd(wide_t a, wide_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational from_wide(wide_t num, wide_t den) {
  if (den == 0) throw Error("rational", "division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide_t g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < kMin || den > kMax)
    throw Error("rational", "64-bit overflow");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational", "zero denominator");
  if (den < 0) {
    if (num == std::numeric_limits<std::int64_t>::min() ||
        den == std::numeric_limits<std::int64_t>::min())
      throw Error("rational", "64-bit overflow");
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const char* msg) -> Rational { throw ParseError(msg, i); };
  if (text.empty()) return fail("empty rational");

  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }

  wide_t num = 0;
  wide_t den = 1;
  std::size_t digits = 0;
  auto push_digit = [&](char c) {
    num = num * 10 + (c - '0');
    if (num > kMax * 1000) fail("too many digits");
    ++digits;
  };

  while (i < text.size() && text[i] >= '0' && text[i] <= '9') push_digit(text[i++]);

  if (i < text.size() && text[i] == '/') {
    if (digits == 0) return fail("missing numerator");
    ++i;
    wide_t d = 0;
    std::size_t ddigits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      d = d * 10 + (text[i++] - '0');
      if (d > kMax * 1000) fail("too many digits");
      ++ddigits;
    }
    if (ddigits == 0) return fail("missing denominator");
    if (i != text.size()) return fail("unexpected character");
    if (d == 0) return fail("zero denominator");
    return from_wide(negative ? -num : num, d);
  }

  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      push_digit(text[i++]);
      den *= 10;
      if (den > kMax * 1000) fail("too many digits");
    }
  }
  if (digits == 0) return fail("no digits");

  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool neg_exp = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      neg_exp = text[i] == '-';
      ++i;
    }
    int exp = 0;
    std::size_t edigits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      exp = exp * 10 + (text[i++] - '0');
      if (exp > 30) fail("exponent out of range");
      ++edigits;
    }
    if (edigits == 0) return fail("missing exponent");
    for (int k = 0; k < exp; ++k) {
      if (neg_exp) {
        den *= 10;
      } else {
        num *= 10;
      }
      if (num > kMax * 1000 || den > kMax * 1000) fail("exponent out of range");
    }
  }
  if (i != text.size()) return fail("unexpected character");
  return from_wide(negative ? -num : num, den);
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

double Rational::to_double() const noexcept {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw Error("rational", "reciprocal of zero");
  return from_wide(den_, num_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<wide_t>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  return *this = from_wide(static_cast<wide_t>(num_) * o.den_ + static_cast<wide_t>(o.num_) * den_,
                           static_cast<wide_t>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) {
  return *this = from_wide(static_cast<wide_t>(num_) * o.den_ - static_cast<wide_t>(o.num_) * den_,
                           static_cast<wide_t>(den_) * o.den_);
}

Rational& Rational::operator*=(const Rational& o) {
  return *this = from_wide(static_cast<wide_t>(num_) * o.num_, static_cast<wide_t>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error("rational", "division by zero");
  return *this = from_wide(static_cast<wide_t>(num_) * o.den_, static_cast<wide_t>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  wide_t lhs = static_cast<wide_t>(a.num_) * b.den_;
  wide_t rhs = static_cast<wide_t>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace latstab
