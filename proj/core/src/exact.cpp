// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#include "exact.hpp"

#include <cmath>

namespace latstab::detail {
namespace mp = boost::multiprecision;
namespace {

// Exponents up to this bound are evaluated in exact rational arithmetic.
constexpr double kMaxExactPower = 256.0;

// Residual below which a 50-digit power sum is treated as a genuine tie.
const HighFloat kHighPrecisionTie("1e-40");

template <class Matrixish>
BigRational exact_matrix_box_gauge(const AxisBox& box, const Matrixish& m, bool transpose,
                                   std::span<const std::int64_t> z) {
  const std::size_t d = box.dim();
  BigRational best = 0;
  for (std::size_t j = 0; j < d; ++j) {
    BigRational y = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (z[i] == 0) continue;
      const double entry = transpose ? m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))
                                     : m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
      y += to_big(entry) * z[i];
    }
    if (y < 0) y = -y;
    BigRational g = y / to_big(box.semi_axis(j));
    if (g > best) best = g;
  }
  return best;
}

BigRational exact_box_gauge(const AxisBox& box, std::span<const std::int64_t> z) {
  return to_big(box_gauge(box, z));
}

}  // namespace

BigRational to_big(const Rational& r) { return BigRational(r.num(), r.den()); }

BigRational to_big(double x) { return BigRational(x); }

HighFloat to_high(const Rational& r) { return HighFloat(r.num()) / HighFloat(r.den()); }

std::optional<ExactGauge> exact_lattice_gauge(const Body& body, std::span<const std::int64_t> z) {
  if (const auto* box = std::get_if<AxisBox>(&body)) {
    return ExactGauge{exact_box_gauge(*box, z), true};
  }
  if (const auto* rot = std::get_if<RotatedBox>(&body)) {
    return ExactGauge{exact_matrix_box_gauge(rot->base(), rot->rotation().matrix(), true, z), false};
  }
  if (const auto* tb = std::get_if<TransformedBox>(&body)) {
    return ExactGauge{exact_matrix_box_gauge(tb->base(), tb->transform().inverse(), false, z), false};
  }
  const auto& ball = std::get<LpBall>(body);
  if (ball.p().is_infinite()) return ExactGauge{exact_box_gauge(ball.box(), z), true};
  std::size_t nonzero = 0;
  for (auto c : z) nonzero += c != 0 ? 1 : 0;
  // On a coordinate axis every Lp gauge reduces to |z_i| / a_i.
  if (nonzero <= 1) return ExactGauge{exact_box_gauge(ball.box(), z), true};
  return std::nullopt;
}

HighFloat lp_power_sum(const AxisBox& box, double p, std::span<const std::int64_t> z) {
  HighFloat sum = 0;
  const HighFloat hp(p);
  for (std::size_t i = 0; i < box.dim(); ++i) {
    if (z[i] == 0) continue;
    HighFloat ratio = HighFloat(z[i] < 0 ? -z[i] : z[i]) / to_high(box.semi_axis(i));
    sum += mp::exp(hp * mp::log(ratio));
  }
  return sum;
}

Membership resolve_near_boundary(const Body& body, std::span<const std::int64_t> z) {
  if (auto exact = exact_lattice_gauge(body, z)) {
    if (exact->value == 1) return Membership::inside;
    if (exact->faithful) return exact->value < 1 ? Membership::inside : Membership::outside;
    return Membership::boundary_ambiguous;
  }

  const auto& ball = std::get<LpBall>(body);
  const double p = ball.p().value();
  if (ball.p().is_integral() && p <= kMaxExactPower) {
    const auto power = static_cast<unsigned>(p);
    BigRational sum = 0;
    for (std::size_t i = 0; i < ball.dim(); ++i) {
      if (z[i] == 0) continue;
      const Rational& a = ball.box().semi_axis(i);
      const mp::cpp_int top = mp::cpp_int(z[i] < 0 ? -z[i] : z[i]) * a.den();
      sum += BigRational(mp::pow(top, power), mp::pow(mp::cpp_int(a.num()), power));
    }
    return sum <= 1 ? Membership::inside : Membership::outside;
  }

  HighFloat residual = lp_power_sum(ball.box(), p, z) - 1;
  if (mp::abs(residual) <= kHighPrecisionTie) return Membership::boundary_ambiguous;
  return residual < 0 ? Membership::inside : Membership::outside;
}

}  // namespace latstab::detail
