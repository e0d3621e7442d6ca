// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Arbitrary-precision helpers shared by the library internals. Not installed.
#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "latstab/bodies.hpp"

namespace latstab::detail {

using BigRational = boost::multiprecision::cpp_rational;
using HighFloat = boost::multiprecision::cpp_bin_float_50;

BigRational to_big(const Rational& r);
/// Exact: every finite double is a dyadic rational.
BigRational to_big(double x);
HighFloat to_high(const Rational& r);

/// Gauge of a lattice point evaluated exactly on the stored data.
///
/// `faithful` is true when the stored data *is* the body (rational boxes,
/// single-coordinate Lp points). For matrix bodies the stored doubles only
/// approximate an ideal rotation/transform, so an exact value that is merely
/// close to a threshold does not decide anything; only an exact hit does.
struct ExactGauge {
  BigRational value;
  bool faithful;
};

std::optional<ExactGauge> exact_lattice_gauge(const Body& body, std::span<const std::int64_t> z);

/// Decides membership of a lattice point whose floating gauge landed in the
/// eps band. Returns boundary_ambiguous when no finer evaluation settles it.
Membership resolve_near_boundary(const Body& body, std::span<const std::int64_t> z);

/// sum_i |z_i / a_i|^p in 50-digit precision (finite p).
HighFloat lp_power_sum(const AxisBox& box, double p, std::span<const std::int64_t> z);

}  // namespace latstab::detail
