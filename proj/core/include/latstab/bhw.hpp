// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latstab/bodies.hpp"

namespace latstab {

struct FloorResult {
  std::int64_t value = 0;
  bool snapped = false;
};

/// floor(x), except that x within eps of an integer n returns n and reports
/// the snap.
FloorResult floor_safe(double x, double eps = kDefaultEps);
/// Exact floor; never snaps.
FloorResult floor_safe(const Rational& x);

struct RhsResult {
  std::int64_t value = 0;
  bool snapped = false;
};

/// prod floor(2 / lambda_i + 1).
RhsResult rhs_functional(std::span<const double> lambdas, double eps = kDefaultEps);
RhsResult rhs_functional(std::span<const Rational> lambdas);

/// 2 floor(x) + 1 <= floor(2x + 1).
bool floor_inequality_check(double x);
bool floor_inequality_check(const Rational& x);

enum class Status { tight, strict, violation, boundary_ambiguous };

const char* to_string(Status s) noexcept;

struct Verdict {
  std::uint64_t g = 0;
  std::int64_t rhs = 0;
  std::vector<double> lambdas;
  std::optional<std::vector<Rational>> exact_lambdas;
  Status status = Status::boundary_ambiguous;
  std::uint64_t ambiguous_points = 0;
  /// A floor factor of the right-hand side had to be snapped.
  bool rhs_snapped = false;
  /// Set when a floating-path violation could not be confirmed exactly.
  std::string diagnostic;
};

/// Status from the raw ingredients; a raw `violation` here is still subject
/// to confirmation in verify().
Status classify_verdict(std::uint64_t g, std::int64_t rhs, std::uint64_t ambiguous_points,
                        bool rhs_snapped) noexcept;

/// Lattice point count against prod floor(2 / lambda_i + 1) for one body.
Verdict verify(const Body& body, double eps = kDefaultEps);

}  // namespace latstab
