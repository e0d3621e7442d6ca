// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "latstab/bodies.hpp"

namespace latstab {

/// Successive minima lambda_1 <= ... <= lambda_d with one achieving lattice
/// vector per index. `exact` is filled on rational paths (axis boxes).
struct MinimaResult {
  std::vector<double> lambdas;
  std::optional<std::vector<Rational>> exact;
  std::vector<LatticePoint> witnesses;
};

struct MinimaOptions {
  std::size_t max_dim = 8;
  int max_doublings = 20;
};

/// Sorted-gauge enumeration with greedy rank growth. The search radius starts
/// at the shortest basis-vector gauge and doubles until d independent vectors
/// lie within it. Witnesses are taken with their first nonzero coordinate
/// positive; equal gauges go to the smaller l1 norm, then to the
/// lexicographically larger vector, so e_1 precedes e_2.
MinimaResult successive_minima(const Body& body, const MinimaOptions& options = {});

/// lambda_i = 1 / a_(i) with the semi-axes sorted non-increasingly.
MinimaResult box_minima_closed_form(const AxisBox& box);

/// Rank over Q of a set of integer vectors (fraction-free elimination).
std::size_t integer_rank(const std::vector<LatticePoint>& vectors);

/// Comparison of lambda_i(K) and lambda_i(TK) for a box K.
///
/// With eps = ||T - I||_K and eps' = ||T^-1 - I||_K one has TK in (1+eps)K and
/// K in (1+eps')TK, which bound lambda_i(TK) to
///   [lambda_i / (1 + eps), (1 + eps') lambda_i]        ("inclusion" bounds).
/// The same bounds are also evaluated with eps and eps' exchanged,
///   [lambda_i / (1 + eps'), (1 + eps) lambda_i]        ("exchanged" bounds),
/// which coincide with the inclusion bounds whenever eps == eps' (rotations).
struct SandwichReport {
  double epsilon = 0.0;
  double epsilon_prime = 0.0;
  std::vector<double> lambdas;
  std::vector<double> transformed_lambdas;
  std::vector<double> inclusion_lower, inclusion_upper;
  std::vector<bool> inclusion_holds;
  std::vector<double> exchanged_lower, exchanged_upper;
  std::vector<bool> exchanged_holds;

  bool all_inclusion_hold() const;
  bool all_exchanged_hold() const;
};

inline constexpr double kSandwichSlack = 1e-9;

SandwichReport check_minima_sandwich(const AxisBox& box, const Transform& t,
                                     double slack = kSandwichSlack);

}  // namespace latstab
