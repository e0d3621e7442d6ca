// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "latstab/bhw.hpp"
#include "latstab/bodies.hpp"

namespace latstab {

/// Euclidean distance from the box to the nearest lattice point outside it:
/// min_i (floor(a_i) + 1 - a_i). Exact.
Rational isolation_distance(const AxisBox& box);

struct StabilityReport {
  Rational delta;
  double radius = 0.0;
  double circumradius = 0.0;
};

/// Rotations with ||R - I|| below `radius` = delta / circumradius cannot move
/// an exterior lattice point into the rotated box.
StabilityReport stability_radius(const AxisBox& box);

/// Plane rotation by theta in coordinates (i, j); ||R - I|| = 2 |sin(theta/2)|.
Rotation givens_rotation(std::size_t d, std::size_t i, std::size_t j, double theta);

/// Largest plane-rotation angle in [0, pi] whose distance to I is `opnorm`.
double givens_angle_for_opnorm(double opnorm);

/// exp of a seeded random skew-symmetric matrix, scaled so that ||R - I|| is
/// uniform on (0, max_opnorm]. Same seed, same matrix.
Rotation random_rotation(std::size_t d, std::uint64_t seed, double max_opnorm);

/// Whether some vertex (+-floor(a_1), ..., +-floor(a_d)) of the box's integer
/// hull lies strictly outside R * box.
bool hull_corner_excluded(const AxisBox& box, const Rotation& r, double eps = kDefaultEps);

/// Integer box and R != I: at least one corner leaves R * box.
bool corner_exclusion_check(const AxisBox& box, const Rotation& r, double eps = kDefaultEps);

/// ||e_i||_{R box} <= 1 / a_i (+1e-12) for every i, which forces
/// lambda_i(R box) <= lambda_i(box) index by index.
bool basis_gauge_check(const AxisBox& box, const Rotation& r);

struct SweepRecord {
  double opnorm = 0.0;
  std::uint64_t g = 0;
  std::int64_t rhs = 0;
  Status status = Status::boundary_ambiguous;
  bool corner_excluded = false;
};

/// One verify() per rotation, in input order.
std::vector<SweepRecord> rotation_sweep(const AxisBox& box, const std::vector<Rotation>& rotations,
                                        double eps = kDefaultEps);

}  // namespace latstab
