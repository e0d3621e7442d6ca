// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latstab/bodies.hpp"
#include "latstab/enumeration.hpp"

namespace latstab {

/// Exponent beyond which the lattice points of K_p(a) are those of the box.
///
/// Coordinates with floor(a_i) = 0 force z_i = 0 and are listed in
/// `excluded`; the threshold ln(d_eff) / ln(1 / beta_max) uses the remaining
/// d_eff coordinates, beta_i = floor(a_i) / a_i. `p0` is rounded up to the
/// next double and clamped to at least 1.
struct ThresholdReport {
  double p0 = 1.0;
  std::vector<std::size_t> excluded;
  double beta_max = 0.0;
  std::size_t effective_dim = 0;
  std::string note;
};

/// Throws latstab::Error if a coordinate with floor(a_i) >= 1 has integer a_i.
ThresholdReport p_threshold(const AxisBox& box);

CountResult count_lp(const AxisBox& box, Exponent p, double eps = kDefaultEps);
std::vector<LatticePoint> lp_lattice_points(const AxisBox& box, Exponent p, double eps = kDefaultEps);

/// {p0, p0 + 0.5, 2 p0, 10 p0}
std::vector<double> default_threshold_grid(double p0);

/// Same count and same point set as the box for every p in the grid (all p >= p0).
bool threshold_sufficiency_check(const AxisBox& box, const std::vector<double>& grid,
                                 double eps = kDefaultEps);

/// Smallest p (to within tol, by bisection on [1, p0]) at which the point set
/// already equals the box's. Never exceeds p0.
double empirical_threshold(const AxisBox& box, double tol = 1e-6, double eps = kDefaultEps);

/// For a box with some integer semi-axis: count at every finite p of the grid
/// is strictly below the box count.
bool integer_alpha_exclusion_check(const AxisBox& box, const std::vector<double>& grid,
                                   double eps = kDefaultEps);

}  // namespace latstab
