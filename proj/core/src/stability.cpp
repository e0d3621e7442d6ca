// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#include "latstab/stability.hpp"

#include <cmath>
#include <random>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "latstab/error.hpp"

namespace latstab {
namespace {

// Uniform on [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Rational isolation_distance(const AxisBox& box) {
  Rational best = Rational(box.semi_axis(0).floor() + 1) - box.semi_axis(0);
  for (const auto& a : box.semi_axes()) {
    const Rational gap = Rational(a.floor() + 1) - a;
    if (gap < best) best = gap;
  }
  return best;
}

StabilityReport stability_radius(const AxisBox& box) {
  StabilityReport rep;
  rep.delta = isolation_distance(box);
  rep.circumradius = circumradius(box);
  rep.radius = rep.delta.to_double() / rep.circumradius;
  return rep;
}

Rotation givens_rotation(std::size_t d, std::size_t i, std::size_t j, double theta) {
  if (!(i < j && j < d)) {
    throw Error("stability", "Givens plane needs 0 <= i < j < d, got (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") with d=" + std::to_string(d));
  }
  const auto n = static_cast<Eigen::Index>(d);
  Matrix m = Matrix::Identity(n, n);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const auto a = static_cast<Eigen::Index>(i);
  const auto b = static_cast<Eigen::Index>(j);
  m(a, a) = c;
  m(a, b) = -s;
  m(b, a) = s;
  m(b, b) = c;
  return Rotation(std::move(m));
}

double givens_angle_for_opnorm(double opnorm) {
  if (!(opnorm >= 0.0 && opnorm <= 2.0)) throw Error("stability", "opnorm of R - I lies in [0, 2]");
  return 2.0 * std::asin(opnorm / 2.0);
}

Rotation random_rotation(std::size_t d, std::uint64_t seed, double max_opnorm) {
  if (!(max_opnorm > 0.0 && max_opnorm <= 2.0)) {
    throw Error("stability", "max_opnorm must lie in (0, 2]");
  }
  if (d == 0) throw Error("stability", "dimension must be positive");
  std::mt19937_64 rng(seed);
  const auto n = static_cast<Eigen::Index>(d);
  Matrix skew = Matrix::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = r + 1; c < n; ++c) {
      const double v = 2.0 * unit_uniform(rng) - 1.0;
      skew(r, c) = v;
      skew(c, r) = -v;
    }
  }
  const double target = max_opnorm * (1.0 - unit_uniform(rng));
  const double norm = euclidean_opnorm(skew);
  if (norm == 0.0) return Rotation::identity(d);
  // exp(S) has rotation angles equal to the singular values of S, so with
  // ||S|| = theta <= pi the distance ||exp(S) - I|| is 2 sin(theta / 2).
  const double theta = givens_angle_for_opnorm(target);
  Matrix scaled_skew = skew * (theta / norm);
  Matrix r = scaled_skew.exp();
  return Rotation(std::move(r));
}

bool hull_corner_excluded(const AxisBox& box, const Rotation& r, double eps) {
  if (box.dim() != r.dim()) throw Error("stability", "rotation dimension does not match the box");
  const RotatedBox rotated(box, r);
  const Body body = rotated;
  const std::size_t d = box.dim();
  LatticePoint corner(d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    bool duplicate = false;
    for (std::size_t i = 0; i < d; ++i) {
      const std::int64_t f = box.semi_axis(i).floor();
      const bool negative = ((mask >> i) & 1U) != 0;
      // A zero coordinate has only one sign; skip the mirror mask.
      if (f == 0 && negative) duplicate = true;
      corner[i] = negative ? -f : f;
    }
    if (duplicate) continue;
    if (contains_lattice_point(body, corner, eps) == Membership::outside) return true;
  }
  return false;
}

bool corner_exclusion_check(const AxisBox& box, const Rotation& r, double eps) {
  if (!box.all_integer()) throw Error("stability", "corner exclusion needs integer semi-axes");
  if (box.dim() != r.dim()) throw Error("stability", "rotation dimension does not match the box");
  const auto n = static_cast<Eigen::Index>(box.dim());
  if (!(euclidean_opnorm(r.matrix() - Matrix::Identity(n, n)) > 1e-12)) {
    throw Error("stability", "corner exclusion needs R != I");
  }
  return hull_corner_excluded(box, r, eps);
}

bool basis_gauge_check(const AxisBox& box, const Rotation& r) {
  const Body body = RotatedBox(box, r);
  std::vector<double> e(box.dim(), 0.0);
  for (std::size_t i = 0; i < box.dim(); ++i) {
    e.assign(box.dim(), 0.0);
    e[i] = 1.0;
    if (gauge(body, e) > 1.0 / box.semi_axes_double()[i] + 1e-12) return false;
  }
  return true;
}

std::vector<SweepRecord> rotation_sweep(const AxisBox& box, const std::vector<Rotation>& rotations,
                                        double eps) {
  std::vector<SweepRecord> out;
  out.reserve(rotations.size());
  const auto n = static_cast<Eigen::Index>(box.dim());
  for (std::size_t k = 0; k < rotations.size(); ++k) {
    try {
      const Rotation& r = rotations[k];
      const Verdict v = verify(RotatedBox(box, r), eps);
      SweepRecord rec;
      rec.opnorm = euclidean_opnorm(r.matrix() - Matrix::Identity(n, n));
      rec.g = v.g;
      rec.rhs = v.rhs;
      rec.status = v.status;
      rec.corner_excluded = hull_corner_excluded(box, r, eps);
      out.push_back(rec);
    } catch (const Error& e) {
      throw Error("stability", "rotation #" + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace latstab
