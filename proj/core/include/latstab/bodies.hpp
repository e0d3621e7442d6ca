// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "latstab/rational.hpp"

namespace latstab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using LatticePoint = std::vector<std::int64_t>;

inline constexpr double kDefaultEps = 1e-9;

/// o-symmetric axis-aligned box prod [-a_i, a_i] with exact rational semi-axes.
class AxisBox {
 public:
  explicit AxisBox(std::vector<Rational> semi_axes);

  std::size_t dim() const noexcept { return semi_axes_.size(); }
  const std::vector<Rational>& semi_axes() const noexcept { return semi_axes_; }
  const Rational& semi_axis(std::size_t i) const { return semi_axes_.at(i); }
  /// Floating copies of the semi-axes, same order.
  const std::vector<double>& semi_axes_double() const noexcept { return approx_; }
  /// Indices sorted so that semi-axes are non-increasing; ties keep index order.
  const std::vector<std::size_t>& descending_order() const noexcept { return order_; }

  bool has_integer_semi_axis() const noexcept;
  bool all_integer() const noexcept;
  AxisBox scaled(const Rational& t) const;

  friend bool operator==(const AxisBox& a, const AxisBox& b) { return a.semi_axes_ == b.semi_axes_; }

 private:
  std::vector<Rational> semi_axes_;
  std::vector<double> approx_;
  std::vector<std::size_t> order_;
};

/// Proper rotation: orthogonal within `tol` (max-entry norm) with det > 0.
class Rotation {
 public:
  explicit Rotation(Matrix matrix, double tol = 1e-12);
  static Rotation identity(std::size_t d);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const noexcept { return matrix_; }
  double tolerance() const noexcept { return tol_; }

 private:
  Matrix matrix_;
  double tol_;
};

/// Invertible linear map together with its inverse.
class Transform {
 public:
  explicit Transform(Matrix matrix);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const noexcept { return matrix_; }
  const Matrix& inverse() const noexcept { return inverse_; }

 private:
  Matrix matrix_;
  Matrix inverse_;
};

/// The body R * base.
class RotatedBox {
 public:
  RotatedBox(AxisBox base, Rotation rotation);

  std::size_t dim() const noexcept { return base_.dim(); }
  const AxisBox& base() const noexcept { return base_; }
  const Rotation& rotation() const noexcept { return rotation_; }

 private:
  AxisBox base_;
  Rotation rotation_;
};

/// Exponent p >= 1 of an Lp ball; infinity is a distinct state, not a large float.
class Exponent {
 public:
  explicit Exponent(double p);
  static Exponent infinity() noexcept { return Exponent(); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Finite value; undefined meaning when is_infinite().
  double value() const noexcept { return value_; }
  bool is_integral() const noexcept;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent() noexcept : value_(0.0), infinite_(true) {}
  double value_;
  bool infinite_;
};

/// K_p(a) = { x : sum |x_i / a_i|^p <= 1 }; equals the box with the same
/// semi-axes when p is infinite.
class LpBall {
 public:
  LpBall(Exponent p, std::vector<Rational> semi_axes);

  std::size_t dim() const noexcept { return box_.dim(); }
  const Exponent& p() const noexcept { return p_; }
  const AxisBox& box() const noexcept { return box_; }

 private:
  Exponent p_;
  AxisBox box_;
};

/// The body T * base for a general invertible T. Used internally by the
/// successive-minima sandwich checker; gauge is ||T^-1 x||_base.
class TransformedBox {
 public:
  TransformedBox(AxisBox base, Transform transform);

  std::size_t dim() const noexcept { return base_.dim(); }
  const AxisBox& base() const noexcept { return base_; }
  const Transform& transform() const noexcept { return transform_; }

 private:
  AxisBox base_;
  Transform transform_;
};

using Body = std::variant<AxisBox, RotatedBox, LpBall, TransformedBox>;

enum class Membership { inside, outside, boundary_ambiguous };

const char* to_string(Membership m) noexcept;

std::size_t dim(const Body& body) noexcept;

/// Minkowski functional ||x||_K.
double gauge(const Body& body, std::span<const double> x);
double gauge(const Body& body, const Vector& x);

/// Exact box gauge max_i |z_i| / a_i of a lattice point.
Rational box_gauge(const AxisBox& box, std::span<const std::int64_t> z);

/// Three-valued membership with an eps band around the boundary. Axis boxes
/// (and Lp balls with infinite exponent) are decided exactly and are never
/// ambiguous.
Membership contains(const Body& body, std::span<const double> x, double eps = kDefaultEps);
Membership contains(const Body& body, const Vector& x, double eps = kDefaultEps);

/// Membership of an integer point. Near-boundary cases are re-decided with
/// exact or high-precision arithmetic where the body admits it; see
/// enumeration.hpp for how ambiguous answers are reported.
Membership contains_lattice_point(const Body& body, std::span<const std::int64_t> z,
                                  double eps = kDefaultEps);

/// Radius of the smallest origin-centred ball containing the body:
/// sqrt(sum a_i^2). Only defined for axis and rotated boxes.
double circumradius(const Body& body);

/// Exact operator norm of `a` with respect to the box gauge:
/// max_i (sum_j |a_ij| alpha_j) / alpha_i.
double box_gauge_opnorm(const AxisBox& box, const Matrix& a);

/// Largest singular value by one-sided Jacobi iteration (relative tol 1e-10).
double euclidean_opnorm(const Matrix& a);

/// Dilate by an exact positive factor: t * K.
Body scaled(const Body& body, const Rational& t);

}  // namespace latstab
