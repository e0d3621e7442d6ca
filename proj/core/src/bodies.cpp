// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#include "latstab/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "exact.hpp"
#include "latstab/error.hpp"

namespace latstab {
namespace {

void require_dim(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error("bodies", "dimension mismatch: body has d=" + std::to_string(expected) +
                              ", vector has " + std::to_string(got));
  }
}

double max_abs_entry(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// max_j |y_j| / a_j
double box_gauge_double(const std::vector<double>& axes, std::span<const double> y) {
  double g = 0.0;
  for (std::size_t j = 0; j < axes.size(); ++j) g = std::max(g, std::abs(y[j]) / axes[j]);
  return g;
}

// Applies m (or its transpose) to x, then evaluates the box gauge.
double matrix_box_gauge(const AxisBox& box, const Matrix& m, bool transpose,
                        std::span<const double> x) {
  const auto& axes = box.semi_axes_double();
  const auto d = static_cast<Eigen::Index>(box.dim());
  double g = 0.0;
  for (Eigen::Index j = 0; j < d; ++j) {
    double y = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      y += (transpose ? m(i, j) : m(j, i)) * x[static_cast<std::size_t>(i)];
    }
    g = std::max(g, std::abs(y) / axes[static_cast<std::size_t>(j)]);
  }
  return g;
}

double lp_gauge_double(const LpBall& ball, std::span<const double> x) {
  const auto& axes = ball.box().semi_axes_double();
  if (ball.p().is_infinite()) return box_gauge_double(axes, x);
  // Factor out the largest term so t^p cannot underflow for large p.
  double m = 0.0;
  for (std::size_t i = 0; i < axes.size(); ++i) m = std::max(m, std::abs(x[i]) / axes[i]);
  if (m == 0.0) return 0.0;
  const double p = ball.p().value();
  double sum = 0.0;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const double t = std::abs(x[i]) / axes[i] / m;
    if (t > 0.0) sum += std::pow(t, p);
  }
  return m * std::pow(sum, 1.0 / p);
}

Membership band(double g, double eps) {
  if (g <= 1.0 - eps) return Membership::inside;
  if (g >= 1.0 + eps) return Membership::outside;
  return Membership::boundary_ambiguous;
}

Membership exact_box_contains(const AxisBox& box, std::span<const double> x) {
  for (std::size_t i = 0; i < box.dim(); ++i) {
    if (!std::isfinite(x[i])) return Membership::outside;
    if (detail::to_big(std::abs(x[i])) > detail::to_big(box.semi_axis(i))) return Membership::outside;
  }
  return Membership::inside;
}

}  // namespace

AxisBox::AxisBox(std::vector<Rational> semi_axes) : semi_axes_(std::move(semi_axes)) {
  if (semi_axes_.empty()) throw Error("bodies", "box needs at least one semi-axis");
  for (std::size_t i = 0; i < semi_axes_.size(); ++i) {
    if (!semi_axes_[i].is_positive()) {
      throw Error("bodies", "semi-axis " + std::to_string(i) + " is not positive: " +
                                semi_axes_[i].to_string());
    }
  }
  approx_.reserve(semi_axes_.size());
  for (const auto& a : semi_axes_) approx_.push_back(a.to_double());
  order_.resize(semi_axes_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t a, std::size_t b) { return semi_axes_[a] > semi_axes_[b]; });
}

bool AxisBox::has_integer_semi_axis() const noexcept {
  return std::any_of(semi_axes_.begin(), semi_axes_.end(), [](const Rational& a) { return a.is_integer(); });
}

bool AxisBox::all_integer() const noexcept {
  return std::all_of(semi_axes_.begin(), semi_axes_.end(), [](const Rational& a) { return a.is_integer(); });
}

AxisBox AxisBox::scaled(const Rational& t) const {
  if (!t.is_positive()) throw Error("bodies", "scale factor must be positive");
  std::vector<Rational> axes;
  axes.reserve(semi_axes_.size());
  for (const auto& a : semi_axes_) axes.push_back(a * t);
  return AxisBox(std::move(axes));
}

Rotation::Rotation(Matrix matrix, double tol) : matrix_(std::move(matrix)), tol_(tol) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw Error("bodies", "rotation must be a non-empty square matrix");
  }
  const auto d = matrix_.rows();
  const double err = max_abs_entry(matrix_.transpose() * matrix_ - Matrix::Identity(d, d));
  if (!(err <= tol_)) {
    throw Error("bodies", "matrix is not orthogonal: |R^T R - I|_max = " + std::to_string(err));
  }
  if (!(matrix_.determinant() > 0.0)) throw Error("bodies", "rotation must have det > 0");
}

Rotation Rotation::identity(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return Rotation(Matrix::Identity(n, n));
}

Transform::Transform(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw Error("bodies", "transform must be a non-empty square matrix");
  }
  Eigen::FullPivLU<Matrix> lu(matrix_);
  if (!lu.isInvertible()) throw Error("bodies", "transform is singular");
  inverse_ = lu.inverse();
  const auto d = matrix_.rows();
  const double err = max_abs_entry(matrix_ * inverse_ - Matrix::Identity(d, d));
  if (!(err <= 1e-10)) throw Error("bodies", "transform is too ill-conditioned to invert");
}

RotatedBox::RotatedBox(AxisBox base, Rotation rotation)
    : base_(std::move(base)), rotation_(std::move(rotation)) {
  require_dim(base_.dim(), rotation_.dim());
}

Exponent::Exponent(double p) : value_(p), infinite_(false) {
  if (std::isinf(p) && p > 0) {
    value_ = 0.0;
    infinite_ = true;
    return;
  }
  if (!(p >= 1.0)) throw Error("bodies", "Lp exponent must satisfy p >= 1");
}

bool Exponent::is_integral() const noexcept { return !infinite_ && std::floor(value_) == value_; }

LpBall::LpBall(Exponent p, std::vector<Rational> semi_axes) : p_(p), box_(std::move(semi_axes)) {}

TransformedBox::TransformedBox(AxisBox base, Transform transform)
    : base_(std::move(base)), transform_(std::move(transform)) {
  require_dim(base_.dim(), transform_.dim());
}

const char* to_string(Membership m) noexcept {
  switch (m) {
    case Membership::inside: return "inside";
    case Membership::outside: return "outside";
    case Membership::boundary_ambiguous: return "boundary-ambiguous";
  }
  return "?";
}

std::size_t dim(const Body& body) noexcept {
  return std::visit([](const auto& b) { return b.dim(); }, body);
}

double gauge(const Body& body, std::span<const double> x) {
  require_dim(dim(body), x.size());
  if (const auto* box = std::get_if<AxisBox>(&body)) return box_gauge_double(box->semi_axes_double(), x);
  if (const auto* rot = std::get_if<RotatedBox>(&body)) {
    return matrix_box_gauge(rot->base(), rot->rotation().matrix(), true, x);
  }
  if (const auto* tb = std::get_if<TransformedBox>(&body)) {
    return matrix_box_gauge(tb->base(), tb->transform().inverse(), false, x);
  }
  return lp_gauge_double(std::get<LpBall>(body), x);
}

double gauge(const Body& body, const Vector& x) {
  return gauge(body, std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
}

Rational box_gauge(const AxisBox& box, std::span<const std::int64_t> z) {
  require_dim(box.dim(), z.size());
  Rational best(0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == 0) continue;
    Rational g = Rational(z[i] < 0 ? -z[i] : z[i]) / box.semi_axis(i);
    if (g > best) best = g;
  }
  return best;
}

Membership contains(const Body& body, std::span<const double> x, double eps) {
  require_dim(dim(body), x.size());
  if (eps < 0.0) throw Error("bodies", "eps must be nonnegative");
  if (const auto* box = std::get_if<AxisBox>(&body)) return exact_box_contains(*box, x);
  if (const auto* ball = std::get_if<LpBall>(&body); ball && ball->p().is_infinite()) {
    return exact_box_contains(ball->box(), x);
  }
  return band(gauge(body, x), eps);
}

Membership contains(const Body& body, const Vector& x, double eps) {
  return contains(body, std::span<const double>(x.data(), static_cast<std::size_t>(x.size())), eps);
}

Membership contains_lattice_point(const Body& body, std::span<const std::int64_t> z, double eps) {
  require_dim(dim(body), z.size());
  if (eps < 0.0) throw Error("bodies", "eps must be nonnegative");
  const AxisBox* box = std::get_if<AxisBox>(&body);
  if (const auto* ball = std::get_if<LpBall>(&body); ball && ball->p().is_infinite()) box = &ball->box();
  if (box != nullptr) {
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (Rational(z[i] < 0 ? -z[i] : z[i]) > box->semi_axis(i)) return Membership::outside;
    }
    return Membership::inside;
  }

  std::vector<double> x(z.begin(), z.end());
  const Membership fast = band(gauge(body, x), eps);
  if (fast != Membership::boundary_ambiguous) return fast;
  return detail::resolve_near_boundary(body, z);
}

double circumradius(const Body& body) {
  const AxisBox* box = std::get_if<AxisBox>(&body);
  if (const auto* rot = std::get_if<RotatedBox>(&body)) box = &rot->base();
  if (box == nullptr) throw Error("bodies", "circumradius is only defined for axis and rotated boxes");
  Rational sum(0);
  for (const auto& a : box->semi_axes()) sum += a * a;
  return std::sqrt(sum.to_double());
}

double box_gauge_opnorm(const AxisBox& box, const Matrix& a) {
  const auto d = static_cast<Eigen::Index>(box.dim());
  if (a.rows() != d || a.cols() != d) throw Error("bodies", "operator dimension mismatch");
  const auto& alpha = box.semi_axes_double();
  double best = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) row += std::abs(a(i, j)) * alpha[static_cast<std::size_t>(j)];
    best = std::max(best, row / alpha[static_cast<std::size_t>(i)]);
  }
  return best;
}

double euclidean_opnorm(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error("bodies", "operator norm needs a square matrix");
  if (a.size() == 0) return 0.0;
  // One-sided Jacobi (Hestenes): rotate column pairs until mutually
  // orthogonal; the column norms are then the singular values.
  Matrix u = a;
  const Eigen::Index n = u.cols();
  constexpr int kMaxSweeps = 60;
  constexpr double kOrthoTol = 1e-13;
  bool converged = n < 2;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double alpha = u.col(p).squaredNorm();
        const double beta = u.col(q).squaredNorm();
        const double gamma = u.col(p).dot(u.col(q));
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::abs(gamma) <= kOrthoTol * std::sqrt(alpha * beta)) continue;
        converged = false;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (Eigen::Index k = 0; k < u.rows(); ++k) {
          const double up = u(k, p);
          const double uq = u(k, q);
          u(k, p) = c * up - s * uq;
          u(k, q) = s * up + c * uq;
        }
      }
    }
  }
  if (!converged) throw Error("bodies", "singular value iteration did not converge");
  double best = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) best = std::max(best, u.col(j).norm());
  return best;
}

Body scaled(const Body& body, const Rational& t) {
  if (const auto* box = std::get_if<AxisBox>(&body)) return box->scaled(t);
  if (const auto* rot = std::get_if<RotatedBox>(&body)) return RotatedBox(rot->base().scaled(t), rot->rotation());
  if (const auto* tb = std::get_if<TransformedBox>(&body)) {
    return TransformedBox(tb->base().scaled(t), tb->transform());
  }
  const auto& ball = std::get<LpBall>(body);
  return LpBall(ball.p(), ball.box().scaled(t).semi_axes());
}

}  // namespace latstab
