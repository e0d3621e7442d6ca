// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#include "latstab/enumeration.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "latstab/error.hpp"

namespace latstab {
namespace {

std::vector<double> support_of_box_image(const AxisBox& box, const Matrix& m) {
  const auto& alpha = box.semi_axes_double();
  const auto d = static_cast<Eigen::Index>(box.dim());
  std::vector<double> h(box.dim(), 0.0);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      h[static_cast<std::size_t>(i)] += std::abs(m(i, j)) * alpha[static_cast<std::size_t>(j)];
    }
  }
  return h;
}

void check_dim(const Body& body, const EnumerationLimits& limits) {
  if (dim(body) > limits.max_dim) {
    throw Error("enumeration", "dimension " + std::to_string(dim(body)) + " exceeds cap " +
                                   std::to_string(limits.max_dim));
  }
}

}  // namespace

const char* to_string(CountMethod m) noexcept {
  return m == CountMethod::closed_form ? "closed-form" : "brute-force";
}

std::vector<double> bounding_half_widths(const Body& body) {
  if (const auto* box = std::get_if<AxisBox>(&body)) return box->semi_axes_double();
  if (const auto* ball = std::get_if<LpBall>(&body)) return ball->box().semi_axes_double();
  if (const auto* rot = std::get_if<RotatedBox>(&body)) {
    return support_of_box_image(rot->base(), rot->rotation().matrix());
  }
  const auto& tb = std::get<TransformedBox>(body);
  return support_of_box_image(tb.base(), tb.transform().matrix());
}

std::vector<std::int64_t> candidate_radii(const Body& body, double eps) {
  std::vector<std::int64_t> radii;
  const AxisBox* box = std::get_if<AxisBox>(&body);
  if (const auto* ball = std::get_if<LpBall>(&body)) box = &ball->box();
  if (box != nullptr) {
    for (const auto& a : box->semi_axes()) radii.push_back(a.floor());
    return radii;
  }
  // Anything within the eps band has gauge < 1 + eps, hence |z_i| < h_i (1 + eps).
  for (double h : bounding_half_widths(body)) {
    const double reach = h * (1.0 + eps) * (1.0 + 1e-12);
    if (!(reach < 9.0e15)) throw Error("enumeration", "bounding box too large to enumerate");
    radii.push_back(static_cast<std::int64_t>(std::floor(reach)));
  }
  return radii;
}

void for_each_candidate(std::span<const std::int64_t> radii, const EnumerationLimits& limits,
                        const std::function<void(std::span<const std::int64_t>)>& visit) {
  long double total = 1.0L;
  for (auto m : radii) total *= static_cast<long double>(2 * m + 1);
  if (total > static_cast<long double>(limits.max_candidates)) {
    throw Error("enumeration", "iteration space of " + std::to_string(static_cast<double>(total)) +
                                   " candidates exceeds the limit of " +
                                   std::to_string(limits.max_candidates));
  }
  const std::size_t d = radii.size();
  LatticePoint z(d);
  for (std::size_t i = 0; i < d; ++i) z[i] = -radii[i];
  while (true) {
    visit(z);
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (z[k] < radii[k]) {
        ++z[k];
        break;
      }
      z[k] = -radii[k];
      if (k == 0) return;
    }
    if (d == 0) return;
  }
}

CountResult count_lattice_points(const Body& body, double eps, const EnumerationLimits& limits) {
  check_dim(body, limits);
  CountResult result;
  result.method = CountMethod::brute_force;
  for_each_candidate(candidate_radii(body, eps), limits, [&](std::span<const std::int64_t> z) {
    switch (contains_lattice_point(body, z, eps)) {
      case Membership::inside: ++result.count; break;
      case Membership::boundary_ambiguous: ++result.ambiguous; break;
      case Membership::outside: break;
    }
  });
  return result;
}

std::uint64_t count_box_closed_form(const AxisBox& box) {
  std::uint64_t product = 1;
  for (const auto& a : box.semi_axes()) {
    const auto factor = static_cast<std::uint64_t>(2 * a.floor() + 1);
    if (product > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw Error("enumeration", "lattice point count overflows 64 bits");
    }
    product *= factor;
  }
  return product;
}

std::vector<LatticePoint> list_lattice_points(const Body& body, double eps,
                                              const EnumerationLimits& limits) {
  check_dim(body, limits);
  std::vector<LatticePoint> points;
  for_each_candidate(candidate_radii(body, eps), limits, [&](std::span<const std::int64_t> z) {
    if (contains_lattice_point(body, z, eps) == Membership::inside) points.emplace_back(z.begin(), z.end());
  });
  return points;
}

}  // namespace latstab
