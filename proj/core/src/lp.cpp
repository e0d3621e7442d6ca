// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#include "latstab/lp.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "exact.hpp"
#include "latstab/error.hpp"

namespace latstab {
namespace {

namespace mp = boost::multiprecision;
using detail::HighFloat;

double round_up_to_double(const HighFloat& x) {
  double d = x.convert_to<double>();
  if (HighFloat(d) < x) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

}  // namespace

ThresholdReport p_threshold(const AxisBox& box) {
  ThresholdReport rep;
  Rational beta_max(0);
  for (std::size_t i = 0; i < box.dim(); ++i) {
    const Rational& a = box.semi_axis(i);
    if (a.floor() == 0) {
      rep.excluded.push_back(i);
      continue;
    }
    if (a.is_integer()) {
      throw Error("lp", "semi-axis " + std::to_string(i) + " = " + a.to_string() +
                            " is an integer; integer-hull invariance needs non-integer semi-axes");
    }
    ++rep.effective_dim;
    const Rational beta = Rational(a.floor()) / a;
    if (beta > beta_max) beta_max = beta;
  }
  rep.beta_max = beta_max.to_double();

  if (rep.effective_dim == 0) {
    rep.p0 = 1.0;
    rep.note = "every coordinate has floor(a_i) = 0; only the origin is a lattice point";
    return rep;
  }
  const HighFloat threshold =
      mp::log(HighFloat(rep.effective_dim)) / -mp::log(detail::to_high(beta_max));
  if (threshold <= 1) {
    rep.p0 = 1.0;
    rep.note = "threshold below 1 clamped to p = 1";
    return rep;
  }
  rep.p0 = round_up_to_double(threshold);
  return rep;
}

CountResult count_lp(const AxisBox& box, Exponent p, double eps) {
  return count_lattice_points(LpBall(p, box.semi_axes()), eps);
}

std::vector<LatticePoint> lp_lattice_points(const AxisBox& box, Exponent p, double eps) {
  return list_lattice_points(LpBall(p, box.semi_axes()), eps);
}

std::vector<double> default_threshold_grid(double p0) { return {p0, p0 + 0.5, 2.0 * p0, 10.0 * p0}; }

bool threshold_sufficiency_check(const AxisBox& box, const std::vector<double>& grid, double eps) {
  const ThresholdReport rep = p_threshold(box);
  const CountResult box_count = count_lp(box, Exponent::infinity(), eps);
  const auto box_points = lp_lattice_points(box, Exponent::infinity(), eps);
  for (double p : grid) {
    if (!(p >= rep.p0)) {
      throw Error("lp", "grid value " + std::to_string(p) + " lies below p0 = " + std::to_string(rep.p0));
    }
    const Exponent e(p);
    if (count_lp(box, e, eps).count != box_count.count) return false;
    if (lp_lattice_points(box, e, eps) != box_points) return false;
  }
  return true;
}

double empirical_threshold(const AxisBox& box, double tol, double eps) {
  if (!(tol > 0.0)) throw Error("lp", "bisection tolerance must be positive");
  const ThresholdReport rep = p_threshold(box);
  const auto target = lp_lattice_points(box, Exponent::infinity(), eps);
  auto invariant_at = [&](double p) { return lp_lattice_points(box, Exponent(p), eps) == target; };

  if (invariant_at(1.0)) return 1.0;
  double lo = 1.0;
  double hi = rep.p0;
  if (!invariant_at(hi)) {
    throw Error("lp", "internal error: point set differs at p0 = " + std::to_string(hi));
  }
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2.0;
    if (invariant_at(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

bool integer_alpha_exclusion_check(const AxisBox& box, const std::vector<double>& grid, double eps) {
  if (!box.has_integer_semi_axis()) throw Error("lp", "exclusion check needs an integer semi-axis");
  const std::uint64_t box_count = count_box_closed_form(box);
  bool all_below = true;
  for (double p : grid) {
    if (!std::isfinite(p)) throw Error("lp", "exclusion check needs finite exponents");
    if (count_lp(box, Exponent(p), eps).count >= box_count) all_below = false;
  }
  return all_below;
}

}  // namespace latstab
