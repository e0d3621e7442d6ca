// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Random inputs and slow, independent reference implementations shared by the
// unit tests and the acceptance runner. Nothing here calls the library code it
// is used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "latstab/bodies.hpp"
#include "latstab/rational.hpp"

namespace latstab::testing {

/// Rational semi-axis in [lo, hi] with denominator at most max_den.
inline Rational random_alpha(std::mt19937_64& rng, double lo = 0.2, double hi = 3.4, int max_den = 10) {
  std::uniform_int_distribution<int> den_dist(1, max_den);
  for (;;) {
    const std::int64_t den = den_dist(rng);
    std::uniform_int_distribution<std::int64_t> num_dist(static_cast<std::int64_t>(std::ceil(lo * den)),
                                                         static_cast<std::int64_t>(std::floor(hi * den)));
    const std::int64_t num = num_dist(rng);
    if (num > 0) return Rational(num, den);
  }
}

inline std::vector<Rational> random_alphas(std::mt19937_64& rng, std::size_t d, double lo = 0.2, double hi = 3.4) {
  std::vector<Rational> a;
  for (std::size_t i = 0; i < d; ++i) a.push_back(random_alpha(rng, lo, hi));
  return a;
}

/// Same, rejecting integers.
inline std::vector<Rational> random_fractional_alphas(std::mt19937_64& rng, std::size_t d, double lo = 0.2,
                                                      double hi = 3.4) {
  std::vector<Rational> a;
  while (a.size() < d) {
    Rational r = random_alpha(rng, lo, hi);
    if (!r.is_integer()) a.push_back(r);
  }
  return a;
}

/// Calls visit on every integer vector in [-r_i, r_i].
inline void for_each_in_cube(const std::vector<std::int64_t>& r,
                             const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> z(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) z[i] = -r[i];
  for (;;) {
    visit(z);
    std::size_t k = 0;
    for (; k < z.size() && z[k] == r[k]; ++k) z[k] = -r[k];
    if (k == z.size()) return;
    ++z[k];
  }
}

/// |z| * den <= num, integer arithmetic only.
inline bool in_box_exact(const std::vector<Rational>& a, const std::vector<std::int64_t>& z) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::llabs(z[i]) * a[i].den() > a[i].num()) return false;
  }
  return true;
}

inline std::uint64_t brute_box_count(const std::vector<Rational>& a) {
  std::vector<std::int64_t> r;
  for (const auto& x : a) r.push_back(x.num() / x.den() + 1);
  std::uint64_t n = 0;
  for_each_in_cube(r, [&](const std::vector<std::int64_t>& z) { n += in_box_exact(a, z) ? 1 : 0; });
  return n;
}

/// Lattice points with sum |z_i/a_i|^p <= 1, long double, no tie handling.
inline std::vector<std::vector<std::int64_t>> brute_lp_points(const std::vector<Rational>& a, double p) {
  std::vector<std::int64_t> r;
  for (const auto& x : a) r.push_back(x.num() / x.den());
  std::vector<std::vector<std::int64_t>> pts;
  for_each_in_cube(r, [&](const std::vector<std::int64_t>& z) {
    long double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      s += std::pow(std::fabs(static_cast<long double>(z[i])) / a[i].num() * a[i].den(), static_cast<long double>(p));
    }
    if (s <= 1.0L + 1e-15L) pts.push_back(z);
  });
  std::sort(pts.begin(), pts.end());
  return pts;
}

/// Squared Euclidean distance from z to the box, exact.
inline Rational box_distance_sq(const std::vector<Rational>& a, const std::vector<std::int64_t>& z) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational gap = Rational(std::llabs(z[i])) - a[i];
    if (gap > Rational(0)) s += gap * gap;
  }
  return s;
}

/// Smallest squared distance from an exterior lattice point to the box.
inline Rational brute_isolation_sq(const std::vector<Rational>& a) {
  std::vector<std::int64_t> r;
  for (const auto& x : a) r.push_back(x.floor() + 2);
  std::optional<Rational> best;
  for_each_in_cube(r, [&](const std::vector<std::int64_t>& z) {
    if (in_box_exact(a, z)) return;
    Rational dsq = box_distance_sq(a, z);
    if (!best || dsq < *best) best = dsq;
  });
  return *best;
}

/// Successive minima of a body by sorting every short lattice vector by gauge
/// and growing a floating-point rank with Eigen's column-pivoting QR.
inline std::vector<double> brute_minima(const Body& body, std::int64_t radius) {
  const std::size_t d = dim(body);
  std::vector<std::pair<double, std::vector<std::int64_t>>> pts;
  for_each_in_cube(std::vector<std::int64_t>(d, radius), [&](const std::vector<std::int64_t>& z) {
    if (std::all_of(z.begin(), z.end(), [](std::int64_t c) { return c == 0; })) return;
    Vector x(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) x(static_cast<Eigen::Index>(i)) = static_cast<double>(z[i]);
    pts.emplace_back(gauge(body, x), z);
  });
  std::stable_sort(pts.begin(), pts.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<double> lambdas;
  Eigen::MatrixXd basis(static_cast<Eigen::Index>(d), 0);
  for (const auto& [g, z] : pts) {
    Eigen::MatrixXd trial(basis.rows(), basis.cols() + 1);
    trial.leftCols(basis.cols()) = basis;
    for (std::size_t i = 0; i < d; ++i) trial(static_cast<Eigen::Index>(i), basis.cols()) = static_cast<double>(z[i]);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(trial);
    qr.setThreshold(1e-9);
    if (qr.rank() == trial.cols()) {
      basis = trial;
      lambdas.push_back(g);
      if (lambdas.size() == d) break;
    }
  }
  return lambdas;
}

/// Largest singular value via Eigen's two-sided Jacobi SVD.
inline double svd_opnorm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t d, double scale) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = scale * u(rng);
  }
  return m;
}

/// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
inline double bisect_root(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
  const bool lo_neg = f(lo) < 0;
  for (int k = 0; k < iters; ++k) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) < 0) == lo_neg) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace latstab::testing
