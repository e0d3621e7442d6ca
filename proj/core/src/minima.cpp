// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#include "latstab/minima.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "latstab/enumeration.hpp"
#include "latstab/error.hpp"

namespace latstab {
namespace {

__extension__ typedef __int128 wide_t;

wide_t wide_abs(wide_t v) { return v < 0 ? -v : v; }

wide_t wide_gcd(wide_t a, wide_t b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    wide_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Incremental row echelon form over Z, rows kept primitive.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t d) : d_(d) {}

  std::size_t rank() const noexcept { return rows_.size(); }

  /// Adds v if it is independent of the current rows; returns whether it was.
  bool try_add(std::span<const std::int64_t> v) {
    std::vector<wide_t> r(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t c = pivots_[k];
      if (r[c] == 0) continue;
      const wide_t a = rows_[k][c];
      const wide_t b = r[c];
      for (std::size_t j = 0; j < d_; ++j) r[j] = r[j] * a - rows_[k][j] * b;
      normalize(r);
    }
    auto it = std::find_if(r.begin(), r.end(), [](wide_t x) { return x != 0; });
    if (it == r.end()) return false;
    pivots_.push_back(static_cast<std::size_t>(it - r.begin()));
    rows_.push_back(std::move(r));
    return true;
  }

 private:
  static void normalize(std::vector<wide_t>& r) {
    wide_t g = 0;
    for (auto x : r) g = wide_gcd(g, x);
    if (g > 1) {
      for (auto& x : r) x /= g;
    }
    constexpr wide_t kGuard = static_cast<wide_t>(1) << 60;
    for (auto x : r) {
      if (wide_abs(x) > kGuard) throw Error("minima", "rank elimination overflow");
    }
  }

  std::size_t d_;
  std::vector<std::vector<wide_t>> rows_;
  std::vector<std::size_t> pivots_;
};

std::int64_t l1(const LatticePoint& z) {
  std::int64_t s = 0;
  for (auto c : z) s += c < 0 ? -c : c;
  return s;
}

bool canonical(std::span<const std::int64_t> z) {
  for (auto c : z) {
    if (c != 0) return c > 0;
  }
  return false;
}

template <class Key>
struct Candidate {
  Key key;
  LatticePoint z;
};

/// Core solver, parameterized on the ordering key (Rational on the exact box
/// path, double otherwise). `radii_for(r)` gives the enumeration box of the
/// r-dilate; `key_of(z)` the gauge.
template <class Key, class RadiiFn, class KeyFn>
std::vector<Candidate<Key>> solve(std::size_t d, Key r, const MinimaOptions& options,
                                  RadiiFn radii_for, KeyFn key_of) {
  for (int round = 0; round <= options.max_doublings; ++round) {
    std::vector<Candidate<Key>> pool;
    for_each_candidate(radii_for(r), EnumerationLimits{}, [&](std::span<const std::int64_t> z) {
      if (!canonical(z)) return;
      Key k = key_of(z);
      if (k <= r) pool.push_back({k, LatticePoint(z.begin(), z.end())});
    });
    std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
      if (a.key != b.key) return a.key < b.key;
      const auto la = l1(a.z), lb = l1(b.z);
      if (la != lb) return la < lb;
      return a.z > b.z;
    });
    EchelonBasis basis(d);
    std::vector<Candidate<Key>> chosen;
    for (auto& c : pool) {
      if (basis.try_add(c.z)) {
        chosen.push_back(std::move(c));
        if (chosen.size() == d) return chosen;
      }
    }
    r = r + r;
  }
  throw Error("minima", "search radius exceeded 2^" + std::to_string(options.max_doublings) +
                            " times the initial estimate; body looks degenerate");
}

MinimaResult box_solver(const AxisBox& box, const MinimaOptions& options) {
  const std::size_t d = box.dim();
  Rational r = box.semi_axis(0).reciprocal();
  for (const auto& a : box.semi_axes()) r = std::min(r, a.reciprocal());
  auto radii_for = [&](const Rational& radius) {
    std::vector<std::int64_t> radii;
    for (const auto& a : box.semi_axes()) radii.push_back((a * radius).floor());
    return radii;
  };
  auto key_of = [&](std::span<const std::int64_t> z) { return box_gauge(box, z); };
  auto chosen = solve<Rational>(d, r, options, radii_for, key_of);
  MinimaResult out;
  out.exact.emplace();
  for (auto& c : chosen) {
    out.lambdas.push_back(c.key.to_double());
    out.exact->push_back(c.key);
    out.witnesses.push_back(std::move(c.z));
  }
  return out;
}

MinimaResult float_solver(const Body& body, const MinimaOptions& options) {
  const std::size_t d = dim(body);
  std::vector<double> unit(d, 0.0);
  double r = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    unit.assign(d, 0.0);
    unit[i] = 1.0;
    const double g = gauge(body, unit);
    r = i == 0 ? g : std::min(r, g);
  }
  const std::vector<double> h = bounding_half_widths(body);
  auto radii_for = [&](double radius) {
    std::vector<std::int64_t> radii;
    for (double hi : h) {
      const double reach = hi * radius * (1.0 + 1e-12);
      if (!(reach < 1e9)) throw Error("minima", "search box too large");
      radii.push_back(static_cast<std::int64_t>(std::floor(reach)));
    }
    return radii;
  };
  std::vector<double> x(d);
  auto key_of = [&](std::span<const std::int64_t> z) {
    std::copy(z.begin(), z.end(), x.begin());
    return gauge(body, x);
  };
  auto chosen = solve<double>(d, r, options, radii_for, key_of);
  MinimaResult out;
  for (auto& c : chosen) {
    out.lambdas.push_back(c.key);
    out.witnesses.push_back(std::move(c.z));
  }
  return out;
}

}  // namespace

std::size_t integer_rank(const std::vector<LatticePoint>& vectors) {
  if (vectors.empty()) return 0;
  EchelonBasis basis(vectors.front().size());
  for (const auto& v : vectors) basis.try_add(v);
  return basis.rank();
}

MinimaResult successive_minima(const Body& body, const MinimaOptions& options) {
  if (dim(body) > options.max_dim) {
    throw Error("minima", "dimension " + std::to_string(dim(body)) + " exceeds cap " +
                              std::to_string(options.max_dim));
  }
  if (const auto* box = std::get_if<AxisBox>(&body)) return box_solver(*box, options);
  if (const auto* ball = std::get_if<LpBall>(&body); ball && ball->p().is_infinite()) {
    return box_solver(ball->box(), options);
  }
  return float_solver(body, options);
}

MinimaResult box_minima_closed_form(const AxisBox& box) {
  MinimaResult out;
  out.exact.emplace();
  for (std::size_t idx : box.descending_order()) {
    const Rational lambda = box.semi_axis(idx).reciprocal();
    out.exact->push_back(lambda);
    out.lambdas.push_back(lambda.to_double());
    LatticePoint e(box.dim(), 0);
    e[idx] = 1;
    out.witnesses.push_back(std::move(e));
  }
  return out;
}

bool SandwichReport::all_inclusion_hold() const {
  return std::all_of(inclusion_holds.begin(), inclusion_holds.end(), [](bool b) { return b; });
}

bool SandwichReport::all_exchanged_hold() const {
  return std::all_of(exchanged_holds.begin(), exchanged_holds.end(), [](bool b) { return b; });
}

SandwichReport check_minima_sandwich(const AxisBox& box, const Transform& t, double slack) {
  if (box.dim() != t.dim()) throw Error("minima", "transform dimension does not match the box");
  const auto n = static_cast<Eigen::Index>(box.dim());
  const Matrix id = Matrix::Identity(n, n);

  SandwichReport rep;
  rep.epsilon = box_gauge_opnorm(box, t.matrix() - id);
  rep.epsilon_prime = box_gauge_opnorm(box, t.inverse() - id);
  rep.lambdas = box_minima_closed_form(box).lambdas;
  rep.transformed_lambdas = successive_minima(TransformedBox(box, t)).lambdas;

  for (std::size_t i = 0; i < box.dim(); ++i) {
    const double lam = rep.lambdas[i];
    const double mu = rep.transformed_lambdas[i];
    rep.inclusion_lower.push_back(lam / (1.0 + rep.epsilon));
    rep.inclusion_upper.push_back((1.0 + rep.epsilon_prime) * lam);
    rep.inclusion_holds.push_back(rep.inclusion_lower.back() - slack <= mu &&
                                  mu <= rep.inclusion_upper.back() + slack);
    rep.exchanged_lower.push_back(lam / (1.0 + rep.epsilon_prime));
    rep.exchanged_upper.push_back((1.0 + rep.epsilon) * lam);
    rep.exchanged_holds.push_back(rep.exchanged_lower.back() - slack <= mu &&
                                  mu <= rep.exchanged_upper.back() + slack);
  }
  return rep;
}

}  // namespace latstab
