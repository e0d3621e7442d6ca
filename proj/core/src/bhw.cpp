// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#include "latstab/bhw.hpp"

#include <cmath>
#include <limits>

#include "exact.hpp"
#include "latstab/enumeration.hpp"
#include "latstab/error.hpp"
#include "latstab/minima.hpp"

namespace latstab {
namespace {

namespace mp = boost::multiprecision;
using detail::BigRational;
using detail::HighFloat;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("bhw", "right-hand side overflows 64 bits");
  return out;
}

std::int64_t big_floor(const BigRational& x) {
  mp::cpp_int q = mp::numerator(x) / mp::denominator(x);
  if (x < 0 && q * mp::denominator(x) != mp::numerator(x)) --q;
  return q.convert_to<std::int64_t>();
}

const HighFloat kHighTie("1e-40");

// Re-derives floor(2 / lambda + 1) for a factor that snapped on the floating
// path. Returns nullopt when the finer evaluation is still inconclusive.
std::optional<std::int64_t> refine_factor(const Body& body, std::span<const std::int64_t> witness) {
  if (auto exact = detail::exact_lattice_gauge(body, witness)) {
    if (exact->value <= 0) return std::nullopt;
    const BigRational x = BigRational(2) / exact->value + 1;
    if (mp::denominator(x) == 1 || exact->faithful) return big_floor(x);
    return std::nullopt;
  }
  const auto& ball = std::get<LpBall>(body);
  const double p = ball.p().value();
  const HighFloat sum = detail::lp_power_sum(ball.box(), p, witness);
  const HighFloat lambda = mp::exp(mp::log(sum) / HighFloat(p));
  const HighFloat x = HighFloat(2) / lambda + 1;
  const HighFloat n = mp::round(x);
  if (mp::abs(x - n) <= kHighTie) return std::nullopt;
  return mp::floor(x).convert_to<std::int64_t>();
}

struct Rhs {
  std::int64_t value = 1;
  bool snapped = false;
};

Rhs floating_rhs(const Body& body, const MinimaResult& minima, double eps) {
  Rhs out;
  for (std::size_t i = 0; i < minima.lambdas.size(); ++i) {
    const double lam = minima.lambdas[i];
    if (!(lam > 0.0)) throw Error("bhw", "successive minima must be positive");
    FloorResult f = floor_safe(2.0 / lam + 1.0, eps);
    if (f.snapped) {
      if (auto refined = refine_factor(body, minima.witnesses[i])) {
        f = {*refined, false};
      }
    }
    out.value = checked_mul(out.value, f.value);
    out.snapped = out.snapped || f.snapped;
  }
  return out;
}

// High-precision recomputation of the right-hand side for an Lp ball.
std::optional<std::int64_t> confirm_lp_rhs(const LpBall& ball, const MinimaResult& minima) {
  std::int64_t rhs = 1;
  for (const auto& w : minima.witnesses) {
    const double p = ball.p().value();
    const HighFloat lambda = mp::exp(mp::log(detail::lp_power_sum(ball.box(), p, w)) / HighFloat(p));
    const HighFloat x = HighFloat(2) / lambda + 1;
    if (mp::abs(x - mp::round(x)) <= kHighTie) return std::nullopt;
    rhs = checked_mul(rhs, mp::floor(x).convert_to<std::int64_t>());
  }
  return rhs;
}

}  // namespace

FloorResult floor_safe(double x, double eps) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw Error("bhw", "floor_safe needs a finite x >= 0");
  if (eps < 0.0) throw Error("bhw", "eps must be nonnegative");
  const double n = std::round(x);
  if (std::abs(x - n) <= eps) return {static_cast<std::int64_t>(n), true};
  return {static_cast<std::int64_t>(std::floor(x)), false};
}

FloorResult floor_safe(const Rational& x) { return {x.floor(), false}; }

RhsResult rhs_functional(std::span<const double> lambdas, double eps) {
  RhsResult out{1, false};
  for (double lam : lambdas) {
    if (!(lam > 0.0)) throw Error("bhw", "successive minima must be positive");
    const FloorResult f = floor_safe(2.0 / lam + 1.0, eps);
    out.value = checked_mul(out.value, f.value);
    out.snapped = out.snapped || f.snapped;
  }
  return out;
}

RhsResult rhs_functional(std::span<const Rational> lambdas) {
  RhsResult out{1, false};
  for (const auto& lam : lambdas) {
    if (!lam.is_positive()) throw Error("bhw", "successive minima must be positive");
    out.value = checked_mul(out.value, (Rational(2) / lam + 1).floor());
  }
  return out;
}

bool floor_inequality_check(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw Error("bhw", "floor inequality needs a finite x >= 0");
  return 2.0 * std::floor(x) + 1.0 <= std::floor(2.0 * x + 1.0);
}

bool floor_inequality_check(const Rational& x) {
  if (x < Rational(0)) throw Error("bhw", "floor inequality needs x >= 0");
  return 2 * x.floor() + 1 <= (Rational(2) * x + 1).floor();
}

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::tight: return "tight";
    case Status::strict: return "strict";
    case Status::violation: return "violation";
    case Status::boundary_ambiguous: return "boundary-ambiguous";
  }
  return "?";
}

Status classify_verdict(std::uint64_t g, std::int64_t rhs, std::uint64_t ambiguous_points,
                        bool rhs_snapped) noexcept {
  if (ambiguous_points > 0 || rhs_snapped) return Status::boundary_ambiguous;
  const auto r = static_cast<std::uint64_t>(rhs);
  if (g == r) return Status::tight;
  if (g < r) return Status::strict;
  return Status::violation;
}

Verdict verify(const Body& body, double eps) {
  Verdict v;
  const AxisBox* box = std::get_if<AxisBox>(&body);
  if (const auto* ball = std::get_if<LpBall>(&body); ball && ball->p().is_infinite()) box = &ball->box();

  if (box != nullptr) {
    // Exact path throughout; a violation here would be a confirmed one.
    const MinimaResult minima = box_minima_closed_form(*box);
    v.g = count_box_closed_form(*box);
    v.rhs = rhs_functional(std::span<const Rational>(*minima.exact)).value;
    v.lambdas = minima.lambdas;
    v.exact_lambdas = minima.exact;
    v.status = classify_verdict(v.g, v.rhs, 0, false);
    return v;
  }

  const CountResult count = count_lattice_points(body, eps);
  const MinimaResult minima = successive_minima(body);
  const Rhs rhs = floating_rhs(body, minima, eps);
  v.g = count.count;
  v.ambiguous_points = count.ambiguous;
  v.rhs = rhs.value;
  v.rhs_snapped = rhs.snapped;
  v.lambdas = minima.lambdas;
  v.status = classify_verdict(v.g, v.rhs, v.ambiguous_points, v.rhs_snapped);

  if (v.status == Status::violation) {
    // Counts of Lp balls are already exact (ambiguous == 0 here); only the
    // minima came from doubles.
    if (const auto* ball = std::get_if<LpBall>(&body)) {
      if (auto confirmed = confirm_lp_rhs(*ball, minima)) {
        v.rhs = *confirmed;
        v.status = classify_verdict(v.g, v.rhs, 0, false);
        if (v.status == Status::violation) {
          v.diagnostic = "violation confirmed with 50-digit evaluation of the minima";
        }
        return v;
      }
    }
    v.status = Status::boundary_ambiguous;
    v.diagnostic = "floating-path violation (g=" + std::to_string(v.g) + " > rhs=" +
                   std::to_string(v.rhs) + ") could not be confirmed on an exact path";
  }
  return v;
}

}  // namespace latstab
