// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance runner: one PASS/FAIL line per criterion with its wall time and
// budget. Exit status is nonzero if any criterion fails without a known cause.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "latstab/bhw.hpp"
#include "latstab/enumeration.hpp"
#include "latstab/lp.hpp"
#include "latstab/minima.hpp"
#include "latstab/stability.hpp"
#include "support.hpp"

#ifdef LATSTAB_WITH_CLI
#include "cli.hpp"
#include "format.hpp"
#endif

namespace {

using namespace latstab;
namespace lt = latstab::testing;

struct Outcome {
  bool ok = true;
  std::string detail;
  // Set when the failure is understood and recorded rather than a defect: the
  // line still reads FAIL but the exit status does not count it.
  std::string known_cause;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> body;
};

std::string str(const std::vector<Rational>& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

// Calls visit on every vector in {lo..hi}^d.
void for_each_tuple(std::size_t d, std::int64_t lo, std::int64_t hi,
                    const std::function<void(const std::vector<Rational>&)>& visit) {
  std::vector<std::int64_t> v(d, lo);
  for (;;) {
    visit(std::vector<Rational>(v.begin(), v.end()));
    std::size_t k = 0;
    for (; k < d && v[k] == hi; ++k) v[k] = lo;
    if (k == d) return;
    ++v[k];
  }
}

Outcome box_tightness() {
  Outcome out;
  int n = 0;
  for (std::size_t d = 1; d <= 4; ++d) {
    for_each_tuple(d, 1, 3, [&](const std::vector<Rational>& a) {
      std::int64_t prod = 1;
      for (const auto& x : a) prod *= 2 * x.num() + 1;
      const Verdict v = verify(AxisBox(a));
      out.require(v.status == Status::tight && static_cast<std::int64_t>(v.g) == prod && v.rhs == prod,
                  "alpha=" + str(a) + " g=" + std::to_string(v.g) + " rhs=" + std::to_string(v.rhs) +
                      " status=" + to_string(v.status));
      ++n;
    });
  }
  if (out.ok) out.detail = std::to_string(n) + " integer boxes tight";
  return out;
}

Outcome floor_inequality() {
  Outcome out;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int k = 0; k < 100000; ++k) {
    const double x = u(rng);
    out.require(floor_inequality_check(x), "x=" + std::to_string(x));
  }
  for (int k = 0; k <= 200; ++k) out.require(floor_inequality_check(Rational(k, 2)), "x=" + std::to_string(k) + "/2");
  if (out.ok) out.detail = "1e5 uniform + 201 half-integers";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto a = lt::random_alphas(rng, 1 + static_cast<std::size_t>(k % 4));
    const AxisBox b(a);
    out.require(count_box_closed_form(b) == lt::brute_box_count(a), "count alpha=" + str(a));
    out.require(count_lattice_points(b).count == lt::brute_box_count(a), "enumerator alpha=" + str(a));
    const auto closed = box_minima_closed_form(b);
    const auto general = successive_minima(b);
    out.require(closed.exact && general.exact && *closed.exact == *general.exact, "minima alpha=" + str(a));
  }
  if (out.ok) out.detail = "200 random rational boxes";
  return out;
}

Outcome corner_exclusion() {
  Outcome out;
  {
    const AxisBox sq(std::vector<Rational>{1, 1});
    const Verdict v = verify(RotatedBox(sq, givens_rotation(2, 0, 1, 0.1)));
    out.require(v.g == 5 && v.rhs >= 9 && v.status == Status::strict,
                "unit square theta=0.1: g=" + std::to_string(v.g) + " rhs=" + std::to_string(v.rhs) + " " +
                    to_string(v.status));
  }
  int n = 0;
  for (std::size_t d = 2; d <= 3; ++d) {
    for_each_tuple(d, 1, 2, [&](const std::vector<Rational>& a) {
      const AxisBox b(a);
      const std::uint64_t g0 = count_box_closed_form(b);
      for (double theta : {0.01, 0.02, 0.05}) {
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = i + 1; j < d; ++j) {
            const Rotation r = givens_rotation(d, i, j, theta);
            const auto c = count_lattice_points(RotatedBox(b, r));
            const std::string tag = "alpha=" + str(a) + " theta=" + std::to_string(theta) + " plane=(" +
                                    std::to_string(i) + "," + std::to_string(j) + ")";
            out.require(corner_exclusion_check(b, r), tag + " corner not excluded");
            out.require(c.ambiguous == 0 && c.count + 1 <= g0, tag + " g=" + std::to_string(c.count));
            ++n;
          }
        }
      }
    });
  }
  if (out.ok) out.detail = std::to_string(n) + " Givens cases";
  return out;
}

Outcome stability() {
  Outcome out;
  const std::vector<std::vector<Rational>> boxes{
      {Rational(23, 10), Rational(17, 10)}, {1, 1}, {Rational(3, 2), Rational(7, 10), Rational(23, 10)}};
  double worst = 0;
  for (const auto& a : boxes) {
    const AxisBox b(a);
    const double rad = stability_radius(b).radius;
    const double cap = std::min(2.0, rad * (1 - 1e-12));
    std::vector<Rotation> rs;
    for (std::uint64_t s = 0; s < 500; ++s) rs.push_back(random_rotation(b.dim(), 1000 + s, cap));
    const std::uint64_t g0 = count_box_closed_form(b);
    for (const auto& rec : rotation_sweep(b, rs)) {
      out.require(rec.opnorm < rad, "alpha=" + str(a) + " opnorm not below radius");
      out.require(rec.g <= g0, "alpha=" + str(a) + " g=" + std::to_string(rec.g) + " > " + std::to_string(g0));
      out.require(rec.status != Status::violation, "alpha=" + str(a) + " violation");
      worst = std::max(worst, rec.opnorm / rad);
    }
  }
  if (out.ok) out.detail = "1500 rotations, max ||R-I||/radius = " + std::to_string(worst);
  return out;
}

Outcome dimension_scaling() {
  Outcome out;
  for (std::size_t d = 1; d <= 6; ++d) {
    const double r = stability_radius(AxisBox(std::vector<Rational>(d, Rational(1, 2)))).radius;
    out.require(std::fabs(r - 1 / std::sqrt(static_cast<double>(d))) <= 1e-12, "d=" + std::to_string(d));
  }
  if (out.ok) out.detail = "d=1..6 within 1e-12";
  return out;
}

Outcome isolation() {
  Outcome out;
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    const auto a = lt::random_alphas(rng, 1 + static_cast<std::size_t>(k % 4));
    const Rational delta = isolation_distance(AxisBox(a));
    out.require(delta * delta == lt::brute_isolation_sq(a), "alpha=" + str(a));
  }
  if (out.ok) out.detail = "100 random rational boxes, exact";
  return out;
}

std::vector<AxisBox> threshold_boxes() {
  std::vector<AxisBox> boxes;
  std::mt19937_64 rng(8);
  for (int k = 0; k < 50; ++k) boxes.emplace_back(lt::random_fractional_alphas(rng, 1 + static_cast<std::size_t>(k % 4)));
  return boxes;
}

Outcome lp_sufficiency() {
  Outcome out;
  const AxisBox sq(std::vector<Rational>{Rational(3, 2), Rational(3, 2)});
  const double p0 = p_threshold(sq).p0;
  out.require(std::fabs(p0 - std::log(2.0) / std::log(1.5)) <= 1e-6, "p0=" + std::to_string(p0));
  const auto box_pts = lp_lattice_points(sq, Exponent::infinity());
  out.require(box_pts.size() == 9, "box count " + std::to_string(box_pts.size()));
  for (double p : {p0, 2 * p0, 10 * p0}) {
    out.require(lp_lattice_points(sq, Exponent(p)) == box_pts, "point set differs at p=" + std::to_string(p));
  }
  for (const auto& b : threshold_boxes()) {
    out.require(threshold_sufficiency_check(b, default_threshold_grid(p_threshold(b).p0)),
                "alpha=" + str(b.semi_axes()));
  }
  if (out.ok) out.detail = "p0=" + std::to_string(p0) + "; 50 random boxes";
  return out;
}

Outcome integer_necessity() {
  Outcome out;
  for (const auto& a : {std::vector<Rational>{1, Rational(3, 2)}, std::vector<Rational>{1, 1}}) {
    const AxisBox b(a);
    const auto inf = count_lp(b, Exponent::infinity()).count;
    for (double p : {2.0, 4.0, 8.0, 16.0}) {
      const auto c = count_lp(b, Exponent(p));
      out.require(c.ambiguous == 0 && c.count < inf, "alpha=" + str(a) + " p=" + std::to_string(p));
    }
  }
  if (out.ok) out.detail = "(1,1.5) and (1,1) at p=2,4,8,16";
  return out;
}

Outcome sandwich() {
  Outcome out;
  std::mt19937_64 rng(10);
  int trials = 0, printed_ok = 0;
  double worst_printed = 0;
  std::string first_printed_failure;
  while (trials < 100) {
    const std::size_t d = 1 + static_cast<std::size_t>(trials % 3);
    const AxisBox b(lt::random_alphas(rng, d, 0.5, 3.0));
    const auto n = static_cast<Eigen::Index>(d);
    const Matrix t = Matrix::Identity(n, n) + lt::random_matrix(rng, d, 0.12);
    if (box_gauge_opnorm(b, Matrix(t - Matrix::Identity(n, n))) > 0.2) continue;
    ++trials;
    const auto rep = check_minima_sandwich(b, Transform(t));
    // Bounds exactly as stated: lambda/(1+eps') <= mu <= (1+eps) lambda.
    if (rep.all_exchanged_hold()) {
      ++printed_ok;
    } else {
      for (std::size_t i = 0; i < d; ++i) {
        const double mu = rep.transformed_lambdas[i];
        worst_printed = std::max({worst_printed, rep.exchanged_lower[i] - mu, mu - rep.exchanged_upper[i]});
      }
      if (first_printed_failure.empty()) first_printed_failure = "alpha=" + str(b.semi_axes());
    }
    out.require(rep.all_inclusion_hold(), "inclusion bounds fail for alpha=" + str(b.semi_axes()));
  }
  // The stated orientation is checked on top of the inclusion one.
  const bool inclusion_ok = out.ok;
  out.require(printed_ok == trials, "stated bounds fail on " + std::to_string(trials - printed_ok) + "/" +
                                        std::to_string(trials) + " transforms (first " + first_printed_failure +
                                        ", worst excess " + std::to_string(worst_printed) +
                                        "); lambda/(1+eps) <= mu <= (1+eps') lambda holds on all");
  if (out.ok) out.detail = "100 transforms, both orientations";
  if (!out.ok && inclusion_ok) {
    out.known_cause = "stated bounds swap eps and eps'; the inclusions TK in (1+eps)K and K in (1+eps')TK give the "
                      "other orientation, which holds";
  }
  return out;
}

Outcome empirical_vs_theory() {
  Outcome out;
  const AxisBox sq(std::vector<Rational>{Rational(3, 2), Rational(3, 2)});
  const double emp = empirical_threshold(sq);
  out.require(std::fabs(emp - std::log(2.0) / std::log(1.5)) <= 1e-5, "square p*=" + std::to_string(emp));
  out.require(emp <= p_threshold(sq).p0 + 1e-6, "square above p0");
  double max_gap = 0;
  for (const auto& b : threshold_boxes()) {
    const double p0 = p_threshold(b).p0;
    const double e = empirical_threshold(b);
    out.require(e <= p0 + 1e-6, "alpha=" + str(b.semi_axes()) + " p*=" + std::to_string(e));
    max_gap = std::max(max_gap, p0 - e);
  }
  if (out.ok) out.detail = "square p*=" + std::to_string(emp) + "; largest p0 - p* = " + std::to_string(max_gap);
  return out;
}

Outcome cli_reproducibility() {
  Outcome out;
#ifdef LATSTAB_WITH_CLI
  using cli::Json;
  auto run = [](std::vector<std::string> args, int& code) {
    std::ostringstream o, e;
    code = cli::run(args, o, e);
    return o.str();
  };
  const std::vector<std::vector<std::string>> cases{{"verify", "--alphas", "1,1"},
                                                    {"stability-radius", "--alphas", "0.5,0.5,0.5,0.5"},
                                                    {"lp-threshold", "--alphas", "1.5,1.5"}};
  std::vector<Json> results;
  for (const auto& c : cases) {
    int c1 = -1, c2 = -1;
    const std::string a = run(c, c1), b = run(c, c2);
    out.require(a == b && !a.empty(), c[0] + " output differs between runs");
    out.require(c1 == 0 && c2 == 0, c[0] + " exit " + std::to_string(c1));
    results.push_back(a.empty() ? Json() : Json::parse(a));
  }
  const Json& v = results[0];
  out.require(v["g"] == 9 && v["rhs"] == 9 && v["status"] == "tight", "verify values " + v.dump());
  out.require(results[1]["radius"].get<double>() == 0.5, "radius " + results[1].dump());
  out.require(std::fabs(results[2]["p0"].get<double>() - 1.709511) <= 1e-6, "p0 " + results[2].dump());
  if (out.ok) out.detail = "3 invocations byte-identical";
#else
  out.require(false, "built without the command-line tool");
#endif
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "box tightness", 10, box_tightness},
      {2, "floor inequality", 1, floor_inequality},
      {3, "oracle equivalence", 60, oracle_equivalence},
      {4, "corner exclusion", 60, corner_exclusion},
      {5, "stability radius", 300, stability},
      {6, "dimension scaling", 1, dimension_scaling},
      {7, "isolation distance", 60, isolation},
      {8, "Lp threshold sufficiency", 120, lp_sufficiency},
      {9, "integer-alpha necessity", 5, integer_necessity},
      {10, "successive-minima sandwich", 120, sandwich},
      {11, "empirical vs theoretical threshold", 120, empirical_vs_theory},
      {12, "CLI reproducibility", 5, cli_reproducibility},
  };
  int failed = 0, known = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.budget_s) {
      o.ok = false;
      o.detail += " (over time budget)";
    }
    if (!o.ok) {
      ++failed;
      if (!o.known_cause.empty()) ++known;
    }
    std::printf("%s %2d %-36s %8.3fs / %gs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_s,
                o.detail.c_str());
    if (!o.ok && !o.known_cause.empty()) std::printf("        known cause: %s\n", o.known_cause.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed, %d failure(s) with a known cause\n",
              static_cast<int>(criteria.size()) - failed, criteria.size(), known);
  return failed == known ? 0 : 1;
}
