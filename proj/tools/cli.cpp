// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "format.hpp"
#include "latstab/error.hpp"

namespace latstab::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, const std::string& seps) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (seps.find(c) != std::string::npos) {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

double parse_double(const std::string& flag, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError(flag + ": not a number: '" + text + "'");
  }
  if (used != text.size()) {
    throw UsageError(flag + ": unexpected character at offset " + std::to_string(used) + " in '" + text + "'");
  }
  return v;
}

std::vector<double> parse_double_list(const std::string& flag, const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ",;")) out.push_back(parse_double(flag, part));
  return out;
}

std::size_t parse_index(const std::string& flag, const std::string& text) {
  const double v = parse_double(flag, text);
  if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw UsageError(flag + ": expected a nonnegative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

struct RawOptions {
  std::string alphas, p, p_grid, givens, plane, thetas, matrix, format, out;
  std::optional<std::size_t> dim;
  std::optional<double> theta, scale, max_opnorm, eps;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  double tol = 1e-6;
  bool empirical = false;
  bool list = false;
};

std::vector<Rational> resolved_alphas(const RunConfig& cfg) {
  if (cfg.alphas.empty()) throw UsageError("--alphas is required");
  if (!cfg.dim) return cfg.alphas;
  if (cfg.alphas.size() == 1) return std::vector<Rational>(*cfg.dim, cfg.alphas.front());
  if (cfg.alphas.size() != *cfg.dim) {
    throw UsageError("--dim " + std::to_string(*cfg.dim) + " does not match " +
                     std::to_string(cfg.alphas.size()) + " entries of --alphas");
  }
  return cfg.alphas;
}

AxisBox make_box(const RunConfig& cfg) { return AxisBox(resolved_alphas(cfg)); }

Rotation make_givens(std::size_t d, const std::vector<double>& g) {
  return givens_rotation(d, static_cast<std::size_t>(g[0]), static_cast<std::size_t>(g[1]), g[2]);
}

Body make_body(const RunConfig& cfg) {
  AxisBox box = make_box(cfg);
  if (cfg.p && cfg.givens) throw UsageError("--p and --rotate-givens cannot be combined");
  if (cfg.p) return LpBall(*cfg.p, box.semi_axes());
  if (cfg.givens) return RotatedBox(box, make_givens(box.dim(), *cfg.givens));
  return box;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

struct Outcome {
  std::string text;
  int code = kExitOk;
};

int status_exit(Status s) {
  switch (s) {
    case Status::tight:
    case Status::strict: return kExitOk;
    case Status::violation: return kExitViolation;
    case Status::boundary_ambiguous: return kExitAmbiguous;
  }
  return kExitError;
}

Outcome cmd_count(const RunConfig& cfg) {
  const Body body = make_body(cfg);
  Json j = to_json(count_lattice_points(body, cfg.eps));
  if (cfg.list_points) j["points"] = list_lattice_points(body, cfg.eps);
  return {dump(j)};
}

Outcome cmd_minima(const RunConfig& cfg) { return {dump(to_json(successive_minima(make_body(cfg))))}; }

Outcome cmd_verify(const RunConfig& cfg) {
  const Verdict v = verify(make_body(cfg), cfg.eps);
  return {dump(to_json(v)), status_exit(v.status)};
}

Outcome cmd_stability_radius(const RunConfig& cfg) { return {dump(to_json(stability_radius(make_box(cfg))))}; }

Outcome cmd_rotation_sweep(const RunConfig& cfg) {
  const AxisBox box = make_box(cfg);
  const std::size_t d = box.dim();
  std::vector<Rotation> rotations;
  if (cfg.plane) {
    const auto& pl = *cfg.plane;
    std::vector<double> angles;
    if (cfg.thetas) {
      angles = *cfg.thetas;
    } else if (cfg.theta) {
      for (std::size_t k = 1; k <= cfg.samples; ++k) {
        angles.push_back(*cfg.theta * static_cast<double>(k) / static_cast<double>(cfg.samples));
      }
    } else {
      throw UsageError("--plane needs --thetas or --theta");
    }
    for (double t : angles) rotations.push_back(givens_rotation(d, pl[0], pl[1], t));
  } else {
    const double max_opnorm = cfg.max_opnorm.value_or(std::min(2.0, stability_radius(box).radius));
    std::mt19937_64 seeds(cfg.seed);
    for (std::size_t k = 0; k < cfg.samples; ++k) rotations.push_back(random_rotation(d, seeds(), max_opnorm));
  }
  const auto records = rotation_sweep(box, rotations, cfg.eps);

  int code = kExitOk;
  for (const auto& r : records) {
    if (r.status == Status::violation) code = kExitViolation;
    if (r.status == Status::boundary_ambiguous && code == kExitOk) code = kExitAmbiguous;
  }
  if (cfg.format.value_or(Format::csv) == Format::csv) return {sweep_csv(records), code};
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return {dump(arr), code};
}

Outcome cmd_lp_threshold(const RunConfig& cfg) {
  const AxisBox box = make_box(cfg);
  Json j = to_json(p_threshold(box));
  if (cfg.empirical) j["p_empirical"] = empirical_threshold(box, cfg.tol, cfg.eps);
  return {dump(j)};
}

Outcome cmd_lp_sweep(const RunConfig& cfg) {
  const AxisBox box = make_box(cfg);
  const std::vector<double> grid =
      cfg.p_grid.value_or(std::vector<double>{1, 2, 4, 8, 16, 32, std::numeric_limits<double>::infinity()});
  const auto box_points = list_lattice_points(box, cfg.eps);
  std::vector<LpSweepRow> rows;
  for (double p : grid) {
    const Exponent e(p);
    const LpBall ball(e, box.semi_axes());
    rows.push_back({e, count_lattice_points(ball, cfg.eps), list_lattice_points(ball, cfg.eps) == box_points});
  }
  if (cfg.format.value_or(Format::csv) == Format::csv) return {lp_sweep_csv(rows)};
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return {dump(arr)};
}

Outcome cmd_sandwich(const RunConfig& cfg) {
  const AxisBox box = make_box(cfg);
  const auto n = static_cast<Eigen::Index>(box.dim());
  Matrix t = Matrix::Identity(n, n);
  int sources = (cfg.matrix ? 1 : 0) + (cfg.givens ? 1 : 0) + (cfg.scale ? 1 : 0);
  if (sources > 1) throw UsageError("use only one of --matrix, --rotate-givens, --scale");
  if (cfg.matrix) {
    if (cfg.matrix->size() != static_cast<std::size_t>(n * n)) {
      throw UsageError("--matrix needs " + std::to_string(n * n) + " entries (row-major)");
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) t(r, c) = (*cfg.matrix)[static_cast<std::size_t>(r * n + c)];
    }
  } else if (cfg.givens) {
    t = make_givens(box.dim(), *cfg.givens).matrix();
  } else if (cfg.scale) {
    t *= *cfg.scale;
  }
  const SandwichReport rep = check_minima_sandwich(box, Transform(t));
  return {dump(to_json(rep)), rep.all_inclusion_hold() ? kExitOk : kExitViolation};
}

RunConfig resolve(const std::string& command, const RawOptions& raw, const Environment& env) {
  RunConfig cfg;
  cfg.command = command;
  if (!raw.alphas.empty()) cfg.alphas = parse_rational_list("--alphas", raw.alphas);
  cfg.dim = raw.dim;
  if (!raw.p.empty()) cfg.p = parse_exponent(raw.p);
  if (!raw.p_grid.empty()) {
    std::vector<double> grid;
    for (const auto& part : split(raw.p_grid, ",")) {
      const Exponent e = parse_exponent(part);
      grid.push_back(e.is_infinite() ? std::numeric_limits<double>::infinity() : e.value());
    }
    cfg.p_grid = grid;
  }
  if (!raw.givens.empty()) {
    auto parts = split(raw.givens, ",");
    if (parts.size() != 3) throw UsageError("--rotate-givens expects i,j,theta");
    cfg.givens = std::vector<double>{static_cast<double>(parse_index("--rotate-givens", parts[0])),
                                     static_cast<double>(parse_index("--rotate-givens", parts[1])),
                                     parse_double("--rotate-givens", parts[2])};
  }
  if (!raw.plane.empty()) {
    auto parts = split(raw.plane, ",");
    if (parts.size() != 2) throw UsageError("--plane expects i,j");
    cfg.plane = std::vector<std::size_t>{parse_index("--plane", parts[0]), parse_index("--plane", parts[1])};
  }
  if (!raw.thetas.empty()) cfg.thetas = parse_double_list("--thetas", raw.thetas);
  if (!raw.matrix.empty()) cfg.matrix = parse_double_list("--matrix", raw.matrix);
  cfg.theta = raw.theta;
  cfg.scale = raw.scale;
  cfg.seed = raw.seed;
  cfg.samples = raw.samples;
  cfg.max_opnorm = raw.max_opnorm;
  cfg.tol = raw.tol;
  cfg.empirical = raw.empirical;
  cfg.list_points = raw.list;
  if (env.eps_override) cfg.eps = parse_double("LATSTAB_EPS", *env.eps_override);
  if (raw.eps) cfg.eps = *raw.eps;
  if (cfg.eps < 0) throw UsageError("--eps must be nonnegative");
  if (raw.format == "json") {
    cfg.format = Format::json;
  } else if (raw.format == "csv") {
    cfg.format = Format::csv;
  } else if (!raw.format.empty()) {
    throw UsageError("--format must be json or csv, got '" + raw.format + "'");
  }
  cfg.out = raw.out;
  return cfg;
}

Outcome dispatch(const RunConfig& cfg) {
  const bool tabular = cfg.command == "rotation-sweep" || cfg.command == "lp-sweep";
  if (!tabular && cfg.format == Format::csv) throw UsageError(cfg.command + " only supports --format json");
  if (cfg.command == "count") return cmd_count(cfg);
  if (cfg.command == "minima") return cmd_minima(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "stability-radius") return cmd_stability_radius(cfg);
  if (cfg.command == "rotation-sweep") return cmd_rotation_sweep(cfg);
  if (cfg.command == "lp-threshold") return cmd_lp_threshold(cfg);
  if (cfg.command == "lp-sweep") return cmd_lp_sweep(cfg);
  if (cfg.command == "sandwich-check") return cmd_sandwich(cfg);
  throw UsageError("unknown command " + cfg.command);
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* v = std::getenv("LATSTAB_EPS")) env.eps_override = v;
  return env;
}

std::vector<Rational> parse_rational_list(const std::string& flag, const std::string& text) {
  std::vector<Rational> out;
  const auto parts = split(text, ",");
  for (std::size_t k = 0; k < parts.size(); ++k) {
    try {
      out.push_back(Rational::parse(parts[k]));
    } catch (const ParseError& e) {
      throw UsageError(flag + ": entry " + std::to_string(k) + " ('" + parts[k] + "'): " + e.what());
    }
  }
  return out;
}

Exponent parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return Exponent::infinity();
  const double p = parse_double("--p", text);
  if (!(p >= 1.0)) throw UsageError("--p must be >= 1 or inf, got '" + text + "'");
  return Exponent(p);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Lattice point counts, successive minima and stability checks for boxes, rotated boxes and Lp balls",
               "latstab"};
  app.require_subcommand(1);
  RawOptions raw;

  auto body_opts = [&](CLI::App* sub) {
    sub->add_option("--alphas", raw.alphas, "semi-axes, e.g. 2.3,1.7 (exact decimals or a/b)")->required();
    sub->add_option("--dim", raw.dim, "dimension; a single --alphas value is repeated");
  };
  auto shape_opts = [&](CLI::App* sub) {
    sub->add_option("--p", raw.p, "Lp exponent (>= 1) or inf");
    sub->add_option("--rotate-givens", raw.givens, "rotate the box: i,j,theta");
  };
  auto common_opts = [&](CLI::App* sub) {
    sub->add_option("--eps", raw.eps, "boundary tolerance (default 1e-9, env LATSTAB_EPS)");
    sub->add_option("--format", raw.format, "json or csv");
    sub->add_option("--out", raw.out, "write output to this file instead of stdout");
  };

  std::vector<CLI::App*> subs;
  auto* count = app.add_subcommand("count", "lattice points inside a body");
  body_opts(count);
  shape_opts(count);
  common_opts(count);
  count->add_flag("--list", raw.list, "also list the points");
  subs.push_back(count);

  auto* minima = app.add_subcommand("minima", "successive minima with witnesses");
  body_opts(minima);
  shape_opts(minima);
  common_opts(minima);
  subs.push_back(minima);

  auto* verify_cmd = app.add_subcommand("verify", "lattice point count against the floor-product bound");
  body_opts(verify_cmd);
  shape_opts(verify_cmd);
  common_opts(verify_cmd);
  subs.push_back(verify_cmd);

  auto* radius = app.add_subcommand("stability-radius", "isolation distance and rotation stability radius");
  body_opts(radius);
  common_opts(radius);
  subs.push_back(radius);

  auto* sweep = app.add_subcommand("rotation-sweep", "verify the box under a family of rotations (CSV)");
  body_opts(sweep);
  common_opts(sweep);
  sweep->add_option("--plane", raw.plane, "Givens plane i,j (otherwise random rotations)");
  sweep->add_option("--thetas", raw.thetas, "explicit Givens angles");
  sweep->add_option("--theta", raw.theta, "largest Givens angle; --samples equal steps up to it");
  sweep->add_option("--seed", raw.seed, "seed for random rotations");
  sweep->add_option("--samples", raw.samples, "number of rotations");
  sweep->add_option("--max-opnorm", raw.max_opnorm, "bound on ||R - I|| (default: stability radius)");
  subs.push_back(sweep);

  auto* lpt = app.add_subcommand("lp-threshold", "exponent beyond which Lp-ball lattice points match the box");
  body_opts(lpt);
  common_opts(lpt);
  lpt->add_flag("--empirical", raw.empirical, "also bisect for the smallest working exponent");
  lpt->add_option("--tol", raw.tol, "bisection tolerance");
  subs.push_back(lpt);

  auto* lps = app.add_subcommand("lp-sweep", "Lp-ball lattice point counts over a grid of exponents (CSV)");
  body_opts(lps);
  common_opts(lps);
  lps->add_option("--p-grid", raw.p_grid, "comma-separated exponents, inf allowed");
  subs.push_back(lps);

  auto* sandwich = app.add_subcommand("sandwich-check", "bounds on successive minima of T * box");
  body_opts(sandwich);
  common_opts(sandwich);
  sandwich->add_option("--matrix", raw.matrix, "T row-major, comma separated");
  sandwich->add_option("--rotate-givens", raw.givens, "T = Givens rotation i,j,theta");
  sandwich->add_option("--scale", raw.scale, "T = scale * I");
  subs.push_back(sandwich);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  std::string command;
  for (auto* sub : subs) {
    if (sub->parsed()) command = sub->get_name();
  }

  try {
    const RunConfig cfg = resolve(command, raw, env);
    const Outcome outcome = dispatch(cfg);
    if (cfg.out.empty()) {
      out << outcome.text;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw UsageError("--out: cannot open '" + cfg.out + "' for writing");
      file << outcome.text;
    }
    return outcome.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace latstab::cli
