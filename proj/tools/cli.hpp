// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "latstab/bodies.hpp"

namespace latstab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitViolation = 2,
  kExitAmbiguous = 3,
};

enum class Format { json, csv };

/// Everything a subcommand needs, after parsing and validation.
struct RunConfig {
  std::string command;
  std::vector<Rational> alphas;
  std::optional<std::size_t> dim;
  std::optional<Exponent> p;
  std::optional<std::vector<double>> p_grid;
  std::optional<std::vector<double>> givens;  // i, j, theta
  std::optional<std::vector<std::size_t>> plane;
  std::optional<double> theta;
  std::optional<std::vector<double>> thetas;
  std::optional<std::vector<double>> matrix;
  std::optional<double> scale;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::optional<double> max_opnorm;
  double eps = kDefaultEps;
  double tol = 1e-6;
  bool empirical = false;
  bool list_points = false;
  std::optional<Format> format;
  std::string out;
};

/// Process-level inputs kept separate from argv so tests can inject them.
struct Environment {
  std::optional<std::string> eps_override;  // LATSTAB_EPS
  static Environment from_process();
};

/// Parses `args` (without the program name), runs the subcommand and writes
/// the result to `out` (or the --out file). Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

/// Splits "2.3,1.7" into exact rationals; errors name the entry and offset.
std::vector<Rational> parse_rational_list(const std::string& flag, const std::string& text);

/// "2", "1.5", "inf".
Exponent parse_exponent(const std::string& text);

}  // namespace latstab::cli
