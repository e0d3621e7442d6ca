// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
//
// JSON and CSV renderings of library results. Key order is fixed so output is
// byte-identical between runs.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "latstab/bhw.hpp"
#include "latstab/enumeration.hpp"
#include "latstab/lp.hpp"
#include "latstab/minima.hpp"
#include "latstab/stability.hpp"

namespace latstab::cli {

using Json = nlohmann::ordered_json;

/// Shortest decimal that round-trips.
std::string format_double(double x);

/// Exact rationals when available, otherwise shortest decimals.
Json lambdas_json(const std::vector<double>& lambdas, const std::optional<std::vector<Rational>>& exact);

Json to_json(const CountResult& c);
Json to_json(const MinimaResult& m);
Json to_json(const Verdict& v);
Json to_json(const StabilityReport& s);
Json to_json(const ThresholdReport& t);
Json to_json(const SweepRecord& r);
Json to_json(const SandwichReport& s);

/// RFC-4180 field quoting: fields containing comma, quote, CR or LF are
/// wrapped in quotes with embedded quotes doubled.
std::string csv_field(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

inline constexpr const char* kSweepCsvHeader = "opnorm,g,rhs,status,corner_excluded";
std::string sweep_csv(const std::vector<SweepRecord>& records);

struct LpSweepRow {
  Exponent p;
  CountResult count;
  bool matches_box;
};
inline constexpr const char* kLpSweepCsvHeader = "p,count,ambiguous,matches_box";
std::string lp_sweep_csv(const std::vector<LpSweepRow>& rows);
Json to_json(const LpSweepRow& row);

}  // namespace latstab::cli
