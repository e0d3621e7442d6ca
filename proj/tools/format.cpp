// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#include "format.hpp"

#include <charconv>
#include <cmath>

namespace latstab::cli {

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json lambdas_json(const std::vector<double>& lambdas, const std::optional<std::vector<Rational>>& exact) {
  Json arr = Json::array();
  if (exact) {
    for (const auto& r : *exact) arr.push_back(r.to_string());
  } else {
    for (double x : lambdas) arr.push_back(format_double(x));
  }
  return arr;
}

Json to_json(const CountResult& c) {
  Json j;
  j["count"] = c.count;
  j["ambiguous"] = c.ambiguous;
  j["method"] = to_string(c.method);
  return j;
}

Json to_json(const MinimaResult& m) {
  Json j;
  j["lambdas"] = lambdas_json(m.lambdas, m.exact);
  j["witnesses"] = m.witnesses;
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["g"] = v.g;
  j["rhs"] = v.rhs;
  j["lambdas"] = lambdas_json(v.lambdas, v.exact_lambdas);
  j["status"] = to_string(v.status);
  j["ambiguous"] = v.ambiguous_points;
  if (!v.diagnostic.empty()) j["diagnostic"] = v.diagnostic;
  return j;
}

Json to_json(const StabilityReport& s) {
  Json j;
  j["delta"] = s.delta.to_string();
  j["radius"] = s.radius;
  j["circumradius"] = s.circumradius;
  return j;
}

Json to_json(const ThresholdReport& t) {
  Json j;
  j["p0"] = t.p0;
  j["excluded"] = t.excluded;
  j["beta_max"] = t.beta_max;
  if (!t.note.empty()) j["note"] = t.note;
  return j;
}

Json to_json(const SweepRecord& r) {
  Json j;
  j["opnorm"] = r.opnorm;
  j["g"] = r.g;
  j["rhs"] = r.rhs;
  j["status"] = to_string(r.status);
  j["corner_excluded"] = r.corner_excluded;
  return j;
}

Json to_json(const SandwichReport& s) {
  auto bounds = [](const std::vector<double>& lo, const std::vector<double>& hi, const std::vector<bool>& ok) {
    Json b;
    b["lower"] = lo;
    b["upper"] = hi;
    b["holds"] = ok;
    return b;
  };
  Json j;
  j["epsilon"] = s.epsilon;
  j["epsilon_prime"] = s.epsilon_prime;
  j["lambdas"] = s.lambdas;
  j["transformed_lambdas"] = s.transformed_lambdas;
  j["inclusion"] = bounds(s.inclusion_lower, s.inclusion_upper, s.inclusion_holds);
  j["exchanged"] = bounds(s.exchanged_lower, s.exchanged_upper, s.exchanged_holds);
  j["holds"] = s.all_inclusion_hold();
  return j;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_field(fields[i]);
  }
  line += '\n';
  return line;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::string out = std::string(kSweepCsvHeader) + "\n";
  for (const auto& r : records) {
    out += csv_row({format_double(r.opnorm), std::to_string(r.g), std::to_string(r.rhs), to_string(r.status),
                    r.corner_excluded ? "true" : "false"});
  }
  return out;
}

std::string lp_sweep_csv(const std::vector<LpSweepRow>& rows) {
  std::string out = std::string(kLpSweepCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += csv_row({r.p.is_infinite() ? "inf" : format_double(r.p.value()), std::to_string(r.count.count),
                    std::to_string(r.count.ambiguous), r.matches_box ? "true" : "false"});
  }
  return out;
}

Json to_json(const LpSweepRow& row) {
  Json j;
  if (row.p.is_infinite()) {
    j["p"] = "inf";
  } else {
    j["p"] = row.p.value();
  }
  j["count"] = row.count.count;
  j["ambiguous"] = row.count.ambiguous;
  j["matches_box"] = row.matches_box;
  return j;
}

}  // namespace latstab::cli
