#pragma once

// JSON (nested, lossless) and CSV (flattened, one row per run) report writers.

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbsq/pipeline.hpp"

namespace sbsq {

struct ReportOptions {
  bool db = false;  ///< also report squeezing in dB
};

inline json to_json(const QuadratureStats& q) {
  return {{"mean_x", q.mean_x},       {"mean_y", q.mean_y},       {"second_x", q.second_x},
          {"second_y", q.second_y},   {"delta_x", q.delta_x},     {"delta_y", q.delta_y},
          {"product", q.product},     {"squeeze_x", q.squeeze_x}, {"squeeze_y", q.squeeze_y}};
}

inline json to_json(const MomentTable& t) {
  json out{{"r", t.r}};
  out["a"] = to_json(t.a);
  out["b"] = to_json(t.b);
  out["c"] = to_json(t.c);
  out["d"] = to_json(t.d);
  const auto& c = t.cross;
  out["cross"] = {{"n_a", c.n_a}, {"n_b", c.n_b}, {"ab", c.ab}, {"a_dag_b", c.a_dag_b},
                  {"a2", c.a2},   {"b2", c.b2},   {"c2", c.c2}, {"d2", c.d2},
                  {"n_c", c.n_c}, {"n_d", c.n_d}};
  return out;
}

inline json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline json to_json(const RunReport& rep, const ReportOptions& opt = {}) {
  json out;
  out["scenario"] = to_json(rep.scenario);
  const auto& t = rep.triple;
  out["triple"] = {{"k_pump", t.k_pump},
                   {"k_signal", t.k_signal},
                   {"q_phonon", t.q_phonon},
                   {"omega_pump", t.omega_pump},
                   {"omega_signal", t.omega_signal},
                   {"Omega_phonon", t.Omega_phonon},
                   {"energy_residual", t.energy_residual()}};
  out["pump"] = {{"omega_p", rep.omega_p},
                 {"detuning", complex_json(rep.pump.detuning)},
                 {"intracavity_amplitude", complex_json(rep.pump.intracavity_amplitude)},
                 {"intracavity_number", rep.pump.intracavity_number},
                 {"effective_coupling", complex_json(rep.pump.effective_coupling)},
                 {"coupling_phase", rep.coupling_phase}};
  const auto& s = rep.squeeze;
  out["squeeze"] = {{"omega", s.omega},
                    {"Omega", s.Omega},
                    {"f", s.f},
                    {"omega_bar", s.omega_bar},
                    {"delta", s.delta},
                    {"gap", s.gap},
                    {"r", s.r},
                    {"omega_alpha", s.omega_alpha},
                    {"omega_beta", s.omega_beta},
                    {"omega_0", s.omega_0},
                    {"cosh_r", rep.coeffs.c},
                    {"sinh_r", rep.coeffs.s},
                    {"cosh2_r", rep.coeffs.c * rep.coeffs.c},
                    {"tanh_r", std::tanh(s.r)}};
  out["moments"] = to_json(rep.analytic);
  out["pair_probabilities"] = rep.pair_probabilities;
  if (opt.db) {
    json db;
    const std::array<const QuadratureStats*, 4> modes{&rep.analytic.a, &rep.analytic.b,
                                                      &rep.analytic.c, &rep.analytic.d};
    for (std::size_t m = 0; m < modes.size(); ++m)
      db[std::string(mode_names[m])] = {{"x", squeezing_db(modes[m]->delta_x * modes[m]->delta_x)},
                                        {"y", squeezing_db(modes[m]->delta_y * modes[m]->delta_y)}};
    out["squeezing_db"] = db;
  }
  if (rep.oracle) {
    const auto& o = *rep.oracle;
    out["oracle"] = {{"cutoff", o.cutoff},
                     {"tail_mass", o.tail_mass},
                     {"moments", to_json(o.moments)},
                     {"pair_probabilities", o.pair_probabilities},
                     {"max_deviation", o.max_deviation},
                     {"worst_entry", o.worst_entry},
                     {"tolerance", o.tolerance},
                     {"passed", o.passed}};
  }
  if (rep.thermal) out["thermal"] = {{"n_bar", rep.thermal->n_bar}, {"Q", rep.thermal->Q}};
  return out;
}

inline json to_json(const std::vector<SweepRow>& rows, const std::string& parameter,
                    const ReportOptions& opt = {}) {
  json out{{"parameter", parameter}, {"rows", json::array()}};
  for (const auto& row : rows) {
    json r{{"value", row.value}};
    if (row.report) r["report"] = to_json(*row.report, opt);
    if (row.error_kind) {
      r["error"] = {{"kind", to_string(*row.error_kind)}, {"message", row.error}};
    }
    out["rows"].push_back(std::move(r));
  }
  return out;
}

namespace detail {

inline void flatten(const json& node, const std::string& prefix,
                    std::vector<std::pair<std::string, json>>& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i)
      flatten(node[i], prefix + "." + std::to_string(i), out);
  } else {
    out.emplace_back(prefix, node);
  }
}

inline std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return v.dump();  // numbers in shortest round-trip form
}

}  // namespace detail

/// CSV with one row per flattened JSON record; columns are `leading` followed by
/// the remaining keys in first-seen order.
inline void write_csv(std::ostream& os, const std::vector<json>& records,
                      const std::vector<std::string>& leading = {}) {
  std::vector<std::vector<std::pair<std::string, json>>> flat;
  std::vector<std::string> columns = leading;
  for (const auto& rec : records) {
    flat.emplace_back();
    detail::flatten(rec, "", flat.back());
    for (const auto& [k, _] : flat.back())
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
  }
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : flat) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) os << ',';
      for (const auto& [k, v] : row)
        if (k == columns[i]) {
          os << detail::csv_cell(v);
          break;
        }
    }
    os << '\n';
  }
}

inline void write_csv(std::ostream& os, const RunReport& rep, const ReportOptions& opt = {}) {
  write_csv(os, std::vector<json>{to_json(rep, opt)});
}

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows,
                      const std::string& parameter, const ReportOptions& opt = {}) {
  std::vector<json> records;
  for (const auto& row : rows) {
    json r{{"sweep", {{"parameter", parameter}, {"value", row.value}}}};
    r["error"] = row.error_kind ? json(to_string(*row.error_kind)) : json(nullptr);
    if (row.report) r.update(to_json(*row.report, opt));
    records.push_back(std::move(r));
  }
  write_csv(os, records, {"sweep.parameter", "sweep.value", "error"});
}

}  // namespace sbsq
