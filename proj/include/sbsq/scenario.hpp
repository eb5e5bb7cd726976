#pragma once

// JSON scenario files.
//
// Frequencies are Hz, given either as numbers or as strings with a unit suffix
// ("10 mHz", "1 MHz", "10 GHz", "193 THz"). Unknown keys are rejected so that
// a misspelled field cannot silently fall back to a default.
//
//   {
//     "waveguide": {"omega0": "193 THz", "vg": 7e7, "va": 8433, "length": 0.01,
//                   "g": "1 MHz", "u": "1 MHz", "gamma": "10 mHz"},
//     "drive":     {"phonon_frequency": "10 GHz", "detuning": 0, "flux_in": 1e12},
//     "geometry":  "backward",
//     "oracle":    {"enabled": true, "cutoff": 0, "tolerance": 1e-8},
//     "sweep":     {"parameter": "drive.flux_in", "values": [0, 1e10, 1e12]},
//     "thermal":   {"T": 0.2, "Gamma": "1 MHz"}
//   }
//
// The drive names the pump wavenumber either directly ("k_pump") or through the
// phonon frequency it should phase-match to ("phonon_frequency"), and the drive
// frequency either directly ("omega_p") or as a detuning below the pump mode.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbsq/errors.hpp"
#include "sbsq/pump.hpp"
#include "sbsq/squeezing.hpp"
#include "sbsq/waveguide.hpp"

namespace sbsq {

using json = nlohmann::json;

struct OracleSpec {
  bool enabled = false;
  int cutoff = 0;  ///< 0 selects the cutoff automatically
  double tolerance = 1e-8;
};

struct SweepSpec {
  std::string parameter;  ///< dotted path, e.g. "drive.flux_in"
  std::vector<double> values;
};

struct ThermalSpec {
  double T = 0.0;
  double Gamma = 0.0;
  std::optional<double> Omega;  ///< defaults to the phase-matched phonon frequency
};

struct Scenario {
  WaveguideParams waveguide;
  Geometry geometry = Geometry::backward;
  double k_pump = 0.0;
  std::optional<double> omega_p;  ///< absolute drive frequency
  double detuning = 0.0;          ///< pump mode minus drive frequency, used without omega_p
  double flux_in = 0.0;
  OracleSpec oracle;
  std::optional<SweepSpec> sweep;
  std::optional<ThermalSpec> thermal;
};

/// Numeric fields a sweep may vary.
inline constexpr std::array<std::string_view, 17> sweepable_fields{
    "waveguide.omega0", "waveguide.vg",       "waveguide.va",     "waveguide.length",
    "waveguide.g",      "waveguide.u",        "waveguide.gamma",  "drive.k_pump",
    "drive.phonon_frequency", "drive.omega_p", "drive.detuning",  "drive.flux_in",
    "oracle.tolerance", "thermal.T",          "thermal.Gamma",    "thermal.Omega",
    "oracle.cutoff"};

namespace detail {

inline double unit_scale(const std::string& unit, const std::string& field) {
  if (unit.empty() || unit == "Hz") return 1.0;
  if (unit == "mHz") return 1e-3;
  if (unit == "kHz") return 1e3;
  if (unit == "MHz") return 1e6;
  if (unit == "GHz") return 1e9;
  if (unit == "THz") return 1e12;
  raise(ErrorKind::InvalidArgument, field, "unknown frequency unit '" + unit + "'");
}

/// Number, or (when `frequency`) a string "<number> <unit>".
inline double read_number(const json& v, const std::string& field, bool frequency) {
  if (v.is_number()) return v.get<double>();
  if (frequency && v.is_string()) {
    static const std::regex pattern(R"(^\s*([-+]?[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*([a-zA-Z]*)\s*$)");
    const std::string text = v.get<std::string>();
    std::smatch m;
    if (!std::regex_match(text, m, pattern))
      raise(ErrorKind::InvalidArgument, field, "cannot parse frequency '" + text + "'");
    return std::stod(m[1].str()) * unit_scale(m[2].str(), field);
  }
  raise(ErrorKind::InvalidArgument, field,
        frequency ? "expected a number or a frequency string" : "expected a number");
}

inline void reject_unknown(const json& obj, const std::string& section,
                           std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) raise(ErrorKind::InvalidArgument, section, "expected an object");
  for (const auto& [key, _] : obj.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      raise(ErrorKind::InvalidArgument, section + "." + key, "unknown field");
}

inline const json& need(const json& obj, const std::string& section, const char* key) {
  if (!obj.contains(key))
    raise(ErrorKind::InvalidArgument, section + "." + key, "required field is missing");
  return obj.at(key);
}

inline double need_number(const json& obj, const std::string& section, const char* key,
                          bool frequency) {
  return read_number(need(obj, section, key), section + "." + key, frequency);
}

inline std::optional<double> maybe_number(const json& obj, const std::string& section,
                                          const char* key, bool frequency) {
  if (!obj.contains(key)) return std::nullopt;
  return read_number(obj.at(key), section + "." + key, frequency);
}

inline std::vector<double> sweep_grid(const json& s) {
  if (s.contains("values")) {
    if (!s.at("values").is_array() || s.at("values").empty())
      raise(ErrorKind::InvalidArgument, "sweep.values", "expected a non-empty array");
    std::vector<double> out;
    for (const auto& v : s.at("values")) out.push_back(read_number(v, "sweep.values", true));
    return out;
  }
  const double from = need_number(s, "sweep", "from", true);
  const double to = need_number(s, "sweep", "to", true);
  const json& steps_json = need(s, "sweep", "steps");
  if (!steps_json.is_number_integer() || steps_json.get<long>() < 1)
    raise(ErrorKind::InvalidArgument, "sweep.steps", "expected a positive integer");
  const long steps = steps_json.get<long>();
  const std::string scale = s.value("scale", std::string("linear"));
  if (scale != "linear" && scale != "log")
    raise(ErrorKind::InvalidArgument, "sweep.scale", "expected 'linear' or 'log'");
  if (scale == "log" && !(from > 0.0 && to > 0.0))
    raise(ErrorKind::InvalidArgument, "sweep.from", "log sweeps need positive endpoints");
  std::vector<double> out;
  for (long i = 0; i < steps; ++i) {
    const double x = steps == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(steps - 1);
    out.push_back(scale == "linear" ? from + (to - from) * x
                                    : std::exp(std::log(from) + (std::log(to) - std::log(from)) * x));
  }
  return out;
}

}  // namespace detail

/// Parses and validates a scenario document. Throws Error(InvalidArgument) naming the field.
inline Scenario parse_scenario(const json& doc) {
  using namespace detail;
  reject_unknown(doc, "scenario", {"waveguide", "drive", "geometry", "oracle", "sweep", "thermal"});
  Scenario sc;

  const json& wg = need(doc, "scenario", "waveguide");
  reject_unknown(wg, "waveguide", {"omega0", "vg", "va", "length", "g", "u", "gamma"});
  sc.waveguide.omega0 = need_number(wg, "waveguide", "omega0", true);
  sc.waveguide.vg = need_number(wg, "waveguide", "vg", false);
  sc.waveguide.va = need_number(wg, "waveguide", "va", false);
  sc.waveguide.length = need_number(wg, "waveguide", "length", false);
  sc.waveguide.g = need_number(wg, "waveguide", "g", true);
  sc.waveguide.u = need_number(wg, "waveguide", "u", true);
  sc.waveguide.gamma = maybe_number(wg, "waveguide", "gamma", true).value_or(0.0);
  sc.waveguide.validate();

  if (doc.contains("geometry")) {
    const json& geo = doc.at("geometry");
    if (geo == "backward") sc.geometry = Geometry::backward;
    else if (geo == "forward") sc.geometry = Geometry::forward;
    else raise(ErrorKind::InvalidArgument, "geometry", "expected 'backward' or 'forward'");
  }

  const json& dr = need(doc, "scenario", "drive");
  reject_unknown(dr, "drive", {"k_pump", "phonon_frequency", "omega_p", "detuning", "flux_in"});
  const auto k_pump = maybe_number(dr, "drive", "k_pump", false);
  const auto phonon = maybe_number(dr, "drive", "phonon_frequency", true);
  if (k_pump.has_value() == phonon.has_value())
    raise(ErrorKind::InvalidArgument, "drive.k_pump",
          "give exactly one of k_pump or phonon_frequency");
  if (phonon) {
    if (sc.geometry != Geometry::backward)
      raise(ErrorKind::InvalidArgument, "drive.phonon_frequency",
            "a target phonon frequency needs backward geometry");
    require(*phonon > 0.0, "drive.phonon_frequency", "must be positive");
    sc.k_pump = pump_wavenumber_for_phonon(sc.waveguide, *phonon);
  } else {
    sc.k_pump = *k_pump;
  }
  require(std::isfinite(sc.k_pump), "drive.k_pump", "must be finite");
  sc.omega_p = maybe_number(dr, "drive", "omega_p", true);
  const auto detuning = maybe_number(dr, "drive", "detuning", true);
  if (sc.omega_p && detuning)
    raise(ErrorKind::InvalidArgument, "drive.omega_p", "give at most one of omega_p or detuning");
  sc.detuning = detuning.value_or(0.0);
  require(std::isfinite(sc.detuning), "drive.detuning", "must be finite");
  sc.flux_in = need_number(dr, "drive", "flux_in", false);
  PumpDrive{sc.omega_p.value_or(0.0), sc.flux_in}.validate();

  if (doc.contains("oracle")) {
    const json& o = doc.at("oracle");
    reject_unknown(o, "oracle", {"enabled", "cutoff", "tolerance"});
    if (o.contains("enabled")) {
      if (!o.at("enabled").is_boolean())
        raise(ErrorKind::InvalidArgument, "oracle.enabled", "expected a boolean");
      sc.oracle.enabled = o.at("enabled").get<bool>();
    }
    if (o.contains("cutoff")) {
      const double c = read_number(o.at("cutoff"), "oracle.cutoff", false);
      require(c == std::floor(c) && (c == 0.0 || (c >= 2.0 && c <= 128.0)), "oracle.cutoff",
              "expected 0 (automatic) or an integer in [2, 128]");
      sc.oracle.cutoff = static_cast<int>(c);
    }
    if (o.contains("tolerance")) {
      sc.oracle.tolerance = read_number(o.at("tolerance"), "oracle.tolerance", false);
      require(sc.oracle.tolerance > 0.0, "oracle.tolerance", "must be positive");
    }
  }

  if (doc.contains("thermal")) {
    const json& t = doc.at("thermal");
    reject_unknown(t, "thermal", {"T", "Gamma", "Omega"});
    ThermalSpec th;
    th.T = need_number(t, "thermal", "T", false);
    th.Gamma = need_number(t, "thermal", "Gamma", true);
    th.Omega = maybe_number(t, "thermal", "Omega", true);
    require(th.T >= 0.0, "thermal.T", "must be non-negative");
    require(th.Gamma > 0.0, "thermal.Gamma", "must be positive");
    if (th.Omega) require(*th.Omega > 0.0, "thermal.Omega", "must be positive");
    sc.thermal = th;
  }

  if (doc.contains("sweep")) {
    const json& s = doc.at("sweep");
    reject_unknown(s, "sweep", {"parameter", "values", "from", "to", "steps", "scale"});
    SweepSpec sw;
    const json& p = need(s, "sweep", "parameter");
    if (!p.is_string()) raise(ErrorKind::InvalidArgument, "sweep.parameter", "expected a string");
    sw.parameter = p.get<std::string>();
    if (std::find(sweepable_fields.begin(), sweepable_fields.end(), sw.parameter) ==
        sweepable_fields.end())
      raise(ErrorKind::InvalidArgument, "sweep.parameter",
            "'" + sw.parameter + "' is not a numeric scenario field");
    sw.values = sweep_grid(s);
    sc.sweep = std::move(sw);
  }
  return sc;
}

/// Resolved single-point scenario (no sweep block); numbers in Hz, lossless.
inline json to_json(const Scenario& sc) {
  json doc;
  const auto& w = sc.waveguide;
  doc["waveguide"] = {{"omega0", w.omega0}, {"vg", w.vg},         {"va", w.va},
                      {"length", w.length}, {"g", w.g},           {"u", w.u},
                      {"gamma", w.gamma}};
  doc["geometry"] = sc.geometry == Geometry::backward ? "backward" : "forward";
  json drive{{"k_pump", sc.k_pump}, {"flux_in", sc.flux_in}};
  if (sc.omega_p) drive["omega_p"] = *sc.omega_p;
  else drive["detuning"] = sc.detuning;
  doc["drive"] = drive;
  doc["oracle"] = {{"enabled", sc.oracle.enabled},
                   {"cutoff", sc.oracle.cutoff},
                   {"tolerance", sc.oracle.tolerance}};
  if (sc.thermal) {
    json t{{"T", sc.thermal->T}, {"Gamma", sc.thermal->Gamma}};
    if (sc.thermal->Omega) t["Omega"] = *sc.thermal->Omega;
    doc["thermal"] = t;
  }
  return doc;
}

/// Copy of `doc` with the dotted numeric field set to `value` and the sweep block
/// removed. Setting one of a pair of alternative fields drops the other.
inline json with_field(json doc, const std::string& dotted, double value) {
  doc.erase("sweep");
  const auto dot = dotted.find('.');
  const std::string section = dotted.substr(0, dot);
  const std::string key = dotted.substr(dot + 1);
  json& sec = doc[section];
  if (section == "drive") {
    if (key == "k_pump") sec.erase("phonon_frequency");
    if (key == "phonon_frequency") sec.erase("k_pump");
    if (key == "omega_p") sec.erase("detuning");
    if (key == "detuning") sec.erase("omega_p");
  }
  if (key == "cutoff") sec[key] = static_cast<long>(std::llround(value));
  else sec[key] = value;
  return doc;
}

}  // namespace sbsq
