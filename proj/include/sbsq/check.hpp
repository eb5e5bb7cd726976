#pragma once

// Built-in reference scenario: 10 GHz phonon at resonance, g = u = 1 MHz,
// gamma = 10 mHz, n_in = 1e12 photons/s, thermal bath at 200 mK with a 1 MHz
// phonon damping rate. `reference_checks` compares a run against the expected
// numbers for that configuration.

#include <cmath>
#include <string>
#include <vector>

#include "sbsq/pipeline.hpp"
#include "sbsq/scenario.hpp"

namespace sbsq {

inline json reference_scenario_json() {
  return json::parse(R"({
    "waveguide": {"omega0": "193 THz", "vg": 7e7, "va": 8433, "length": 0.01,
                  "g": "1 MHz", "u": "1 MHz", "gamma": "10 mHz"},
    "drive": {"phonon_frequency": "10 GHz", "detuning": 0, "flux_in": 1e12},
    "geometry": "backward",
    "oracle": {"enabled": true, "cutoff": 0, "tolerance": 1e-8},
    "thermal": {"T": 0.2, "Gamma": "1 MHz", "Omega": "10 GHz"}
  })");
}

struct CheckResult {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;  ///< absolute
  bool passed = false;
};

inline CheckResult make_check(std::string name, double value, double expected, double tolerance) {
  return {std::move(name), value, expected, tolerance, std::abs(value - expected) <= tolerance};
}

inline std::vector<CheckResult> reference_checks(const RunReport& rep) {
  const double r = rep.squeeze.r;
  const auto& m = rep.analytic;
  std::vector<CheckResult> out;
  out.push_back(make_check("f [Hz]", rep.squeeze.f, 1e9, 1e-3 * 1e9));
  out.push_back(make_check("cosh^2 r", rep.coeffs.c * rep.coeffs.c, 1.0025, 1e-4));
  out.push_back(make_check("tanh r", std::tanh(r), 0.05, 1e-3));
  out.push_back(make_check("P_0", rep.pair_probabilities[0], 0.9975, 1e-4));
  out.push_back(make_check("P_1", rep.pair_probabilities[1], 0.0025, 1e-4));
  out.push_back(make_check("P_2", rep.pair_probabilities[2], 6.25e-6, 0.02 * 6.25e-6));
  out.push_back(make_check("S_a^X", m.a.squeeze_x, 0.0025, 1e-4));
  out.push_back(make_check("S_a^Y", m.a.squeeze_y, 0.0025, 1e-4));
  out.push_back(make_check("S_b^X", m.b.squeeze_x, 0.0025, 1e-4));
  out.push_back(make_check("S_b^Y", m.b.squeeze_y, 0.0025, 1e-4));
  out.push_back(make_check("S_c^X", m.c.squeeze_x, -0.0475, 5e-4));
  out.push_back(make_check("S_d^Y", m.d.squeeze_y, -0.0475, 5e-4));
  out.push_back(make_check("S_c^Y", m.c.squeeze_y, 0.0525, 5e-4));
  out.push_back(make_check("S_d^X", m.d.squeeze_x, 0.0525, 5e-4));
  if (rep.thermal) {
    out.push_back(make_check("Q", rep.thermal->Q, 1e4, 0.0));
    out.push_back(make_check("n_bar", rep.thermal->n_bar, 0.1, 0.05 * 0.1));
  }
  if (rep.oracle)
    out.push_back(make_check("oracle max deviation", rep.oracle->max_deviation, 0.0, 1e-8));
  return out;
}

}  // namespace sbsq
