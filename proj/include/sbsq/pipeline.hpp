#pragma once

// End-to-end pipeline: phase matching -> pump steady state -> Bogoliubov
// diagonalization -> closed-form statistics -> optional Fock-space oracle.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sbsq/bogoliubov.hpp"
#include "sbsq/focksim.hpp"
#include "sbsq/pump.hpp"
#include "sbsq/scenario.hpp"
#include "sbsq/squeezing.hpp"
#include "sbsq/waveguide.hpp"

namespace sbsq {

inline constexpr int reported_pairs = 6;  // P_0 .. P_5

struct OracleResult {
  int cutoff = 0;
  double tail_mass = 0.0;
  MomentTable moments;
  std::array<double, reported_pairs> pair_probabilities{};
  double max_deviation = 0.0;
  std::string worst_entry;
  double tolerance = 0.0;  ///< effective: max(requested, 10 * tail_mass)
  bool passed = false;
};

struct RunReport {
  Scenario scenario;
  BrillouinTriple triple;
  double omega_p = 0.0;
  PumpSteadyState pump;
  double coupling_phase = 0.0;  ///< arg f, absorbed into the phonon mode
  SqueezeSpec squeeze;
  BogoliubovCoeffs coeffs;
  MomentTable analytic;
  std::array<double, reported_pairs> pair_probabilities{};
  std::optional<OracleResult> oracle;
  std::optional<ThermalOccupation> thermal;
};

/// Numerically measures |r> on a truncated space and compares with the closed forms.
inline OracleResult run_oracle(double r, const OracleSpec& spec, const MomentTable& analytic) {
  OracleResult o;
  o.cutoff = spec.cutoff > 0 ? spec.cutoff : choose_cutoff(r);
  const FockSpace space(o.cutoff);
  o.tail_mass = pair_tail_mass(r, o.cutoff);
  const TwoModeState state = squeezed_vacuum(space, r);
  o.moments = measure_moments(state, r);
  o.max_deviation = max_deviation(o.moments, analytic, &o.worst_entry);
  const auto probs = pair_distribution(state, reported_pairs - 1);
  for (int n = 0; n < reported_pairs; ++n) {
    const double numeric = n < static_cast<int>(probs.size()) ? probs[std::size_t(n)] : 0.0;
    o.pair_probabilities[std::size_t(n)] = numeric;
    const double d = std::abs(numeric - pair_probability(r, n));
    if (d > o.max_deviation) {
      o.max_deviation = d;
      o.worst_entry = "P_" + std::to_string(n);
    }
  }
  o.tolerance = std::max(spec.tolerance, 10.0 * o.tail_mass);
  o.passed = o.max_deviation <= o.tolerance;
  return o;
}

inline RunReport run(const Scenario& sc) {
  RunReport rep;
  rep.scenario = sc;
  const WaveguideParams& wg = sc.waveguide;

  rep.triple = phase_match(wg, sc.k_pump, sc.geometry);
  if (!(rep.triple.Omega_phonon > 0.0))
    detail::raise(ErrorKind::NoSolution, "geometry",
                  "phase matching gives no propagating phonon (Omega = 0)");

  rep.omega_p = sc.omega_p.value_or(rep.triple.omega_pump - sc.detuning);
  const PumpDrive drive{rep.omega_p, sc.flux_in};
  rep.pump = pump_steady_state(rep.triple.omega_pump, drive, wg.g, wg.u, wg.gamma);

  // The coupling phase is a gauge choice on b; only |f| enters the spectrum.
  const double f = std::abs(rep.pump.effective_coupling);
  rep.coupling_phase = f > 0.0 ? std::arg(rep.pump.effective_coupling) : 0.0;

  const double omega = rep.omega_p - rep.triple.omega_signal;
  rep.squeeze = diagonalize(omega, rep.triple.Omega_phonon, f);
  rep.coeffs = transform_coeffs(rep.squeeze);
  rep.analytic = analytic_moments(rep.squeeze.r);
  for (int n = 0; n < reported_pairs; ++n)
    rep.pair_probabilities[std::size_t(n)] = pair_probability(rep.squeeze.r, n);

  if (sc.oracle.enabled) rep.oracle = run_oracle(rep.squeeze.r, sc.oracle, rep.analytic);

  if (sc.thermal) {
    const ThermalEnv env{sc.thermal->Omega.value_or(rep.triple.Omega_phonon), sc.thermal->T,
                         sc.thermal->Gamma};
    rep.thermal = thermal_occupation(env);
  }
  return rep;
}

struct SweepRow {
  double value = 0.0;
  std::optional<RunReport> report;
  std::optional<ErrorKind> error_kind;
  std::string error;
};

/// One run per grid value of the sweep block of `doc`, in grid order. Rows are
/// independent and evaluated concurrently; a failing row records its error.
inline std::vector<SweepRow> sweep(const json& doc) {
  const Scenario base = parse_scenario(doc);
  if (!base.sweep)
    detail::raise(ErrorKind::InvalidArgument, "sweep", "scenario has no sweep block");
  const SweepSpec& spec = *base.sweep;

  auto evaluate = [&doc, &spec](double value) {
    SweepRow row;
    row.value = value;
    try {
      row.report = run(parse_scenario(with_field(doc, spec.parameter, value)));
    } catch (const Error& e) {
      row.error_kind = e.kind();
      row.error = e.what();
    }
    return row;
  };

  std::vector<SweepRow> rows(spec.values.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) rows[i] = evaluate(spec.values[i]);
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, rows.size());
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return rows;
}

}  // namespace sbsq
