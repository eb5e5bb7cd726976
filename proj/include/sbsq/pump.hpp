#pragma once

// Steady state of the classically driven pump mode (input-output relation)
// and the pump-enhanced photon-phonon coupling.
//
// Note on symbols: the pump detuning here is a complex frequency
// (omega_mode - omega_drive) - i (u + gamma/2). It is unrelated to the
// Bogoliubov gap of bogoliubov.hpp, which is usually written with the same letter.

#include <cmath>
#include <complex>

#include "sbsq/errors.hpp"

namespace sbsq {

using cplx = std::complex<double>;

/// External classical drive. The input amplitude is real and positive.
struct PumpDrive {
  double omega_p = 0.0;  ///< drive frequency [Hz]
  double flux_in = 0.0;  ///< input photon flux [photons/s]

  double amplitude_in() const { return std::sqrt(flux_in); }

  void validate() const {
    detail::require(std::isfinite(omega_p), "drive.omega_p", "must be finite");
    detail::require(flux_in >= 0.0 && std::isfinite(flux_in), "drive.flux_in",
                    "must be finite and non-negative");
  }
};

struct PumpSteadyState {
  cplx detuning;               ///< complex detuning [Hz]
  cplx intracavity_amplitude;  ///< <a_pump> [sqrt(photons)]
  double intracavity_number = 0.0;
  cplx effective_coupling;  ///< f [Hz]
};

/// (omega_mode - omega_p) - i (u + gamma/2). Throws DegenerateLinewidth when u + gamma/2 == 0.
inline cplx pump_detuning(double omega_pump_mode, double omega_p, double u, double gamma) {
  const double linewidth = u + 0.5 * gamma;
  if (!(linewidth > 0.0))
    detail::raise(ErrorKind::DegenerateLinewidth, "waveguide.u",
                  "u + gamma/2 must be positive for a steady state to exist");
  return {omega_pump_mode - omega_p, -linewidth};
}

namespace detail {
inline void require_nonzero_detuning(cplx detuning) {
  if (detuning == cplx{0.0, 0.0})
    raise(ErrorKind::DegenerateLinewidth, "detuning", "detuning must be nonzero");
}
}  // namespace detail

/// lambda = sqrt(u) mu / (i Delta).
inline cplx pump_steady_amplitude(const PumpDrive& drive, cplx detuning, double u) {
  detail::require_nonzero_detuning(detuning);
  const cplx i{0.0, 1.0};
  return std::sqrt(u) * drive.amplitude_in() / (i * detuning);
}

/// f = g sqrt(u) mu / (i Delta). Real and non-negative at resonance.
inline cplx effective_coupling(double g, double u, const PumpDrive& drive, cplx detuning) {
  return g * pump_steady_amplitude(drive, detuning, u);
}

/// Intracavity photon number from the flux path: u n_in / |Delta|^2.
inline double intracavity_number(double u, double flux_in, cplx detuning) {
  detail::require_nonzero_detuning(detuning);
  return u * flux_in / std::norm(detuning);
}

/// Full steady state of the pump mode at frequency omega_pump_mode.
inline PumpSteadyState pump_steady_state(double omega_pump_mode, const PumpDrive& drive, double g,
                                         double u, double gamma) {
  PumpSteadyState s;
  s.detuning = pump_detuning(omega_pump_mode, drive.omega_p, u, gamma);
  s.intracavity_amplitude = pump_steady_amplitude(drive, s.detuning, u);
  s.intracavity_number = std::norm(s.intracavity_amplitude);
  s.effective_coupling = g * s.intracavity_amplitude;
  return s;
}

}  // namespace sbsq
