#pragma once

// Linear photon and phonon dispersion in a nanoscale waveguide and the
// energy/momentum phase-matching solver for the Brillouin triple
// (pump photon -> signal photon + phonon).

#include <cmath>
#include <cstdint>
#include <vector>

#include "sbsq/constants.hpp"
#include "sbsq/errors.hpp"

namespace sbsq {

enum class Branch { forward, backward };
enum class Geometry { backward, forward };

/// Physical configuration of the waveguide. Frequencies in Hz, velocities in m/s.
struct WaveguideParams {
  double omega0 = 0.0;  ///< photon reference frequency
  double vg = 0.0;      ///< photon group velocity
  double va = 0.0;      ///< acoustic velocity
  double length = 0.0;  ///< waveguide length [m]
  double g = 0.0;       ///< Brillouin coupling (local field approximation)
  double u = 0.0;       ///< mirror in/out coupling
  double gamma = 0.0;   ///< photon free-space damping rate

  /// Throws InvalidArgument naming the first field that breaks an invariant.
  void validate() const {
    using detail::require;
    require(std::isfinite(omega0), "waveguide.omega0", "must be finite");
    require(va > 0.0, "waveguide.va", "acoustic velocity must be positive");
    require(vg > va, "waveguide.vg", "group velocity must exceed the acoustic velocity");
    require(length > 0.0, "waveguide.length", "must be positive");
    require(g >= 0.0, "waveguide.g", "must be non-negative");
    require(u >= 0.0, "waveguide.u", "must be non-negative");
    require(gamma >= 0.0, "waveguide.gamma", "must be non-negative");
  }
};

/// Pump, signal and phonon on the phase-matched point. Momentum conservation
/// k_pump = k_signal + q_phonon holds by construction.
struct BrillouinTriple {
  double k_pump = 0.0;
  double k_signal = 0.0;
  double q_phonon = 0.0;
  double omega_pump = 0.0;
  double omega_signal = 0.0;
  double Omega_phonon = 0.0;

  /// |omega_pump - omega_signal - Omega_phonon| / omega_pump
  double energy_residual() const {
    const double scale = std::abs(omega_pump) > 0.0 ? std::abs(omega_pump) : 1.0;
    return std::abs(omega_pump - omega_signal - Omega_phonon) / scale;
  }
  double momentum_residual() const { return std::abs(k_pump - k_signal - q_phonon); }
};

/// omega0 + vg k on the forward branch, omega0 - vg k on the backward branch.
inline double photon_frequency(const WaveguideParams& p, double k, Branch branch = Branch::forward) {
  return branch == Branch::forward ? p.omega0 + p.vg * k : p.omega0 - p.vg * k;
}

/// Acoustic phonon frequency va |q|; even in q.
inline double phonon_frequency(const WaveguideParams& p, double q) { return p.va * std::abs(q); }

/// Periodic-boundary wavenumbers 2 pi n / L for n in [n_min, n_max].
inline std::vector<double> allowed_wavenumbers(const WaveguideParams& p, std::int64_t n_min,
                                               std::int64_t n_max) {
  detail::require(n_min <= n_max, "n_min", "n_min must not exceed n_max");
  detail::require(p.length > 0.0, "waveguide.length", "must be positive");
  const double spacing = 2.0 * constants::pi / p.length;
  std::vector<double> ks;
  ks.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (std::int64_t n = n_min; n <= n_max; ++n) ks.push_back(spacing * static_cast<double>(n));
  return ks;
}

/// Solves energy and momentum conservation for a pump photon at k_pump on the
/// forward branch.
///
/// Backward geometry puts the signal on the backward branch:
///   vg kp = -vg (kp - q) + va |q|  =>  q = 2 vg kp / (vg + sign(kp) va).
/// Forward geometry keeps the signal on the pump branch, where vg q = va |q|
/// admits only q = 0 unless vg == va (then every q solves it: NoSolution).
inline BrillouinTriple phase_match(const WaveguideParams& p, double k_pump,
                                   Geometry geometry = Geometry::backward) {
  BrillouinTriple t;
  t.k_pump = k_pump;

  if (geometry == Geometry::backward) {
    const double sign = k_pump > 0.0 ? 1.0 : (k_pump < 0.0 ? -1.0 : 0.0);
    const double denom = p.vg + sign * p.va;
    if (denom == 0.0)
      detail::raise(ErrorKind::NoSolution, "waveguide.vg",
                    "backward phase matching is singular for vg == va");
    t.q_phonon = 2.0 * p.vg * k_pump / denom;
    t.k_signal = k_pump - t.q_phonon;
    t.omega_pump = photon_frequency(p, k_pump, Branch::forward);
    t.omega_signal = photon_frequency(p, t.k_signal, Branch::backward);
  } else {
    if (p.vg == p.va)
      detail::raise(ErrorKind::NoSolution, "waveguide.vg",
                    "forward phase matching is degenerate for vg == va");
    t.q_phonon = 0.0;
    t.k_signal = k_pump;
    t.omega_pump = photon_frequency(p, k_pump, Branch::forward);
    t.omega_signal = t.omega_pump;
  }
  t.Omega_phonon = phonon_frequency(p, t.q_phonon);
  return t;
}

/// Pump wavenumber whose backward-geometry phonon has frequency Omega (> 0).
inline double pump_wavenumber_for_phonon(const WaveguideParams& p, double Omega) {
  detail::require(Omega >= 0.0, "phonon_frequency", "must be non-negative");
  return Omega * (p.vg + p.va) / (2.0 * p.vg * p.va);
}

}  // namespace sbsq
