#pragma once

// Bogoliubov diagonalization of the two-mode squeezing Hamiltonian
//
//   H/h = omega a^+a + Omega b^+b + f (ab + a^+b^+),   f real, f >= 0,
//
// through alpha = cosh r a + sinh r b^+, beta = cosh r b + sinh r a^+.
// The squeeze parameter satisfies tanh 2r = f / omega_bar.

#include <cmath>

#include "sbsq/errors.hpp"

namespace sbsq {

/// Result of diagonalization. All frequencies in Hz.
struct SqueezeSpec {
  double omega = 0.0;      ///< signal frequency in the drive frame
  double Omega = 0.0;      ///< phonon frequency
  double f = 0.0;          ///< effective coupling (real, >= 0)
  double omega_bar = 0.0;  ///< (omega + Omega) / 2
  double delta = 0.0;      ///< (omega - Omega) / 2
  double gap = 0.0;        ///< sqrt(omega_bar^2 - f^2)
  double r = 0.0;          ///< squeeze parameter
  double omega_alpha = 0.0;
  double omega_beta = 0.0;
  double omega_0 = 0.0;  ///< vacuum shift, gap - omega_bar <= 0
};

struct BogoliubovCoeffs {
  double c = 1.0;  ///< cosh r
  double s = 0.0;  ///< sinh r
};

/// Bracketed coefficients of the Hamiltonian rewritten in alpha/beta at an
/// arbitrary trial r:
///   H = identity 1 + alpha a^+a-term + beta b^+b-term - offdiag (alpha beta + h.c.)
/// offdiag = (omega + Omega) cosh r sinh r - f (cosh^2 r + sinh^2 r) vanishes at the
/// diagonalizing r; it equals -f at r = 0.
struct HamiltonianCoefficients {
  double identity = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double offdiag = 0.0;
};

/// Throws Unstable if omega_bar <= f.
inline SqueezeSpec diagonalize(double omega, double Omega, double f) {
  detail::require(omega > 0.0 && std::isfinite(omega), "omega", "must be positive");
  detail::require(Omega > 0.0 && std::isfinite(Omega), "Omega", "must be positive");
  detail::require(f >= 0.0 && std::isfinite(f), "f", "must be real and non-negative");

  SqueezeSpec s;
  s.omega = omega;
  s.Omega = Omega;
  s.f = f;
  s.omega_bar = 0.5 * (omega + Omega);
  s.delta = 0.5 * (omega - Omega);
  if (!(s.omega_bar > f))
    detail::raise(ErrorKind::Unstable, "f",
                  "coupling must stay below the mean frequency (omega_bar > f)");

  s.gap = std::sqrt((s.omega_bar - f) * (s.omega_bar + f));
  s.r = 0.5 * std::atanh(f / s.omega_bar);
  s.omega_alpha = s.gap + s.delta;
  s.omega_beta = s.gap - s.delta;
  // gap - omega_bar written without cancellation
  s.omega_0 = -f * f / (s.omega_bar + s.gap);
  return s;
}

/// cosh r and sinh r from the gap. sinh^2 r uses f^2 / (2 gap (omega_bar + gap))
/// to avoid the cancellation in omega_bar - gap.
inline BogoliubovCoeffs transform_coeffs(const SqueezeSpec& spec) {
  const double two_gap = 2.0 * spec.gap;
  const double c2 = (spec.omega_bar + spec.gap) / two_gap;
  const double s2 = spec.f * spec.f / (two_gap * (spec.omega_bar + spec.gap));
  return {std::sqrt(c2), std::sqrt(s2)};
}

inline HamiltonianCoefficients hamiltonian_coefficients(double omega, double Omega, double f,
                                                        double r_test) {
  const double c = std::cosh(r_test);
  const double s = std::sinh(r_test);
  const double cs = c * s;
  HamiltonianCoefficients h;
  h.identity = (omega + Omega) * s * s - 2.0 * f * cs;
  h.alpha = omega * c * c + Omega * s * s - 2.0 * f * cs;
  h.beta = Omega * c * c + omega * s * s - 2.0 * f * cs;
  h.offdiag = (omega + Omega) * cs - f * (c * c + s * s);
  return h;
}

}  // namespace sbsq
