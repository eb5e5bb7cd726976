#pragma once

// Closed-form statistics of the two-mode squeezed vacuum
//   |r> = (1/cosh r) sum_n tanh^n r |n, n>.

#include <cmath>
#include <cstddef>
#include <vector>

#include "sbsq/constants.hpp"
#include "sbsq/errors.hpp"
#include "sbsq/moments.hpp"

namespace sbsq {

namespace detail {
inline void require_squeeze(double r) {
  require(r >= 0.0 && std::isfinite(r), "r", "squeeze parameter must be finite and non-negative");
}
}  // namespace detail

/// Probability of n photons and n phonons: tanh^{2n} r / cosh^2 r.
inline double pair_probability(double r, int n) {
  detail::require_squeeze(r);
  detail::require(n >= 0, "n", "pair number must be non-negative");
  const double t = std::tanh(r);
  const double c = std::cosh(r);
  return std::pow(t * t, n) / (c * c);
}

/// Mean pair number sum_n n P_n = sinh^2 r.
inline double mean_pair_number(double r) {
  const double s = std::sinh(r);
  return s * s;
}

/// Weight of pair numbers n >= cutoff: tanh^{2 cutoff} r.
inline double pair_tail_mass(double r, int cutoff) {
  detail::require_squeeze(r);
  const double t = std::tanh(r);
  return std::pow(t * t, cutoff);
}

/// Fills modes a and b: <X^2> = <Y^2> = cosh(2r)/2, S = sinh^2 r.
inline void fill_independent(MomentTable& t) {
  const double r = t.r;
  const double s = std::sinh(r);
  for (QuadratureStats* q : {&t.a, &t.b}) {
    q->mean_x = q->mean_y = 0.0;
    q->second_x = q->second_y = 0.5 * std::cosh(2.0 * r);
    q->delta_x = q->delta_y = std::sqrt(0.5 * std::cosh(2.0 * r));
    q->product = 0.5 + s * s;
    q->squeeze_x = q->squeeze_y = s * s;
  }
}

/// Fills modes c and d: X_c and Y_d squeezed by e^{-2r}, the conjugates stretched by e^{2r}.
inline void fill_mixed(MomentTable& t) {
  const double r = t.r;
  const double down = std::exp(-2.0 * r);
  const double up = std::exp(2.0 * r);
  // expm1 keeps the squeezing parameters accurate for small r
  const double s_down = 0.5 * std::expm1(-2.0 * r);
  const double s_up = 0.5 * std::expm1(2.0 * r);

  t.c.mean_x = t.c.mean_y = t.d.mean_x = t.d.mean_y = 0.0;
  t.c.second_x = t.d.second_y = 0.5 * down;
  t.c.second_y = t.d.second_x = 0.5 * up;
  t.c.delta_x = t.d.delta_y = std::exp(-r) / std::sqrt(2.0);
  t.c.delta_y = t.d.delta_x = std::exp(r) / std::sqrt(2.0);
  t.c.product = t.d.product = 0.5;
  t.c.squeeze_x = t.d.squeeze_y = s_down;
  t.c.squeeze_y = t.d.squeeze_x = s_up;
}

inline void fill_correlations(MomentTable& t) {
  const double ch = std::cosh(t.r);
  const double sh = std::sinh(t.r);
  auto& c = t.cross;
  c.n_a = c.n_b = c.n_c = c.n_d = sh * sh;
  c.ab = ch * sh;
  c.a_dag_b = 0.0;
  c.a2 = c.b2 = 0.0;
  c.c2 = -ch * sh;
  c.d2 = ch * sh;
}

inline MomentTable independent_moments(double r) {
  detail::require_squeeze(r);
  MomentTable t;
  t.r = r;
  fill_independent(t);
  return t;
}

inline MomentTable mixed_moments(double r) {
  detail::require_squeeze(r);
  MomentTable t;
  t.r = r;
  fill_mixed(t);
  return t;
}

inline CrossMoments correlation_moments(double r) {
  detail::require_squeeze(r);
  MomentTable t;
  t.r = r;
  fill_correlations(t);
  return t.cross;
}

/// Complete closed-form table.
inline MomentTable analytic_moments(double r) {
  detail::require_squeeze(r);
  MomentTable t;
  t.r = r;
  fill_independent(t);
  fill_mixed(t);
  fill_correlations(t);
  return t;
}

/// Leading terms of the pair expansion sum_n tanh^n r |n,n>.
struct BellExpansion {
  double tanh_r = 0.0;
  std::vector<double> amplitudes;    ///< tanh^n r / cosh r, n = 0..order
  std::vector<double> coefficients;  ///< amplitudes renormalized to unit norm
  double discarded_weight = 0.0;     ///< sum_{n > order} P_n
};

inline BellExpansion bell_expansion(double r, int order) {
  detail::require_squeeze(r);
  detail::require(order >= 0, "order", "must be non-negative");
  BellExpansion e;
  e.tanh_r = std::tanh(r);
  const double inv_cosh = 1.0 / std::cosh(r);
  double norm2 = 0.0;
  double term = inv_cosh;
  for (int n = 0; n <= order; ++n) {
    e.amplitudes.push_back(term);
    norm2 += term * term;
    term *= e.tanh_r;
  }
  const double norm = std::sqrt(norm2);
  for (double a : e.amplitudes) e.coefficients.push_back(a / norm);
  e.discarded_weight = pair_tail_mass(r, order + 1);
  return e;
}

/// Phonon bath: frequency [Hz], temperature [K], damping rate [Hz].
struct ThermalEnv {
  double Omega = 0.0;
  double T = 0.0;
  double Gamma = 0.0;

  void validate() const {
    detail::require(Omega > 0.0, "thermal.Omega", "must be positive");
    detail::require(T >= 0.0, "thermal.T", "must be non-negative");
    detail::require(Gamma > 0.0, "thermal.Gamma", "must be positive");
  }
};

struct ThermalOccupation {
  double n_bar = 0.0;
  double Q = 0.0;
};

/// Bose occupation 1/(exp(h Omega / k_B T) - 1) with Omega an ordinary
/// frequency, and quality factor Omega / Gamma.
inline ThermalOccupation thermal_occupation(const ThermalEnv& env) {
  env.validate();
  ThermalOccupation out;
  out.Q = env.Omega / env.Gamma;
  if (env.T > 0.0) {
    const double x = constants::planck * env.Omega / (constants::boltzmann * env.T);
    out.n_bar = 1.0 / std::expm1(x);
  }
  return out;
}

}  // namespace sbsq
