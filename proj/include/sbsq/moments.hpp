#pragma once

// Report unit shared by the closed-form statistics and the Fock-space oracle.
//
// Quadratures follow X = (o + o^+)/sqrt(2), Y = (o - o^+)/(i sqrt(2)) so the
// vacuum variance is 1/2. The squeezing parameter is S = (Delta X)^2 - 1/2.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <string_view>

namespace sbsq {

struct QuadratureStats {
  double mean_x = 0.0;
  double mean_y = 0.0;
  double second_x = 0.5;  ///< <X^2>
  double second_y = 0.5;  ///< <Y^2>
  double delta_x = std::sqrt(0.5);
  double delta_y = std::sqrt(0.5);
  double product = 0.5;  ///< Delta X * Delta Y
  double squeeze_x = 0.0;
  double squeeze_y = 0.0;

  /// Fills uncertainties, product and squeezing parameters from the moments.
  void finish() {
    delta_x = std::sqrt(std::max(0.0, second_x - mean_x * mean_x));
    delta_y = std::sqrt(std::max(0.0, second_y - mean_y * mean_y));
    product = delta_x * delta_y;
    squeeze_x = delta_x * delta_x - 0.5;
    squeeze_y = delta_y * delta_y - 0.5;
  }
};

/// Expectation values of ladder-operator products in the state.
struct CrossMoments {
  double n_a = 0.0;      ///< <a^+ a>
  double n_b = 0.0;      ///< <b^+ b>
  double ab = 0.0;       ///< <a b>
  double a_dag_b = 0.0;  ///< <a^+ b>
  double a2 = 0.0;       ///< <a^2>
  double b2 = 0.0;       ///< <b^2>
  double c2 = 0.0;       ///< <c^2>
  double d2 = 0.0;       ///< <d^2>
  double n_c = 0.0;      ///< <c^+ c>
  double n_d = 0.0;      ///< <d^+ d>
};

/// Photon (a), phonon (b) and the mixed modes c = (a - b)/sqrt(2), d = (a + b)/sqrt(2).
struct MomentTable {
  double r = 0.0;
  QuadratureStats a, b, c, d;
  CrossMoments cross;
};

inline constexpr std::array<std::string_view, 4> mode_names{"a", "b", "c", "d"};

/// Visits every numeric entry except r as (name, value), in a fixed order.
template <typename Fn>
void for_each_entry(const MomentTable& t, Fn&& fn) {
  const std::array<const QuadratureStats*, 4> modes{&t.a, &t.b, &t.c, &t.d};
  for (std::size_t m = 0; m < modes.size(); ++m) {
    const auto& q = *modes[m];
    const std::string p(mode_names[m]);
    fn(p + ".mean_x", q.mean_x);
    fn(p + ".mean_y", q.mean_y);
    fn(p + ".second_x", q.second_x);
    fn(p + ".second_y", q.second_y);
    fn(p + ".delta_x", q.delta_x);
    fn(p + ".delta_y", q.delta_y);
    fn(p + ".product", q.product);
    fn(p + ".squeeze_x", q.squeeze_x);
    fn(p + ".squeeze_y", q.squeeze_y);
  }
  const auto& c = t.cross;
  fn(std::string("cross.n_a"), c.n_a);
  fn(std::string("cross.n_b"), c.n_b);
  fn(std::string("cross.ab"), c.ab);
  fn(std::string("cross.a_dag_b"), c.a_dag_b);
  fn(std::string("cross.a2"), c.a2);
  fn(std::string("cross.b2"), c.b2);
  fn(std::string("cross.c2"), c.c2);
  fn(std::string("cross.d2"), c.d2);
  fn(std::string("cross.n_c"), c.n_c);
  fn(std::string("cross.n_d"), c.n_d);
}

/// Largest absolute difference between corresponding entries; the name of the
/// worst entry is written to *worst when non-null.
inline double max_deviation(const MomentTable& lhs, const MomentTable& rhs,
                            std::string* worst = nullptr) {
  std::array<double, 46> values{};
  std::size_t n = 0;
  for_each_entry(lhs, [&](const std::string&, double v) { values[n++] = v; });
  double best = 0.0;
  n = 0;
  for_each_entry(rhs, [&](const std::string& name, double v) {
    const double d = std::abs(values[n++] - v);
    if (d > best || std::isnan(d)) {
      best = std::isnan(d) ? INFINITY : d;
      if (worst) *worst = name;
    }
  });
  return best;
}

/// Squeezing in dB relative to the vacuum variance: 10 log10((Delta X)^2 / (1/2)).
inline double squeezing_db(double variance) { return 10.0 * std::log10(variance / 0.5); }

}  // namespace sbsq
