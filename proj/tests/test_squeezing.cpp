#include <gtest/gtest.h>

#include <cmath>

#include "sbsq/squeezing.hpp"

namespace {
// r for omega = Omega = 10 GHz, f = 1 GHz (tanh 2r = 0.1)
constexpr double reference_r = 0.050167673865537790318;
}  // namespace

TEST(PairProbability, ReferenceValues) {
  EXPECT_NEAR(sbsq::pair_probability(reference_r, 0), 0.9975, 1e-4);
  EXPECT_NEAR(sbsq::pair_probability(reference_r, 1), 0.0025, 1e-4);
  EXPECT_NEAR(sbsq::pair_probability(reference_r, 2), 6.25e-6, 0.02 * 6.25e-6);
  // 30-digit evaluation
  EXPECT_NEAR(sbsq::pair_probability(reference_r, 2), 6.2971895642968234591e-6, 1e-20);
}

TEST(PairProbability, VacuumAndNormalization) {
  EXPECT_EQ(sbsq::pair_probability(0.0, 0), 1.0);
  EXPECT_EQ(sbsq::pair_probability(0.0, 3), 0.0);
  for (double r : {0.05, 0.3, 1.0}) {
    double sum = 0.0, mean = 0.0;
    const int n_max = 400;
    for (int n = 0; n < n_max; ++n) {
      sum += sbsq::pair_probability(r, n);
      mean += n * sbsq::pair_probability(r, n);
    }
    EXPECT_NEAR(1.0 - sum, sbsq::pair_tail_mass(r, n_max), 1e-14);
    EXPECT_NEAR(mean, sbsq::mean_pair_number(r), 1e-12);
    EXPECT_NEAR(mean, sbsq::correlation_moments(r).n_a, 1e-12);
    // geometric ratio tanh^2 r
    EXPECT_NEAR(sbsq::pair_probability(r, 3) / sbsq::pair_probability(r, 2),
                std::pow(std::tanh(r), 2), 1e-14);
  }
  EXPECT_THROW(sbsq::pair_probability(-0.1, 0), sbsq::Error);
  EXPECT_THROW(sbsq::pair_probability(0.1, -1), sbsq::Error);
}

TEST(IndependentMoments, ReferenceAndVacuum) {
  const auto t = sbsq::independent_moments(reference_r);
  for (double s : {t.a.squeeze_x, t.a.squeeze_y, t.b.squeeze_x, t.b.squeeze_y})
    EXPECT_NEAR(s, 0.0025, 1e-4);

  const auto v = sbsq::independent_moments(0.0);
  for (const auto* q : {&v.a, &v.b}) {
    EXPECT_EQ(q->second_x, 0.5);
    EXPECT_EQ(q->second_y, 0.5);
    EXPECT_NEAR(q->product, 0.5, 1e-16);
    EXPECT_EQ(q->squeeze_x, 0.0);
  }
  // 30-digit evaluation of cosh(0.6)/2
  EXPECT_NEAR(sbsq::independent_moments(0.3).a.second_x, 0.59273260912113385188, 1e-15);
}

TEST(MixedMoments, ReferenceAndVacuum) {
  const auto t = sbsq::mixed_moments(reference_r);
  EXPECT_NEAR(t.c.squeeze_x, -0.0475, 5e-4);
  EXPECT_NEAR(t.d.squeeze_y, -0.0475, 5e-4);
  EXPECT_NEAR(t.c.squeeze_y, 0.0525, 5e-4);
  EXPECT_NEAR(t.d.squeeze_x, 0.0525, 5e-4);
  EXPECT_NEAR(t.c.squeeze_x, -0.04773298313335456603, 1e-16);
  EXPECT_NEAR(t.c.squeeze_y, 0.052770798392566641519, 1e-16);

  const auto v = sbsq::mixed_moments(0.0);
  EXPECT_EQ(v.c.squeeze_x, 0.0);
  EXPECT_EQ(v.d.squeeze_y, 0.0);
  EXPECT_EQ(v.c.product, 0.5);
  EXPECT_NEAR(sbsq::mixed_moments(0.3).c.second_x, 0.27440581804701321631, 1e-15);
}

TEST(CorrelationMoments, Values) {
  const auto z = sbsq::correlation_moments(0.0);
  EXPECT_EQ(z.n_a, 0.0);
  EXPECT_EQ(z.ab, 0.0);
  EXPECT_EQ(z.c2, 0.0);
  EXPECT_NEAR(sbsq::correlation_moments(reference_r).n_a, 0.0025, 1e-4);
  const auto c = sbsq::correlation_moments(0.3);
  EXPECT_NEAR(c.ab, 0.31832679107412063556, 1e-15);
  EXPECT_EQ(c.c2, -c.ab);
  EXPECT_EQ(c.d2, c.ab);
  EXPECT_EQ(c.a_dag_b, 0.0);
  EXPECT_EQ(c.n_c, c.n_a);
}

TEST(MomentProperties, GridOverR) {
  for (double r = 0.0; r <= 2.0 + 1e-12; r += 0.01) {
    const auto t = sbsq::analytic_moments(r);
    const double sh2 = std::sinh(r) * std::sinh(r);
    EXPECT_NEAR(t.a.delta_x * t.a.delta_y - 0.5, sh2, 1e-12 * std::cosh(2 * r));
    EXPECT_NEAR(t.c.delta_x * t.c.delta_y, 0.5, 1e-12);
    EXPECT_NEAR(t.d.delta_x * t.d.delta_y, 0.5, 1e-12);
    EXPECT_NEAR((1 + 2 * t.c.squeeze_x) * (1 + 2 * t.c.squeeze_y), 1.0, 1e-12 * std::exp(2 * r));
    EXPECT_NEAR(t.c.second_x + t.d.second_x, 2 * t.a.second_x, 1e-12 * std::exp(2 * r));
    if (r > 0) {
      EXPECT_GT(t.a.squeeze_x, 0.0);
      EXPECT_GT(t.b.squeeze_y, 0.0);
      EXPECT_LT(t.c.squeeze_x, 0.0);
      EXPECT_LT(t.d.squeeze_y, 0.0);
    }
  }
}

TEST(BellExpansion, FirstOrder) {
  const auto e = sbsq::bell_expansion(0.05, 1);
  ASSERT_EQ(e.coefficients.size(), 2u);
  EXPECT_NEAR(e.coefficients[1] / e.coefficients[0], 0.049958374957879972198, 1e-15);
  EXPECT_NEAR(e.coefficients[0] * e.coefficients[0] + e.coefficients[1] * e.coefficients[1], 1.0,
              1e-15);
  EXPECT_NEAR(e.discarded_weight, 6.2292134541806835757e-6, 1e-18);
  EXPECT_NEAR(e.discarded_weight, 6.3e-6, 0.1e-6);
}

TEST(BellExpansion, VacuumAndFullOrder) {
  const auto v = sbsq::bell_expansion(0.0, 4);
  EXPECT_EQ(v.coefficients[0], 1.0);
  for (std::size_t n = 1; n < v.coefficients.size(); ++n) EXPECT_EQ(v.coefficients[n], 0.0);
  EXPECT_EQ(v.discarded_weight, 0.0);
  const auto full = sbsq::bell_expansion(0.4, 300);
  for (int n = 0; n < 10; ++n)
    EXPECT_NEAR(full.amplitudes[std::size_t(n)] * full.amplitudes[std::size_t(n)],
                sbsq::pair_probability(0.4, n), 1e-15);
}

TEST(ThermalOccupation, ReferenceBath) {
  const auto t = sbsq::thermal_occupation({10e9, 0.2, 1e6});
  EXPECT_EQ(t.Q, 1e4);
  EXPECT_NEAR(t.n_bar, 0.099810307495377316955, 1e-15);
  EXPECT_NEAR(t.n_bar, 0.1, 0.005);
}

TEST(ThermalOccupation, GroundStateLimit) {
  EXPECT_EQ(sbsq::thermal_occupation({10e9, 0.0, 1e6}).n_bar, 0.0);
  EXPECT_LT(sbsq::thermal_occupation({10e9, 1e-3, 1e6}).n_bar, 1e-200);
  EXPECT_THROW(sbsq::thermal_occupation({10e9, 0.2, 0.0}), sbsq::Error);
}

TEST(SqueezingDb, VacuumIsZero) {
  EXPECT_EQ(sbsq::squeezing_db(0.5), 0.0);
  EXPECT_NEAR(sbsq::squeezing_db(0.5 * std::exp(-2 * 0.5)), -10.0 * std::log10(std::exp(1.0)),
              1e-12);
}
