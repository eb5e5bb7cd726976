#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sbsq/pump.hpp"

using sbsq::cplx;

TEST(PumpDetuning, ResonanceIsPurelyImaginary) {
  const cplx d = sbsq::pump_detuning(2e14, 2e14, 1e6, 0.01);
  EXPECT_EQ(d.real(), 0.0);
  EXPECT_DOUBLE_EQ(d.imag(), -(1e6 + 0.005));
  EXPECT_DOUBLE_EQ(std::norm(d), (1e6 + 0.005) * (1e6 + 0.005));
}

TEST(PumpDetuning, OffResonance) {
  const cplx d = sbsq::pump_detuning(2e14 + 2e6, 2e14, 1e6, 0.0);
  EXPECT_DOUBLE_EQ(d.real(), 2e6);
  EXPECT_DOUBLE_EQ(d.imag(), -1e6);
}

TEST(PumpDetuning, ZeroLinewidthIsDegenerate) {
  try {
    sbsq::pump_detuning(1.0, 1.0, 0.0, 0.0);
    FAIL();
  } catch (const sbsq::Error& e) {
    EXPECT_EQ(e.kind(), sbsq::ErrorKind::DegenerateLinewidth);
  }
}

TEST(PumpSteadyAmplitude, NoDriveAndLinearity) {
  const cplx d = sbsq::pump_detuning(0.0, 0.0, 1e6, 0.0);
  EXPECT_EQ(sbsq::pump_steady_amplitude({0.0, 0.0}, d, 1e6), cplx(0.0, 0.0));
  const cplx d2{3e5, -1e6};
  const auto base = sbsq::pump_steady_amplitude({0.0, 1e10}, d2, 1e6);
  for (double c : {0.5, 2.0, 7.0}) {
    const auto scaled = sbsq::pump_steady_amplitude({0.0, c * c * 1e10}, d2, 1e6);
    EXPECT_NEAR(std::abs(scaled - c * base), 0.0, 1e-12 * std::abs(c * base));
  }
  EXPECT_THROW(sbsq::pump_steady_amplitude({0.0, 1.0}, cplx{}, 1e6), sbsq::Error);
}

TEST(PumpSteadyAmplitude, IntracavityNumberAtReferenceDrive) {
  // u n_in / |Delta|^2 with u = 1 MHz, gamma ~ 0, n_in = 1e12
  const cplx d = sbsq::pump_detuning(0.0, 0.0, 1e6, 0.0);
  const auto s = sbsq::pump_steady_state(0.0, {0.0, 1e12}, 1e6, 1e6, 0.0);
  EXPECT_DOUBLE_EQ(s.intracavity_number, 1e6);
  EXPECT_DOUBLE_EQ(sbsq::intracavity_number(1e6, 1e12, d), 1e6);
  // with gamma = 10 mHz, frozen from a 30-digit evaluation
  const auto s2 = sbsq::pump_steady_state(0.0, {0.0, 1e12}, 1e6, 1e6, 0.01);
  EXPECT_NEAR(s2.intracavity_number, 999999.99000000007, 1e-6);
}

TEST(EffectiveCoupling, ReferenceValueIsOneGigahertz) {
  const cplx d = sbsq::pump_detuning(2e14, 2e14, 1e6, 0.01);
  const cplx f = sbsq::effective_coupling(1e6, 1e6, {2e14, 1e12}, d);
  EXPECT_EQ(f.imag(), 0.0);
  EXPECT_GT(f.real(), 0.0);
  EXPECT_NEAR(f.real(), 999999995.00000002, 1e-4);
  EXPECT_NEAR(f.real(), 1e9, 1e-3 * 1e9);
}

TEST(EffectiveCoupling, ZeroDriveAndSqrtScaling) {
  const cplx d{1e5, -1e6};
  EXPECT_EQ(sbsq::effective_coupling(1e6, 1e6, {0.0, 0.0}, d), cplx(0.0, 0.0));
  const double f1 = std::abs(sbsq::effective_coupling(1e6, 1e6, {0.0, 1e12}, d));
  const double f2 = std::abs(sbsq::effective_coupling(1e6, 1e6, {0.0, 2e12}, d));
  EXPECT_NEAR(f2 / f1, std::sqrt(2.0), 1e-14);
}

TEST(PumpProperties, ModulusIdentityAndTwoPathNumber) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> g(0, 1e7), u(1e3, 1e8), gamma(0, 1e6), det(-1e8, 1e8),
      flux(0, 1e15);
  for (int i = 0; i < 1000; ++i) {
    const double gg = g(rng), uu = u(rng), gm = gamma(rng), n = flux(rng);
    const double mode = 2e14 + det(rng);
    const auto s = sbsq::pump_steady_state(mode, {2e14, n}, gg, uu, gm);
    EXPECT_EQ(s.detuning.imag(), -(uu + gm / 2));
    const double expected = gg * std::sqrt(uu * n) / std::abs(s.detuning);
    EXPECT_NEAR(std::abs(s.effective_coupling), expected, 1e-13 * (expected + 1e-300));
    const double from_flux = sbsq::intracavity_number(uu, n, s.detuning);
    EXPECT_NEAR(s.intracavity_number, from_flux, 1e-13 * (from_flux + 1e-300));
  }
}

TEST(PumpDrive, Validation) {
  EXPECT_NO_THROW((sbsq::PumpDrive{1.0, 0.0}.validate()));
  EXPECT_THROW((sbsq::PumpDrive{1.0, -1.0}.validate()), sbsq::Error);
  EXPECT_EQ((sbsq::PumpDrive{0.0, 4.0}.amplitude_in()), 2.0);
}
