#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "sbsq/bogoliubov.hpp"

namespace {

// Heisenberg equations for (a, b^+): i d/dt (a, b^+) = M (a, b^+) with
// M = [[omega, f], [-f, -Omega]]. Its eigenvalues are omega_alpha and -omega_beta.
std::pair<double, double> dynamical_eigenfrequencies(double omega, double Omega, double f) {
  Eigen::Matrix2d m;
  m << omega, f, -f, -Omega;
  Eigen::EigenSolver<Eigen::Matrix2d> es(m);
  const auto ev = es.eigenvalues();
  double hi = std::max(ev(0).real(), ev(1).real());
  double lo = std::min(ev(0).real(), ev(1).real());
  return {hi, -lo};
}

struct Draw {
  double omega, Omega, f;
};

std::vector<Draw> random_stable(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> freq(1e8, 1e11), frac(0.0, 0.99);
  std::vector<Draw> out;
  for (int i = 0; i < count; ++i) {
    const double w = freq(rng), W = freq(rng);
    out.push_back({w, W, frac(rng) * 0.5 * (w + W)});
  }
  return out;
}

}  // namespace

TEST(Diagonalize, ReferenceExample) {
  const auto s = sbsq::diagonalize(10e9, 10e9, 1e9);
  // frozen from a 30-digit evaluation
  EXPECT_NEAR(s.r, 0.050167673865537790318, 1e-15);
  EXPECT_NEAR(s.gap, 9.9498743710661995473e9, 1e-5);
  EXPECT_EQ(s.delta, 0.0);
  EXPECT_EQ(s.omega_alpha, s.gap);
  EXPECT_EQ(s.omega_beta, s.gap);
  EXPECT_NEAR(s.omega_0, -0.050125628933800452655e9, 1e-6);
  EXPECT_NEAR(std::cosh(s.r) * std::cosh(s.r), 1.0025, 1e-4);
  EXPECT_NEAR(std::sinh(s.r) * std::sinh(s.r), 0.0025, 1e-4);
  EXPECT_NEAR(std::tanh(s.r), 0.05, 1e-3);
}

TEST(Diagonalize, GapMatchesDynamicalMatrix) {
  const auto [alpha, beta] = dynamical_eigenfrequencies(10e9, 10e9, 1e9);
  const auto s = sbsq::diagonalize(10e9, 10e9, 1e9);
  EXPECT_NEAR(s.omega_alpha, alpha, 1e-6 * alpha);
  EXPECT_NEAR(s.omega_beta, beta, 1e-6 * beta);
  for (const auto& d : random_stable(200, 5)) {
    const auto sp = sbsq::diagonalize(d.omega, d.Omega, d.f);
    const auto [a, b] = dynamical_eigenfrequencies(d.omega, d.Omega, d.f);
    EXPECT_NEAR(sp.omega_alpha, a, 1e-7 * sp.omega_bar);
    EXPECT_NEAR(sp.omega_beta, b, 1e-7 * sp.omega_bar);
  }
}

TEST(Diagonalize, DecoupledModes) {
  const auto s = sbsq::diagonalize(3e9, 7e9, 0.0);
  EXPECT_EQ(s.r, 0.0);
  EXPECT_DOUBLE_EQ(s.omega_alpha, 3e9);
  EXPECT_DOUBLE_EQ(s.omega_beta, 7e9);
  EXPECT_EQ(s.omega_0, 0.0);
}

TEST(Diagonalize, StabilityBoundary) {
  const double wbar = 10e9;
  EXPECT_NO_THROW(sbsq::diagonalize(wbar, wbar, wbar * (1 - 1e-12)));
  for (double f : {wbar, wbar * (1 + 1e-12), 2 * wbar}) {
    try {
      sbsq::diagonalize(wbar, wbar, f);
      FAIL() << "f = " << f;
    } catch (const sbsq::Error& e) {
      EXPECT_EQ(e.kind(), sbsq::ErrorKind::Unstable);
      EXPECT_EQ(e.parameter(), "f");
    }
  }
  EXPECT_THROW(sbsq::diagonalize(-1.0, 1.0, 0.0), sbsq::Error);
  EXPECT_THROW(sbsq::diagonalize(1.0, 1.0, -0.1), sbsq::Error);
}

TEST(Diagonalize, SpectralProperties) {
  for (const auto& d : random_stable(1000, 9)) {
    const auto s = sbsq::diagonalize(d.omega, d.Omega, d.f);
    EXPECT_NEAR(s.omega_alpha + s.omega_beta, 2 * s.gap, 1e-12 * s.omega_bar);
    EXPECT_NEAR(s.omega_alpha - s.omega_beta, d.omega - d.Omega, 1e-12 * s.omega_bar);
    EXPECT_NEAR(s.omega_0, s.gap - s.omega_bar, 1e-12 * s.omega_bar);
    EXPECT_LE(s.omega_0, 0.0);
    if (d.f > 0.0) EXPECT_LT(s.omega_0, 0.0);
  }
}

TEST(TransformCoeffs, IdentityAndReference) {
  const auto c0 = sbsq::transform_coeffs(sbsq::diagonalize(5e9, 5e9, 0.0));
  EXPECT_EQ(c0.c, 1.0);
  EXPECT_EQ(c0.s, 0.0);
  const auto s = sbsq::diagonalize(10e9, 10e9, 1e9);
  const auto c = sbsq::transform_coeffs(s);
  EXPECT_NEAR(c.c * c.s, 0.050251890762960603774, 1e-15);
  EXPECT_NEAR(c.c * c.s, std::cosh(0.0501676738655) * std::sinh(0.0501676738655), 1e-12);
}

TEST(TransformCoeffs, SymplecticAndOffDiagonalElimination) {
  for (const auto& d : random_stable(1000, 21)) {
    const auto s = sbsq::diagonalize(d.omega, d.Omega, d.f);
    const auto c = sbsq::transform_coeffs(s);
    EXPECT_NEAR(c.c * c.c - c.s * c.s, 1.0, 1e-12);
    EXPECT_GE(c.c, 1.0);
    EXPECT_GE(c.s, 0.0);
    if (d.f > 0) EXPECT_NEAR(c.c * c.s, d.f / (2 * s.gap), 1e-10 * d.f / (2 * s.gap));
    const double lhs = (d.omega + d.Omega) * c.c * c.s;
    const double rhs = d.f * (c.c * c.c + c.s * c.s);
    EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(rhs, 1e-300) + 1e-300);
  }
}

TEST(TransformCoeffs, AtanhPathMatchesGapPath) {
  for (double ratio = 0.0; ratio <= 0.99; ratio += 0.01) {
    const auto s = sbsq::diagonalize(7e9, 13e9, ratio * 10e9);
    const auto c = sbsq::transform_coeffs(s);
    const double r_gap = std::asinh(c.s);
    EXPECT_NEAR(s.r, r_gap, 1e-12 * std::max(s.r, 1e-300)) << ratio;
  }
}

TEST(HamiltonianCoefficients, IdentityTransformation) {
  const auto h = sbsq::hamiltonian_coefficients(3e9, 7e9, 1e9, 0.0);
  EXPECT_EQ(h.identity, 0.0);
  EXPECT_EQ(h.alpha, 3e9);
  EXPECT_EQ(h.beta, 7e9);
  EXPECT_EQ(h.offdiag, -1e9);
}

TEST(HamiltonianCoefficients, DiagonalAtOptimalR) {
  const auto s = sbsq::diagonalize(10e9, 10e9, 1e9);
  const auto h = sbsq::hamiltonian_coefficients(10e9, 10e9, 1e9, s.r);
  EXPECT_LT(std::abs(h.offdiag), 1e-10 * 20e9);
  EXPECT_NEAR(h.alpha, 9.9498743710661995473e9, 1e-2);
  EXPECT_NEAR(h.beta, 9.9498743710661995473e9, 1e-2);
  EXPECT_NEAR(h.identity, -0.050125628933800452655e9, 1e-2);

  for (const auto& d : random_stable(500, 33)) {
    const auto sp = sbsq::diagonalize(d.omega, d.Omega, d.f);
    const auto hc = sbsq::hamiltonian_coefficients(d.omega, d.Omega, d.f, sp.r);
    const double scale = d.omega + d.Omega;
    EXPECT_LT(std::abs(hc.offdiag), 1e-10 * scale * std::cosh(2 * sp.r));
    EXPECT_NEAR(hc.alpha, sp.omega_alpha, 1e-9 * scale * std::cosh(2 * sp.r));
    EXPECT_NEAR(hc.beta, sp.omega_beta, 1e-9 * scale * std::cosh(2 * sp.r));
    EXPECT_NEAR(hc.identity, sp.omega_0, 1e-9 * scale * std::cosh(2 * sp.r));
  }
}

TEST(HamiltonianCoefficients, OffDiagonalBracketsTheRoot) {
  for (const auto& d : random_stable(500, 44)) {
    if (d.f == 0.0) continue;
    const auto sp = sbsq::diagonalize(d.omega, d.Omega, d.f);
    const double below = sbsq::hamiltonian_coefficients(d.omega, d.Omega, d.f, 0.5 * sp.r).offdiag;
    const double above = sbsq::hamiltonian_coefficients(d.omega, d.Omega, d.f, 2.0 * sp.r).offdiag;
    EXPECT_LT(below, 0.0);
    EXPECT_GT(above, 0.0);
  }
}
