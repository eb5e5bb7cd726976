#pragma once

// Dense matrix exponential by scaling and squaring of a truncated Taylor series.
//
// The argument is scaled by 2^-s so that ||A 2^-s||_1 <= 1/2, and Taylor terms are
// accumulated until the remainder bound
//   ||R_K|| <= ||B||^{K+1} / (K+1)! * 1 / (1 - ||B|| / (K+2))
// falls below `tolerance` (relative to ||exp(B)|| >= e^{-||B||}). The squaring
// phase is exact up to rounding.

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace sbsq {

struct ExpmInfo {
  int squarings = 0;
  int terms = 0;
  double remainder_bound = 0.0;
};

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> expm(
    const Eigen::MatrixBase<Derived>& a, double tolerance = 1e-17, ExpmInfo* info = nullptr) {
  using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix must be square");
  const Eigen::Index n = a.rows();

  // induced 1-norm
  const double norm = n == 0 ? 0.0 : a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const double scale = std::ldexp(1.0, -squarings);
  const Matrix b = a * scale;
  const double bnorm = norm * scale;

  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  double bound = bnorm;  // ||B||^{K+1}/(K+1)! at K = 0
  int k = 0;
  const double floor = tolerance * std::exp(-bnorm);
  constexpr int max_terms = 60;
  while (k < max_terms) {
    const double tail = bound / (1.0 - bnorm / (k + 2));
    if (tail <= floor || bnorm == 0.0) break;
    ++k;
    term = (term * b) / static_cast<double>(k);
    result += term;
    bound *= bnorm / (k + 1);
  }
  for (int i = 0; i < squarings; ++i) result = result * result;

  if (info) {
    info->squarings = squarings;
    info->terms = k;
    info->remainder_bound = bnorm == 0.0 ? 0.0 : bound / (1.0 - bnorm / (k + 2));
  }
  return result;
}

}  // namespace sbsq
