#pragma once

// Truncated two-mode Fock-space oracle for the squeezed vacuum.
//
// Basis |n_a, n_b>, n_a, n_b in [0, N), stored row-major with n_b fastest:
// index = n_a * N + n_b. Operator identities only hold away from the top Fock
// level, so checks are restricted to the low block n_a, n_b < N/2.
//
// The squeeze generator r (a^+b^+ - ab) conserves n_a - n_b, so S(r) is kept
// as one dense real block per sector m = n_a - n_b, each block the
// exponential of a tridiagonal antisymmetric matrix.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sbsq/errors.hpp"
#include "sbsq/expm.hpp"
#include "sbsq/moments.hpp"
#include "sbsq/squeezing.hpp"

namespace sbsq {

using cplx = std::complex<double>;
using SparseOp = Eigen::SparseMatrix<cplx>;
using StateVector = Eigen::VectorXcd;

class FockSpace {
 public:
  static constexpr int max_cutoff = 128;

  explicit FockSpace(int cutoff) : cutoff_(cutoff) {
    detail::require(cutoff >= 2, "cutoff", "Fock cutoff must be at least 2");
  }

  int cutoff() const noexcept { return cutoff_; }
  Eigen::Index dimension() const noexcept {
    return static_cast<Eigen::Index>(cutoff_) * cutoff_;
  }
  Eigen::Index index(int n_a, int n_b) const noexcept {
    return static_cast<Eigen::Index>(n_a) * cutoff_ + n_b;
  }
  int photons(Eigen::Index i) const noexcept { return static_cast<int>(i / cutoff_); }
  int phonons(Eigen::Index i) const noexcept { return static_cast<int>(i % cutoff_); }
  bool in_low_block(Eigen::Index i) const noexcept {
    return 2 * photons(i) < cutoff_ && 2 * phonons(i) < cutoff_;
  }

  friend bool operator==(const FockSpace&, const FockSpace&) = default;

 private:
  int cutoff_;
};

/// Smallest cutoff whose pair tail mass tanh^{2N} r is below epsilon.
/// Throws CutoffTooSmall if that exceeds FockSpace::max_cutoff.
inline int choose_cutoff(double r, double epsilon = 1e-12, int cap = FockSpace::max_cutoff) {
  detail::require(epsilon > 0.0 && epsilon < 1.0, "epsilon", "must lie in (0, 1)");
  for (int n = 2; n <= cap; ++n)
    if (pair_tail_mass(r, n) < epsilon) return n;
  detail::raise(ErrorKind::CutoffTooSmall, "cutoff",
                "no cutoff up to " + std::to_string(cap) + " resolves r = " + std::to_string(r));
}

/// Single-mode annihilator on N levels: <n-1|a|n> = sqrt(n).
inline Eigen::MatrixXd single_mode_annihilator(int cutoff) {
  detail::require(cutoff >= 2, "cutoff", "Fock cutoff must be at least 2");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

struct LadderOperators {
  SparseOp a, a_dag, b, b_dag;
};

inline LadderOperators ladder_operators(const FockSpace& space) {
  const int n = space.cutoff();
  const Eigen::Index dim = space.dimension();
  std::vector<Eigen::Triplet<cplx>> ta, tb;
  ta.reserve(static_cast<std::size_t>(dim));
  tb.reserve(static_cast<std::size_t>(dim));
  for (int na = 0; na < n; ++na) {
    for (int nb = 0; nb < n; ++nb) {
      const Eigen::Index col = space.index(na, nb);
      if (na > 0) ta.emplace_back(space.index(na - 1, nb), col, std::sqrt(double(na)));
      if (nb > 0) tb.emplace_back(space.index(na, nb - 1), col, std::sqrt(double(nb)));
    }
  }
  LadderOperators ops;
  ops.a.resize(dim, dim);
  ops.b.resize(dim, dim);
  ops.a.setFromTriplets(ta.begin(), ta.end());
  ops.b.setFromTriplets(tb.begin(), tb.end());
  ops.a_dag = ops.a.adjoint();
  ops.b_dag = ops.b.adjoint();
  return ops;
}

/// Unitary two-mode squeeze operator exp(r (a^+b^+ - ab)) on a truncated space.
class SqueezeOperator {
 public:
  struct Sector {
    int difference;  ///< n_a - n_b
    Eigen::MatrixXd block;
  };

  SqueezeOperator(const FockSpace& space, double r, double tolerance = 1e-17)
      : space_(space), r_(r) {
    const int n = space.cutoff();
    sectors_.reserve(static_cast<std::size_t>(2 * n - 1));
    for (int m = -(n - 1); m <= n - 1; ++m) {
      const int len = n - std::abs(m);
      Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(len, len);
      for (int k = 0; k + 1 < len; ++k) {
        const auto [na, nb] = sector_state(m, k);
        const double w = r * std::sqrt(double(na + 1) * double(nb + 1));
        gen(k + 1, k) = w;
        gen(k, k + 1) = -w;
      }
      sectors_.push_back({m, expm(gen, tolerance)});
    }
  }

  const FockSpace& space() const noexcept { return space_; }
  double r() const noexcept { return r_; }
  const std::vector<Sector>& sectors() const noexcept { return sectors_; }

  /// (n_a, n_b) of the k-th state of sector m.
  static std::pair<int, int> sector_state(int m, int k) noexcept {
    return m >= 0 ? std::pair{k + m, k} : std::pair{k, k - m};
  }

  StateVector apply(const StateVector& psi) const { return transform(psi, false); }
  StateVector apply_adjoint(const StateVector& psi) const { return transform(psi, true); }

  Eigen::SparseMatrix<double> to_sparse() const {
    std::vector<Eigen::Triplet<double>> trip;
    for (const auto& s : sectors_) {
      const Eigen::Index len = s.block.rows();
      for (Eigen::Index j = 0; j < len; ++j) {
        const auto [ca, cb] = sector_state(s.difference, int(j));
        for (Eigen::Index i = 0; i < len; ++i) {
          const auto [ra, rb] = sector_state(s.difference, int(i));
          trip.emplace_back(space_.index(ra, rb), space_.index(ca, cb), s.block(i, j));
        }
      }
    }
    Eigen::SparseMatrix<double> out(space_.dimension(), space_.dimension());
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
  }

 private:
  StateVector transform(const StateVector& psi, bool adjoint) const {
    detail::require(psi.size() == space_.dimension(), "state", "dimension mismatch");
    StateVector out = StateVector::Zero(psi.size());
    Eigen::VectorXcd local;
    for (const auto& s : sectors_) {
      const Eigen::Index len = s.block.rows();
      local.resize(len);
      for (Eigen::Index k = 0; k < len; ++k) {
        const auto [na, nb] = sector_state(s.difference, int(k));
        local(k) = psi(space_.index(na, nb));
      }
      const Eigen::VectorXcd mapped = adjoint ? Eigen::VectorXcd(s.block.transpose() * local)
                                              : Eigen::VectorXcd(s.block * local);
      for (Eigen::Index k = 0; k < len; ++k) {
        const auto [na, nb] = sector_state(s.difference, int(k));
        out(space_.index(na, nb)) = mapped(k);
      }
    }
    return out;
  }

  FockSpace space_;
  double r_;
  std::vector<Sector> sectors_;
};

/// Builds S(r); throws CutoffTooSmall when the pair tail mass beyond the cutoff exceeds epsilon.
inline SqueezeOperator squeeze_operator(const FockSpace& space, double r, double epsilon = 1e-12) {
  const double tail = pair_tail_mass(r, space.cutoff());
  if (tail > epsilon) {
    std::ostringstream msg;
    msg << "tail mass " << tail << " beyond cutoff " << space.cutoff() << " exceeds " << epsilon;
    detail::raise(ErrorKind::CutoffTooSmall, "cutoff", msg.str());
  }
  return SqueezeOperator(space, r);
}

/// Largest |(S S^+ - I)_{ij}| with both i and j in the low block.
inline double low_block_unitarity_residual(const SqueezeOperator& s) {
  const FockSpace& space = s.space();
  double worst = 0.0;
  for (const auto& sec : s.sectors()) {
    const Eigen::MatrixXd p = sec.block * sec.block.transpose();
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      const auto [ca, cb] = SqueezeOperator::sector_state(sec.difference, int(j));
      if (!space.in_low_block(space.index(ca, cb))) continue;
      for (Eigen::Index i = 0; i < p.rows(); ++i) {
        const auto [ra, rb] = SqueezeOperator::sector_state(sec.difference, int(i));
        if (!space.in_low_block(space.index(ra, rb))) continue;
        worst = std::max(worst, std::abs(p(i, j) - (i == j ? 1.0 : 0.0)));
      }
    }
  }
  return worst;
}

class TwoModeState {
 public:
  TwoModeState(const FockSpace& space, StateVector amplitudes)
      : space_(space), amplitudes_(std::move(amplitudes)) {
    detail::require(amplitudes_.size() == space_.dimension(), "state", "dimension mismatch");
  }

  static TwoModeState basis(const FockSpace& space, int n_a, int n_b) {
    detail::require(n_a >= 0 && n_a < space.cutoff() && n_b >= 0 && n_b < space.cutoff(),
                    "state", "occupation outside the truncated space");
    StateVector v = StateVector::Zero(space.dimension());
    v(space.index(n_a, n_b)) = 1.0;
    return {space, std::move(v)};
  }
  static TwoModeState vacuum(const FockSpace& space) { return basis(space, 0, 0); }

  const FockSpace& space() const noexcept { return space_; }
  const StateVector& amplitudes() const noexcept { return amplitudes_; }
  cplx amplitude(int n_a, int n_b) const { return amplitudes_(space_.index(n_a, n_b)); }
  double norm() const { return amplitudes_.norm(); }

 private:
  FockSpace space_;
  StateVector amplitudes_;
};

/// |r> = S(r) |0,0> via the sector exponential.
inline TwoModeState squeezed_vacuum(const FockSpace& space, double r, double epsilon = 1e-12) {
  const SqueezeOperator s = squeeze_operator(space, r, epsilon);
  return {space, s.apply(TwoModeState::vacuum(space).amplitudes())};
}

namespace detail {
// exp(x O) psi for nilpotent O on the truncated space; the series terminates exactly.
inline StateVector nilpotent_exp_apply(const SparseOp& op, double x, const StateVector& psi,
                                       int max_order) {
  StateVector out = psi;
  StateVector term = psi;
  for (int k = 1; k <= max_order; ++k) {
    term = (op * term) * (x / k);
    if (term.squaredNorm() == 0.0) break;
    out += term;
  }
  return out;
}
}  // namespace detail

/// Applies exp(tanh r a^+b^+) exp(-ln cosh r (n_a + n_b + 1)) exp(-tanh r ab) to psi.
/// On the truncated space this reproduces the closed-form pair amplitudes of
/// S(r)|0,0> for n < N without any matrix exponential.
inline TwoModeState factorized_squeeze_apply(const TwoModeState& psi, double r) {
  detail::require_squeeze(r);
  const FockSpace& space = psi.space();
  const LadderOperators ops = ladder_operators(space);
  const SparseOp pair_create = ops.a_dag * ops.b_dag;
  const SparseOp pair_annihilate = ops.a * ops.b;
  const double t = std::tanh(r);
  const double log_cosh = std::log(std::cosh(r));
  const int order = space.cutoff();

  StateVector v = detail::nilpotent_exp_apply(pair_annihilate, -t, psi.amplitudes(), order);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double occupation = space.photons(i) + space.phonons(i) + 1;
    v(i) *= std::exp(-log_cosh * occupation);
  }
  v = detail::nilpotent_exp_apply(pair_create, t, v, order);
  return {space, std::move(v)};
}

inline TwoModeState factorized_squeezed_vacuum(const FockSpace& space, double r) {
  return factorized_squeeze_apply(TwoModeState::vacuum(space), r);
}

/// Residuals of the Bogoliubov conjugation S^+ a S = cosh r a + sinh r b^+ (and the
/// b counterpart) on the low block, plus commutator checks of the transformed operators.
struct BogoliubovResidual {
  int working_cutoff = 0;         ///< cutoff of the space S(r) was built on
  double edge_weight = 0.0;       ///< largest top-level amplitude of S acting on the low block
  double alpha = 0.0;
  double beta = 0.0;
  double cross_commutator = 0.0;  ///< max |[alpha, beta^+]|
  double self_commutator = 0.0;   ///< max |[alpha, alpha^+] - 1|
  double max() const { return std::max(alpha, beta); }
};

/// Largest amplitude that S(r) puts on the top two Fock levels when acting on
/// a state of the low block of `target` (n_a, n_b < target.cutoff()/2).
inline double edge_weight(const SqueezeOperator& s, const FockSpace& target) {
  double edge = 0.0;
  const int n = target.cutoff();
  for (const auto& sec : s.sectors()) {
    const Eigen::Index len = sec.block.rows();
    for (Eigen::Index j = 0; j < len; ++j) {
      const auto [na, nb] = SqueezeOperator::sector_state(sec.difference, int(j));
      if (2 * na >= n || 2 * nb >= n) continue;
      for (Eigen::Index i = std::max<Eigen::Index>(0, len - 2); i < len; ++i)
        edge = std::max(edge, std::abs(sec.block(i, j)));
    }
  }
  return edge;
}

namespace detail {
template <typename InBlock>
double block_max(InBlock&& in_block, const SparseOp& m, bool subtract_identity) {
  double worst = 0.0;
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (SparseOp::InnerIterator it(m, k); it; ++it) {
      if (!in_block(it.row()) || !in_block(it.col())) continue;
      cplx v = it.value();
      if (subtract_identity && it.row() == it.col()) v -= 1.0;
      worst = std::max(worst, std::abs(v));
    }
  }
  if (subtract_identity) {
    // diagonal entries missing from the sparsity pattern contribute |0 - 1|
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (in_block(i) && m.coeff(i, i) == cplx{}) worst = std::max(worst, 1.0);
  }
  return worst;
}
}  // namespace detail

/// Conjugation check on the low block of `space`.
///
/// Squeezing a Fock state near n = N/2 spreads it well past N, so S(r) is built
/// on a working space padded (in steps of 8 levels) until the low-block columns
/// carry less than `edge_tolerance` on the top levels. Throws CutoffTooSmall if
/// that needs more than FockSpace::max_cutoff levels.
inline BogoliubovResidual bogoliubov_check(const FockSpace& space, double r,
                                           double edge_tolerance = 1e-7) {
  detail::require_squeeze(r);
  int working = space.cutoff();
  SqueezeOperator s(space, r);
  double edge = edge_weight(s, space);
  while (edge > edge_tolerance) {
    if (working >= FockSpace::max_cutoff)
      detail::raise(ErrorKind::CutoffTooSmall, "cutoff",
                    "conjugation check needs more than " +
                        std::to_string(FockSpace::max_cutoff) + " levels");
    working = std::min(working + 8, FockSpace::max_cutoff);
    s = SqueezeOperator(FockSpace(working), r);
    edge = edge_weight(s, space);
  }

  const FockSpace work(working);
  const SparseOp sm = s.to_sparse().cast<cplx>();
  const SparseOp sm_dag = sm.adjoint();
  const LadderOperators ops = ladder_operators(work);
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);

  const SparseOp alpha = sm_dag * ops.a * sm;
  const SparseOp beta = sm_dag * ops.b * sm;
  const SparseOp alpha_expected = ch * ops.a + sh * ops.b_dag;
  const SparseOp beta_expected = ch * ops.b + sh * ops.a_dag;

  // low block of the requested space, expressed in working-space indices
  auto in_block = [&](Eigen::Index i) {
    return 2 * work.photons(i) < space.cutoff() && 2 * work.phonons(i) < space.cutoff();
  };
  BogoliubovResidual res;
  res.working_cutoff = working;
  res.edge_weight = edge;
  res.alpha = detail::block_max(in_block, SparseOp(alpha - alpha_expected), false);
  res.beta = detail::block_max(in_block, SparseOp(beta - beta_expected), false);
  const SparseOp alpha_dag = alpha.adjoint();
  const SparseOp beta_dag = beta.adjoint();
  res.cross_commutator =
      detail::block_max(in_block, SparseOp(alpha * beta_dag - beta_dag * alpha), false);
  res.self_commutator =
      detail::block_max(in_block, SparseOp(alpha * alpha_dag - alpha_dag * alpha), true);
  return res;
}

namespace detail {
// Normal-ordered: X^2 = Re o^2 + o^dag o + 1/2. Only o acts on psi, and o maps
// the truncated space into itself exactly, so the top level loses nothing.
inline void measure_mode(const SparseOp& op, const StateVector& psi, QuadratureStats& q,
                         double& max_imag) {
  const double sqrt2 = std::sqrt(2.0);
  const StateVector o = op * psi;
  const cplx mean = psi.dot(o);
  const cplx square = psi.dot(op * o);
  const double number = o.squaredNorm();
  max_imag = std::max(max_imag, std::abs(square.imag()));
  q.mean_x = sqrt2 * mean.real();
  q.mean_y = sqrt2 * mean.imag();
  q.second_x = square.real() + number + 0.5;
  q.second_y = -square.real() + number + 0.5;
  q.finish();
}
}  // namespace detail

/// Numerical moment table <psi|O|psi> built from the truncated ladder matrices.
/// When non-null, *max_imaginary receives the largest imaginary part discarded.
inline MomentTable measure_moments(const TwoModeState& state, double r_label = 0.0,
                                   double* max_imaginary = nullptr) {
  detail::require(std::abs(state.norm() - 1.0) < 1e-10, "state", "state must be normalized");
  const LadderOperators ops = ladder_operators(state.space());
  const StateVector& psi = state.amplitudes();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const SparseOp c = (ops.a - ops.b) * inv_sqrt2;
  const SparseOp d = (ops.a + ops.b) * inv_sqrt2;

  MomentTable t;
  t.r = r_label;
  double max_imag = 0.0;
  detail::measure_mode(ops.a, psi, t.a, max_imag);
  detail::measure_mode(ops.b, psi, t.b, max_imag);
  detail::measure_mode(c, psi, t.c, max_imag);
  detail::measure_mode(d, psi, t.d, max_imag);

  const StateVector a_psi = ops.a * psi;
  const StateVector b_psi = ops.b * psi;
  const StateVector c_psi = c * psi;
  const StateVector d_psi = d * psi;
  auto expect = [&](const StateVector& v) {
    const cplx z = psi.dot(v);
    max_imag = std::max(max_imag, std::abs(z.imag()));
    return z.real();
  };
  auto& x = t.cross;
  x.n_a = a_psi.squaredNorm();
  x.n_b = b_psi.squaredNorm();
  x.n_c = c_psi.squaredNorm();
  x.n_d = d_psi.squaredNorm();
  x.ab = expect(ops.a * b_psi);
  x.a_dag_b = expect(ops.a_dag * b_psi);
  x.a2 = expect(ops.a * a_psi);
  x.b2 = expect(ops.b * b_psi);
  x.c2 = expect(c * c_psi);
  x.d2 = expect(d * d_psi);
  if (max_imaginary) *max_imaginary = max_imag;
  return t;
}

/// |amplitude(n, n)|^2 for n = 0..n_max.
inline std::vector<double> pair_distribution(const TwoModeState& state, int n_max) {
  std::vector<double> p;
  for (int n = 0; n <= n_max && n < state.space().cutoff(); ++n)
    p.push_back(std::norm(state.amplitude(n, n)));
  return p;
}

/// Mean photon number sum |amplitude|^2 n_a.
inline double mean_photon_number(const TwoModeState& state) {
  double total = 0.0;
  const auto& v = state.amplitudes();
  for (Eigen::Index i = 0; i < v.size(); ++i) total += std::norm(v(i)) * state.space().photons(i);
  return total;
}

/// Total weight off the n_a == n_b diagonal.
inline double off_diagonal_weight(const TwoModeState& state) {
  double total = 0.0;
  const auto& v = state.amplitudes();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (state.space().photons(i) != state.space().phonons(i)) total += std::norm(v(i));
  return total;
}

struct HeraldResult {
  double probability = 0.0;
  std::vector<double> phonon_distribution;  ///< conditional P(n_b | n_a = n_detected)
};

/// Projects on n_a = n_detected photons and returns the renormalized phonon statistics.
inline HeraldResult herald(const TwoModeState& state, int n_detected) {
  const int n = state.space().cutoff();
  detail::require(n_detected >= 0 && n_detected < n, "n_detected",
                  "photon number outside the truncated space");
  HeraldResult h;
  h.phonon_distribution.resize(static_cast<std::size_t>(n));
  for (int nb = 0; nb < n; ++nb) {
    const double w = std::norm(state.amplitude(n_detected, nb));
    h.phonon_distribution[static_cast<std::size_t>(nb)] = w;
    h.probability += w;
  }
  const double total = state.amplitudes().squaredNorm();
  if (total > 0.0) h.probability /= total;
  if (h.probability < 1e-15)
    detail::raise(ErrorKind::ZeroProbability, "n_detected",
                  "projection onto " + std::to_string(n_detected) + " photons has no weight");
  const double weight = h.probability * total;
  for (double& p : h.phonon_distribution) p /= weight;
  return h;
}

struct TruncationReport {
  double tail_mass = 0.0;           ///< sum_{n >= N} P_n
  double max_edge_amplitude = 0.0;  ///< max |amplitude(N-1, n_b)|
};

inline TruncationReport truncation_report(const FockSpace& space, double r) {
  TruncationReport rep;
  rep.tail_mass = pair_tail_mass(r, space.cutoff());
  const TwoModeState s = squeezed_vacuum(space, r, 1.0);
  for (int nb = 0; nb < space.cutoff(); ++nb)
    rep.max_edge_amplitude =
        std::max(rep.max_edge_amplitude, std::abs(s.amplitude(space.cutoff() - 1, nb)));
  return rep;
}

/// Text dump: a header line, then "n_a n_b re im" per basis state in index order.
inline void write_state(std::ostream& os, const TwoModeState& state) {
  const int n = state.space().cutoff();
  os << "# two-mode state cutoff " << n << " order n_a-major\n";
  const auto old_precision = os.precision(std::numeric_limits<double>::max_digits10);
  for (int na = 0; na < n; ++na)
    for (int nb = 0; nb < n; ++nb) {
      const cplx z = state.amplitude(na, nb);
      os << na << ' ' << nb << ' ' << z.real() << ' ' << z.imag() << '\n';
    }
  os.precision(old_precision);
}

inline TwoModeState read_state(std::istream& is) {
  std::string line;
  int cutoff = 0;
  if (!std::getline(is, line) || line.rfind("# two-mode state cutoff ", 0) != 0)
    detail::raise(ErrorKind::InvalidArgument, "state", "missing state dump header");
  std::istringstream header(line.substr(24));
  header >> cutoff;
  const FockSpace space(cutoff);
  StateVector v = StateVector::Zero(space.dimension());
  Eigen::Index rows = 0;
  int na = 0, nb = 0;
  double re = 0.0, im = 0.0;
  while (is >> na >> nb >> re >> im) {
    if (na < 0 || na >= cutoff || nb < 0 || nb >= cutoff)
      detail::raise(ErrorKind::InvalidArgument, "state", "occupation outside cutoff");
    v(space.index(na, nb)) = cplx(re, im);
    ++rows;
  }
  if (rows != space.dimension())
    detail::raise(ErrorKind::InvalidArgument, "state", "state dump is incomplete");
  return {space, std::move(v)};
}

}  // namespace sbsq
