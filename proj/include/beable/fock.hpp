#pragma once

// Operators and states on a truncated oscillator basis (n_max+1 levels).
// Units: hbar = 1, oscillator mass = 1. Ladder convention a = (wQ + iP)/sqrt(2w),
// so <Q> = sqrt(2/w) Re(alpha) for a coherent state.

#include <cmath>

#include "beable/defs.hpp"

namespace beable {

struct CanonicalPair {
  Mat Q, P;
  double omega;
};

struct StateOperator {
  Mat rho;
  // Set when the requested state is too wide for the basis (|alpha|^2 > n_max/4);
  // the state is still returned, renormalized after truncation.
  bool truncation_warning = false;
};

inline CanonicalPair build_canonical(int n_max, double omega) {
  require(n_max >= 1, "build_canonical: n_max must be >= 1");
  require(omega > 0, "build_canonical: omega must be > 0");
  const int d = n_max + 1;
  Mat a = Mat::Zero(d, d);
  for (int j = 0; j + 1 < d; ++j) a(j, j + 1) = std::sqrt(double(j + 1));
  Mat ad = a.adjoint();
  CanonicalPair cp;
  cp.Q = (a + ad) / std::sqrt(2.0 * omega);
  cp.P = -I * std::sqrt(omega / 2.0) * (a - ad);
  cp.omega = omega;
  return cp;
}

inline Mat build_hamiltonian(const Mat& Q, const Mat& P, double omega) {
  require(Q.rows() == Q.cols() && P.rows() == P.cols() && Q.rows() == P.rows(),
          "build_hamiltonian: dimension mismatch");
  return (P * P + omega * omega * Q * Q) / 2.0;
}

inline StateOperator coherent_state(cplx alpha, int n_max) {
  require(n_max >= 1, "coherent_state: n_max must be >= 1");
  const int d = n_max + 1;
  CVec v(d);
  const double a2 = std::norm(alpha);
  if (a2 == 0.0) {
    v.setZero();
    v(0) = 1.0;
  } else {
    // log-space amplitudes keep n! manageable at large n
    const double la = std::log(std::abs(alpha));
    const double ph = std::arg(alpha);
    for (int n = 0; n < d; ++n)
      v(n) = std::exp(-a2 / 2 + n * la - 0.5 * std::lgamma(n + 1.0)) *
             std::exp(I * (ph * double(n)));
  }
  v /= v.norm();  // renormalize the truncated tail away
  StateOperator s;
  s.rho = v * v.adjoint();
  s.truncation_warning = a2 > n_max / 4.0;
  return s;
}

inline cplx expectation(const Mat& M, const Mat& rho) {
  require(M.rows() == rho.rows() && M.cols() == rho.cols(),
          "expectation: dimension mismatch");
  return (M * rho).trace();
}

// Truncation-safe block: the sub-matrix excluding the top two levels, on
// which operator identities ([Q,P] = iI etc.) hold exactly.
inline Mat safe_block(const Mat& M) {
  const int d = int(M.rows());
  require(d >= 3, "safe_block: dimension too small");
  return M.topLeftCorner(d - 2, d - 2);
}

// Scalar measure of top-level leakage: Frobenius norm of the border rows
// and columns that the truncation corrupts.
inline double truncation_defect(const Mat& M) {
  const int d = int(M.rows());
  if (d < 3) return M.norm();
  double s = M.bottomRows(2).squaredNorm() + M.rightCols(2).squaredNorm() -
             M.bottomRightCorner(2, 2).squaredNorm();
  return std::sqrt(std::max(0.0, s));
}

}  // namespace beable
