#pragma once

// Gaussian path-integral oracles on the uniform time grid: the composed
// oscillator amplitude (real and imaginary mass), the discrete monitored
// characteristic functional, its world-line density factorization, and the
// Fourier analysis of the piecewise-linear interpolant.
//
// Everything here is an exact Gaussian computation: the only approximations
// are the time discretization itself and, in the brute-force cross-checks,
// lattice quadrature.

#include <functional>
#include <utility>
#include <vector>

#include "beable/kernel.hpp"

namespace beable {

struct WorldLine {
  RVec values;  // Q_0 .. Q_N
  GridSpec grid;
};

// Gaussian pure state psi(x) = (pi w^2)^{-1/4} exp(-(x-cQ)^2/(2w^2) + i cP x).
// Keeps every endpoint integral closed-form; general initial operators are
// reached by mixing these.
struct GaussianEndpointState {
  double center_Q = 0, center_P = 0, width = 1;
};

struct Amplitude {
  cplx value{0, 0};
  int prefactor_branch = 0;  // accumulated sign flips of the sqrt prefactor
};

namespace detail {

inline bool is_real_mass(cplx m) { return std::abs(m.imag()) < 1e-14; }
inline bool is_imag_mass(cplx m) { return std::abs(m.real()) < 1e-14; }

inline void check_mass(cplx m) {
  require(is_real_mass(m) ? m.real() > 0 : (is_imag_mass(m) && m.imag() > 0),
          "mass must be positive real or positive imaginary");
}

}  // namespace detail

// Closed-form oscillator amplitude
//   sqrt(m w / (2 pi i sin w tau)) exp{ i m w [(Q0^2+QF^2) cos - 2 Q0 QF] / (2 sin) }.
// For real mass the square-root phase is tracked continuously across the
// zeros of sin(w tau): each crossed zero contributes a factor exp(-i pi/2).
inline Amplitude feynman_exact(double Q0, double QF, double tau, double omega,
                               cplx mass) {
  detail::check_mass(mass);
  require(tau > 0 && omega > 0, "feynman_exact: tau and omega must be > 0");
  const double s = std::sin(omega * tau), cs = std::cos(omega * tau);
  if (std::abs(s) < 1e-12)
    throw numeric_error("feynman_exact: caustic, sin(omega tau) is zero");
  const cplx phase_arg =
      mass * omega * ((Q0 * Q0 + QF * QF) * cs - 2 * Q0 * QF) / (2 * s);
  Amplitude out;
  if (detail::is_real_mass(mass)) {
    const int branch = int(std::floor(omega * tau / M_PI));
    const double mag = std::sqrt(mass.real() * omega / (2 * M_PI * std::abs(s)));
    out.value = mag * std::exp(-I * (M_PI / 4 + (M_PI / 2) * double(branch))) *
                std::exp(I * phase_arg);
    out.prefactor_branch = branch;
  } else {
    out.value = std::sqrt(mass * omega / (2 * M_PI * I * s)) * std::exp(I * phase_arg);
  }
  return out;
}

// Composed N-step amplitude. Each intermediate integration is the exact
// Gaussian
//   int dy exp(i[alpha y^2 + beta y]) = sqrt(i pi / alpha) exp(-i beta^2 / (4 alpha)),
// threaded through the running form exp(logA + i[a x^2 + b x Q0 + c Q0^2]).
// The potential rides on the earlier point of each step, so the final point
// carries none (the same convention as the kernel stencil). For real mass
// the sqrt phase is accumulated per step from the sign of alpha; negative
// signs are counted in prefactor_branch.
inline Amplitude feynman_discrete(double Q0, double QF, const GridSpec& grid,
                                  cplx mass) {
  detail::check_mass(mass);
  require(grid.N >= 1 && grid.eps > 0, "feynman_discrete: need N >= 1 steps");
  require(grid.omega > 0, "feynman_discrete: omega must be > 0");
  const bool realm = detail::is_real_mass(mass);
  const double eps = grid.eps;
  const cplx k0 = mass / (2 * eps);
  const cplx w2 = mass * eps * grid.omega * grid.omega / 2.0;

  cplx logA = realm
                  ? cplx(0.5 * std::log(mass.real() / (2 * M_PI * eps)), -M_PI / 4)
                  : 0.5 * std::log(mass / (2 * M_PI * eps * I));
  cplx a = k0, b = -2.0 * k0, c = k0 - w2;
  int branch = 0;

  for (int j = 1; j < grid.N; ++j) {
    const cplx alpha = a + k0 - w2;
    if (std::abs(alpha) < 1e-12 * std::abs(k0))
      throw numeric_error(
          "feynman_discrete: degenerate intermediate Gaussian (caustic on the "
          "grid)");
    if (realm) {
      const double al = alpha.real();
      if (al < 0) ++branch;
      logA +=
          cplx(0.5 * std::log(M_PI / std::abs(al)), (M_PI / 4) * (al > 0 ? 1 : -1));
      logA += cplx(0.5 * std::log(mass.real() / (2 * M_PI * eps)), -M_PI / 4);
    } else {
      logA += 0.5 * std::log(I * M_PI / alpha) +
              0.5 * std::log(mass / (2.0 * I * M_PI * eps));
    }
    const cplx b_old = b;
    a = k0 - k0 * k0 / alpha;
    b = k0 * b_old / alpha;
    c = c - b_old * b_old / (4.0 * alpha);
  }

  Amplitude out;
  out.value = std::exp(logA + I * (a * QF * QF + b * QF * Q0 + c * Q0 * Q0));
  out.prefactor_branch = branch;
  return out;
}

// Number of negative eigenvalues 2 - lambda - 2 cos(j pi / N) of the
// intermediate-point quadratic form; equals the sqrt-prefactor sign count
// of the composed real-mass amplitude.
inline int caustic_mode_count(const GridSpec& grid) {
  int count = 0;
  for (int j = 1; j < grid.N; ++j)
    if (2.0 - grid.lambda() - 2.0 * std::cos(j * M_PI / grid.N) < 0) ++count;
  return count;
}

namespace detail {

// principal-log determinant of a complex matrix whose spectrum lies in the
// right half plane (true here: the symmetric part of every assembled block
// is positive semidefinite, pushed definite by the endpoint state)
inline cplx logdet_principal(const Mat& A) {
  Eigen::ComplexEigenSolver<Mat> es(A);
  require(es.info() == Eigen::Success, "logdet: eigensolver failed");
  cplx s = 0;
  for (int i = 0; i < A.rows(); ++i) s += std::log(es.eigenvalues()(i));
  return s;
}

inline cplx gaussian_endpoint_wave(double x, const GaussianEndpointState& st) {
  const double w2 = st.width * st.width;
  return std::pow(M_PI * w2, -0.25) *
         std::exp(cplx(-(x - st.center_Q) * (x - st.center_Q) / (2 * w2), 0) +
                  I * st.center_P * x);
}

}  // namespace detail

// Monitored two-sided Gaussian evaluation: all the integrals of the
// characteristic functional
//   <QF| G[xi] rho0 |QF'>
// over the interior points of the doubled world line (Q, Q') reduce to one
// complex-symmetric quadratic form. This object precomputes the kernel
// blocks; value() performs the endpoint-constrained reduction.
class CharacteristicFunctional {
 public:
  CharacteristicFunctional(const GaussianEndpointState& rho0, const GridSpec& grid,
                           double gamma)
      : rho0_(rho0), grid_(grid), gamma_(gamma) {
    require(gamma > 0, "characteristic functional: gamma must be > 0");
    require(rho0.width > 0, "characteristic functional: width must be > 0");
    K_ = build_K(grid).entries;
    Kbar_ = reduce(build_K(grid)).entries;
    G_ = invert_reduced(KernelMatrix{Kbar_}, grid.eps);  // throws if not PD
  }

  const GridSpec& grid() const { return grid_; }
  const RMat& kernel() const { return K_; }
  const InverseKernel& covariance() const { return G_; }

  // exponent data: -1/2 w^T A w + r^T w_free + c after fixing Q_N = QF,
  // Q'_N = QF'; w = (Q_0..Q_N, Q'_0..Q'_N)
  struct Reduced {
    Mat Aff;
    CVec r;
    cplx c;
  };

  Reduced assemble(const RVec& xi, double QF, double QFprime, double eta = 0) const {
    const int N = grid_.N, n = N + 1;
    require(int(xi.size()) == N, "characteristic functional: xi needs N entries");
    const double eps = grid_.eps, g = gamma_;
    Mat A = Mat::Zero(2 * n, 2 * n);
    Mat Kg = (g / (2 * eps)) * K_.cast<cplx>();
    Mat Ki = (I / eps) * K_.cast<cplx>();
    A.topLeftCorner(n, n) = Kg - Ki;
    A.bottomRightCorner(n, n) = Kg + Ki;
    A.topRightCorner(n, n) = -Kg;
    A.bottomLeftCorner(n, n) = -Kg;
    CVec b = CVec::Zero(2 * n);
    for (int j = 0; j < N; ++j) {
      b(j) += -0.5 * I * eps * xi(j);
      b(n + j) += -0.5 * I * eps * xi(j);
    }
    cplx c = -(eps * eps / (4 * g)) * quadratic_form(G_, xi);
    // endpoint state kernel psi(Q_0) conj(psi(Q'_0))
    const double w2 = rho0_.width * rho0_.width;
    A(0, 0) += 1.0 / w2;
    A(n, n) += 1.0 / w2;
    b(0) += rho0_.center_Q / w2 + I * rho0_.center_P;
    b(n) += rho0_.center_Q / w2 - I * rho0_.center_P;
    c += -rho0_.center_Q * rho0_.center_Q / w2 - 0.5 * std::log(M_PI * w2);
    // optional quadratic regulator on the interior sum coordinates
    // u_j = (Q_j + Q'_j)/2; used only by the brute-force cross-checks to tame
    // the two phase-only directions
    for (int j = 1; j < N; ++j) {
      A(j, j) += eta / 2;
      A(n + j, n + j) += eta / 2;
      A(j, n + j) += eta / 2;
      A(n + j, j) += eta / 2;
    }
    // fix Q_N = QF, Q'_N = QF'
    std::vector<int> free;
    for (int i = 0; i < 2 * n; ++i)
      if (i != N && i != 2 * n - 1) free.push_back(i);
    const int nf = int(free.size());
    Mat Aff(nf, nf);
    Mat Afd(nf, 2);
    CVec bf(nf);
    for (int i = 0; i < nf; ++i) {
      bf(i) = b(free[i]);
      Afd(i, 0) = A(free[i], N);
      Afd(i, 1) = A(free[i], 2 * n - 1);
      for (int j = 0; j < nf; ++j) Aff(i, j) = A(free[i], free[j]);
    }
    CVec d(2);
    d << QF, QFprime;
    Reduced red;
    red.Aff = Aff;
    red.r = bf - Afd * d;
    red.c = c + b(N) * d(0) + b(2 * n - 1) * d(1) -
            0.5 * (d(0) * d(0) * A(N, N) + 2.0 * d(0) * d(1) * A(N, 2 * n - 1) +
                   d(1) * d(1) * A(2 * n - 1, 2 * n - 1));
    return red;
  }

  cplx value(const RVec& xi, double QF, double QFprime, double eta = 0) const {
    Reduced red = assemble(xi, QF, QFprime, eta);
    const int nf = int(red.r.size());
    Eigen::PartialPivLU<Mat> lu(red.Aff);
    CVec x = lu.solve(red.r);
    cplx logdet = detail::logdet_principal(red.Aff);
    cplx log_pref =
        -double(grid_.N) * std::log(2 * M_PI * grid_.eps) + 0.5 * nf * std::log(2 * M_PI);
    const cplx rx = red.r.cwiseProduct(x).sum();  // plain r^T x, no conjugation
    return std::exp(log_pref - 0.5 * logdet + 0.5 * rx + red.c);
  }

  // cfo(xi) = V0 exp(-1/2 xi^T M xi + s0^T xi), exact in xi
  struct XiGaussian {
    cplx V0;
    Mat M;    // complex symmetric N x N
    CVec s0;
  };

  XiGaussian xi_gaussian(double QF, double QFprime) const {
    const int N = grid_.N, n = N + 1;
    Reduced red = assemble(RVec::Zero(N), QF, QFprime, 0.0);
    const int nf = int(red.r.size());
    // free-index positions: 0..N-1 are Q_0..Q_{N-1}; N..2N-1 are Q'_0..Q'_{N-1}
    // (fixing Q_N and Q'_N removes indices N and 2n-1, shifting the primes)
    Mat R = Mat::Zero(nf, N);
    for (int j = 0; j < N; ++j) {
      R(j, j) = -0.5 * I * grid_.eps;
      int prime_row = (n + j) - 1;  // one fixed index (N) precedes row n+j
      R(prime_row, j) = -0.5 * I * grid_.eps;
    }
    Eigen::PartialPivLU<Mat> lu(red.Aff);
    Mat AinvR = lu.solve(R);
    Mat M = -(R.transpose() * AinvR) +
            (grid_.eps * grid_.eps / (2 * gamma_)) * G_.entries.cast<cplx>();
    M = 0.5 * (M + M.transpose()).eval();
    XiGaussian out;
    out.M = M;
    out.s0 = R.transpose() * lu.solve(red.r);
    out.V0 = value(RVec::Zero(N), QF, QFprime);
    return out;
  }

  // One conjugate-path factor of the density:
  //   (2 pi eps)^{-N/2} Int dQ_0..dQ_{N-1} psi(Q_0)
  //     exp{ (i/2eps) Q^T K Q - (g/2eps) (q - Q)^T K (q - Q) },  Q_N = Qend.
  cplx path_factor(const RVec& q_ext, double Qend, bool conj_side) const {
    const int N = grid_.N;
    const double eps = grid_.eps, g = gamma_;
    Mat A = ((g / eps) * K_).cast<cplx>() - (I / eps) * K_.cast<cplx>();
    CVec b = ((g / eps) * (K_ * q_ext)).cast<cplx>();
    cplx cc = -(g / (2 * eps)) * q_ext.dot(K_ * q_ext);
    const double w2 = rho0_.width * rho0_.width;
    A(0, 0) += 1.0 / w2;
    b(0) += rho0_.center_Q / w2 + I * rho0_.center_P;
    cc += -rho0_.center_Q * rho0_.center_Q / (2 * w2) - 0.25 * std::log(M_PI * w2);
    Mat Aff = A.topLeftCorner(N, N);
    CVec r = b.head(N) - A.block(0, N, N, 1) * Qend;
    cplx c_tot = cc + b(N) * Qend - 0.5 * A(N, N) * Qend * Qend;
    Eigen::PartialPivLU<Mat> lu(Aff);
    CVec x = lu.solve(r);
    const cplx rx = r.cwiseProduct(x).sum();  // plain r^T x, no conjugation
    cplx val = std::exp(-0.5 * double(N) * std::log(2 * M_PI * eps) +
                        0.5 * N * std::log(2 * M_PI) -
                        0.5 * detail::logdet_principal(Aff) + 0.5 * rx + c_tot);
    return conj_side ? std::conj(val) : val;
  }

  // World-line density factor: the two conjugate path factors times the
  // marginalization normalizer. The line must satisfy the boundary condition
  // q_N = (QF + QF')/2.
  cplx density_factor(const WorldLine& q, double QF, double QFprime) const {
    require(int(q.values.size()) == grid_.N + 1,
            "density_factor: world line needs N+1 values");
    require(std::abs(q.values(grid_.N) - 0.5 * (QF + QFprime)) < 1e-9,
            "density_factor: world line must end at (QF + QF')/2");
    const int N = grid_.N;
    double logdet_kbar = 0;
    {
      Eigen::SelfAdjointEigenSolver<RMat> es(Kbar_);
      for (int i = 0; i < N; ++i) logdet_kbar += std::log(es.eigenvalues()(i));
    }
    cplx pref = std::exp(0.5 * N * std::log(2 * gamma_ / (grid_.eps * grid_.eps)) +
                         0.5 * logdet_kbar);
    return pref * path_factor(q.values, QF, false) *
           path_factor(q.values, QFprime, true);
  }

  const GaussianEndpointState& endpoint_state() const { return rho0_; }
  double gamma() const { return gamma_; }

 private:
  GaussianEndpointState rho0_;
  GridSpec grid_;
  double gamma_;
  RMat K_, Kbar_;
  InverseKernel G_{};
};

// Free-function forms of the two main operations.
inline cplx cfo_discrete(const GaussianEndpointState& rho0, const RVec& xi,
                         const GridSpec& grid, double gamma, double QF,
                         double QFprime, double eta = 0) {
  return CharacteristicFunctional(rho0, grid, gamma).value(xi, QF, QFprime, eta);
}

inline cplx density_factor(const GaussianEndpointState& rho0, const WorldLine& q,
                           double gamma, double QF, double QFprime) {
  return CharacteristicFunctional(rho0, q.grid, gamma).density_factor(q, QF, QFprime);
}

// Brute-force lattice quadrature of the same integrand at N = 3, in
// sum/difference coordinates u = (Q+Q')/2, d = Q-Q' (unit Jacobian), each
// axis boxed at six of its own Gaussian widths. The eta regulator must be
// positive: two u-directions enter the exact integrand only through phases.
inline cplx cfo_brute(const CharacteristicFunctional& cf, const RVec& xi, double QF,
                      double QFprime, double eta, int npts) {
  const GridSpec& grid = cf.grid();
  require(grid.N == 3, "cfo_brute: calibrated for N = 3 only");
  require(eta > 0, "cfo_brute: eta must be > 0");
  require(npts >= 5 && npts % 2 == 1, "cfo_brute: npts must be odd and >= 5");
  const int N = 3;
  const double eps = grid.eps, g = cf.gamma();
  const RMat& K = cf.kernel();
  const GaussianEndpointState& st = cf.endpoint_state();

  RMat Sig_d = ((g / (2 * eps)) * reduce(KernelMatrix{K}).entries).inverse();
  std::vector<double> sig_d(N), sig_u(N), ctr_u(N);
  for (int j = 0; j < N; ++j) sig_d[j] = std::sqrt(Sig_d(j, j));
  sig_d[0] = std::min(sig_d[0], st.width * std::sqrt(2.0));
  sig_u[0] = st.width / std::sqrt(2.0);
  sig_u[1] = sig_u[2] = 1.0 / std::sqrt(2 * eta);
  ctr_u[0] = ctr_u[1] = st.center_Q;
  ctr_u[2] = 0.5 * (st.center_Q + 0.5 * (QF + QFprime));

  auto linspace = [&](double lo, double hi) {
    std::vector<double> v(npts);
    for (int i = 0; i < npts; ++i) v[i] = lo + (hi - lo) * i / (npts - 1);
    return v;
  };
  std::vector<std::vector<double>> gu(N), gd(N);
  double vol = 1;
  for (int j = 0; j < N; ++j) {
    gu[j] = linspace(ctr_u[j] - 6 * sig_u[j], ctr_u[j] + 6 * sig_u[j]);
    gd[j] = linspace(-6 * sig_d[j], 6 * sig_d[j]);
    vol *= (gu[j][1] - gu[j][0]) * (gd[j][1] - gd[j][0]);
  }

  const cplx SG = -(eps * eps / (4 * g)) * quadratic_form(cf.covariance(), xi);
  const double log_pref = -N * std::log(2 * M_PI * eps);

  // K is tridiagonal; unroll the quadratic forms over the 4-point lines
  auto kform = [&](const double* v) {
    double s = 0;
    for (int i = 0; i <= N; ++i) {
      s += K(i, i) * v[i] * v[i];
      if (i < N) s += 2 * K(i, i + 1) * v[i] * v[i + 1];
    }
    return s;
  };

  cplx tot = 0;
  for (double u0 : gu[0])
    for (double d0 : gd[0]) {
      const double Q0 = u0 + d0 / 2, Q0p = u0 - d0 / 2;
      const cplx p0 = detail::gaussian_endpoint_wave(Q0, st) *
                      std::conj(detail::gaussian_endpoint_wave(Q0p, st));
      for (double u1 : gu[1])
        for (double d1 : gd[1])
          for (double u2 : gu[2])
            for (double d2 : gd[2]) {
              const double q[4] = {Q0, u1 + d1 / 2, u2 + d2 / 2, QF};
              const double qp[4] = {Q0p, u1 - d1 / 2, u2 - d2 / 2, QFprime};
              const double dd[4] = {q[0] - qp[0], q[1] - qp[1], q[2] - qp[2],
                                    q[3] - qp[3]};
              const double Sxi_im =
                  -0.5 * eps *
                  (xi(0) * (q[0] + qp[0]) + xi(1) * (q[1] + qp[1]) +
                   xi(2) * (q[2] + qp[2]));
              const cplx ex =
                  cplx(-(g / (4 * eps)) * kform(dd) - eta * (u1 * u1 + u2 * u2),
                       (0.5 / eps) * (kform(q) - kform(qp)) + Sxi_im) +
                  SG;
              tot += p0 * std::exp(ex);
            }
    }
  return tot * vol * std::exp(log_pref);
}

// Exact Fourier coefficient (1/sqrt T) int exp(-ikt) Q(t) dt of the
// piecewise-linear interpolant through the line's values, split into the
// midpoint-value part and the increment part:
//   sum_j exp(-ik tmid_j) [ mid_j eps sinc(x) + dq_j (i/k)(cos x - sinc x) ],
// x = k eps / 2. Small-x series keep both parts smooth through k = 0.
inline std::pair<cplx, cplx> interpolant_fourier_split(const WorldLine& line,
                                                       double k) {
  const int N = line.grid.N;
  require(int(line.values.size()) == N + 1,
          "interpolant_fourier: line needs N+1 values");
  const double eps = line.grid.eps;
  const double x = k * eps / 2;
  double snc, cc;  // cc = (cos x - snc) / x
  if (std::abs(x) < 1e-6) {
    snc = 1 - x * x / 6;
    cc = -x / 3 + x * x * x / 30;
  } else {
    snc = std::sin(x) / x;
    cc = (std::cos(x) - snc) / x;
  }
  cplx mean_part = 0, inc_part = 0;
  for (int j = 0; j < N; ++j) {
    const double tmid = (j + 0.5) * eps;
    const cplx ph = std::exp(-I * k * tmid);
    const double mid = 0.5 * (line.values(j) + line.values(j + 1));
    const double dq = line.values(j + 1) - line.values(j);
    mean_part += ph * mid * eps * snc;
    inc_part += ph * dq * I * (eps / 2) * cc;
  }
  const double norm = 1.0 / std::sqrt(line.grid.T);
  return {norm * mean_part, norm * inc_part};
}

inline cplx interpolant_fourier(const WorldLine& line, double k) {
  auto parts = interpolant_fourier_split(line, k);
  return parts.first + parts.second;
}

// Classical solution A cos(w t) + B sin(w t) through the line's endpoints.
inline WorldLine classical_through_endpoints(const WorldLine& line, double omega) {
  const int N = line.grid.N;
  const double T = line.grid.T;
  const double s = std::sin(omega * T);
  require(std::abs(s) > 1e-9,
          "classical fit: endpoints degenerate at sin(omega T) = 0");
  const double A = line.values(0);
  const double B = (line.values(N) - A * std::cos(omega * T)) / s;
  WorldLine cl{RVec(N + 1), line.grid};
  for (int j = 0; j <= N; ++j) {
    const double t = j * line.grid.eps;
    cl.values(j) = A * std::cos(omega * t) + B * std::sin(omega * t);
  }
  return cl;
}

// Largest interpolant Fourier magnitude over |k| < omega after removing the
// classical component through the endpoints.
inline double lowfreq_residual(const WorldLine& line, double omega) {
  WorldLine diff{line.values - classical_through_endpoints(line, omega).values,
                 line.grid};
  double worst = 0;
  for (double f : {0.0, 0.25, 0.5, 0.75, 0.95})
    worst = std::max(worst, std::abs(interpolant_fourier(diff, f * omega)));
  return worst;
}

struct LowFreqRow {
  int N;
  double residual;
};

inline std::vector<LowFreqRow> lowfreq_scan(
    const std::function<WorldLine(int)>& family, double omega,
    const std::vector<int>& Ns) {
  std::vector<LowFreqRow> rows;
  for (int N : Ns) rows.push_back({N, lowfreq_residual(family(N), omega)});
  return rows;
}

// Classical line with Brownian-scaled interior noise sqrt(eps) eta_j,
// endpoints pinned: the support scale of the discrete measure.
inline WorldLine noisy_classical_line(const GridSpec& grid, double A, double B,
                                      std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  WorldLine line{RVec(grid.N + 1), grid};
  for (int j = 0; j <= grid.N; ++j) {
    const double t = j * grid.eps;
    line.values(j) = A * std::cos(grid.omega * t) + B * std::sin(grid.omega * t);
    if (j > 0 && j < grid.N) line.values(j) += std::sqrt(grid.eps) * gauss(rng);
  }
  return line;
}

}  // namespace beable
