#pragma once

#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace beable {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

constexpr cplx I{0.0, 1.0};

// Numeric failures (nonconvergence, singular kernels, caustics) are kept
// apart from precondition violations so callers can map them to distinct
// exit codes.
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

// Least-squares slope of y against t.
inline double fit_slope(const std::vector<double>& t, const std::vector<double>& y) {
  require(t.size() == y.size() && t.size() >= 2, "fit_slope: need >= 2 samples");
  double n = double(t.size()), st = 0, sy = 0, stt = 0, sty = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    st += t[i]; sy += y[i]; stt += t[i] * t[i]; sty += t[i] * y[i];
  }
  return (n * sty - st * sy) / (n * stt - st * st);
}

// Deterministic random state factory used by witness scans and trials.
inline CVec random_unit_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = cplx(g(rng), g(rng));
  v /= v.norm();
  return v;
}

// Random density matrix (Ginibre): G G^dag normalized to unit trace.
inline Mat random_density(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat G(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) G(i, j) = cplx(g(rng), g(rng));
  Mat rho = G * G.adjoint();
  rho /= rho.trace().real();
  return rho;
}

inline double min_eigenvalue(const Mat& M) {
  Eigen::SelfAdjointEigenSolver<Mat> es((M + M.adjoint()) / 2.0);
  return es.eigenvalues().minCoeff();
}

}  // namespace beable
