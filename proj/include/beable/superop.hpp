#pragma once

// Generators L and K(xi) on the truncated oscillator space, their duals,
// and semigroup propagation with conservation / positivity audits.
//
// A superoperator is stored as a sum of terms, each either a left
// multiplication rho -> A rho, a right multiplication rho -> rho B, or a
// sandwich rho -> A rho B. The dual under the trace pairing is the term
// swap, and the dense matrix on the squared-dimension space (column-major
// vec convention) is assembled only when a small problem asks for it.

#include <cmath>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "beable/fock.hpp"

namespace beable {

struct Superoperator {
  int dim = 0;  // Hilbert-space dimension; operator space is dim^2

  struct Term {
    enum class Kind { left_mul, right_mul, sandwich };
    Kind kind;
    Mat A;  // left factor (left_mul, sandwich)
    Mat B;  // right factor (right_mul, sandwich)
  };
  std::vector<Term> terms;

  void add_left(const Mat& A) { terms.push_back({Term::Kind::left_mul, A, Mat()}); }
  void add_right(const Mat& B) { terms.push_back({Term::Kind::right_mul, Mat(), B}); }
  void add_sandwich(const Mat& A, const Mat& B) {
    terms.push_back({Term::Kind::sandwich, A, B});
  }

  Mat apply(const Mat& rho) const {
    Mat out = Mat::Zero(dim, dim);
    for (const auto& t : terms) switch (t.kind) {
        case Term::Kind::left_mul: out.noalias() += t.A * rho; break;
        case Term::Kind::right_mul: out.noalias() += rho * t.B; break;
        case Term::Kind::sandwich: out.noalias() += t.A * rho * t.B; break;
      }
    return out;
  }

  // Upper bound on the operator-space 2-norm; controls Taylor substepping.
  double norm_bound() const {
    double s = 0;
    for (const auto& t : terms) switch (t.kind) {
        case Term::Kind::left_mul: s += t.A.operatorNorm(); break;
        case Term::Kind::right_mul: s += t.B.operatorNorm(); break;
        case Term::Kind::sandwich:
          s += t.A.operatorNorm() * t.B.operatorNorm();
          break;
      }
    return s;
  }

  // Dense matrix acting on column-stacked rho.
  Mat matrix() const {
    Mat Id = Mat::Identity(dim, dim);
    Mat M = Mat::Zero(dim * dim, dim * dim);
    for (const auto& t : terms) switch (t.kind) {
        case Term::Kind::left_mul:
          M += Eigen::kroneckerProduct(Id, t.A);
          break;
        case Term::Kind::right_mul:
          M += Eigen::kroneckerProduct(t.B.transpose(), Id);
          break;
        case Term::Kind::sandwich:
          M += Eigen::kroneckerProduct(t.B.transpose(), t.A);
          break;
      }
    return M;
  }
};

inline Superoperator zero_superoperator(int dim) {
  Superoperator S;
  S.dim = dim;
  return S;
}

inline Superoperator operator+(const Superoperator& a, const Superoperator& b) {
  require(a.dim == b.dim, "superoperator sum: dimension mismatch");
  Superoperator s = a;
  s.terms.insert(s.terms.end(), b.terms.begin(), b.terms.end());
  return s;
}

// Generator of the unitary flow, rho -> -i[H, rho].
inline Superoperator hamiltonian_flow(const Mat& H) {
  Superoperator S;
  S.dim = int(H.rows());
  S.add_left(-I * H);
  S.add_right(I * H);
  return S;
}

// L rho = -(alpha/4) [Q, [Q, rho]]. Annihilates functions of Q; trace-free.
inline Superoperator lindblad_original(const Mat& Q, double alpha) {
  require(alpha > 0, "lindblad_original: alpha must be > 0");
  const int d = int(Q.rows());
  Mat Q2 = Q * Q;
  Superoperator S;
  S.dim = d;
  S.add_left(-(alpha / 4) * Q2);
  S.add_right(-(alpha / 4) * Q2);
  S.add_sandwich((alpha / 2) * Q, Q);
  return S;
}

// L rho = -(gamma/4) ([P,[P,rho]] - w^2 [Q,[Q,rho]]). Signed dissipator:
// trace-free, conserves <H> in the untruncated algebra, and is not
// completely positive (see positivity_probe / witness_scan).
inline Superoperator lindblad_modified(const Mat& Q, const Mat& P, double omega,
                                       double gamma) {
  require(gamma > 0, "lindblad_modified: gamma must be > 0");
  require(omega > 0, "lindblad_modified: omega must be > 0");
  const int d = int(Q.rows());
  require(P.rows() == d && P.cols() == d && Q.cols() == d,
          "lindblad_modified: dimension mismatch");
  const double g4 = gamma / 4, w2 = omega * omega;
  Mat C = -g4 * (P * P) + g4 * w2 * (Q * Q);
  Superoperator S;
  S.dim = d;
  S.add_left(C);
  S.add_right(C);
  S.add_sandwich(2 * g4 * P, P);
  S.add_sandwich(-2 * g4 * w2 * Q, Q);
  return S;
}

struct GeneratorSpec {
  enum class Form { gaussian, poissonian };
  Form form = Form::gaussian;
  std::vector<Mat> R_ops;
  std::vector<double> coefficients;  // signed values permitted
  std::vector<double> xi;            // per-channel drive; empty means 0
};

// K(xi). At xi = 0 both forms reduce to the common generator
//   L rho = -sum_s a_s (R^dag R rho + rho R^dag R - 2 R rho R^dag).
// The drive enters the Gaussian form through the linear anticommutator
// -i xi (R rho + rho R^dag) only (the xi-quadratic c-number factor rides
// on the path-integral side, not on this operator), and the Poissonian
// form through the jump-term phase exp(-i xi/(2a)).
inline Superoperator generator(const GeneratorSpec& spec) {
  require(!spec.R_ops.empty(), "generator: R_ops must be nonempty");
  require(spec.R_ops.size() == spec.coefficients.size(),
          "generator: coefficient list length mismatch");
  require(spec.xi.empty() || spec.xi.size() == spec.R_ops.size(),
          "generator: xi list length mismatch");
  const int d = int(spec.R_ops[0].rows());
  Superoperator S;
  S.dim = d;
  for (size_t s = 0; s < spec.R_ops.size(); ++s) {
    const Mat& R = spec.R_ops[s];
    require(R.rows() == d && R.cols() == d, "generator: R dimension mismatch");
    const double a = spec.coefficients[s];
    const double xi = spec.xi.empty() ? 0.0 : spec.xi[s];
    Mat RdR = R.adjoint() * R;
    S.add_left(-a * RdR);
    S.add_right(-a * RdR);
    if (spec.form == GeneratorSpec::Form::gaussian) {
      S.add_sandwich(2 * a * R, R.adjoint());
      if (xi != 0.0) {
        S.add_left(-I * xi * R);
        S.add_right(-I * xi * R.adjoint());
      }
    } else {
      if (xi != 0.0)
        require(a != 0.0, "generator: poissonian drive needs nonzero coefficient");
      S.add_sandwich(2 * a * std::exp(-I * xi / (2 * a)) * R, R.adjoint());
    }
  }
  return S;
}

// Tr[B S(X)] = Tr[dual(S)(B) X]: left and right multiplications swap roles,
// sandwiches swap factors.
inline Superoperator dual(const Superoperator& S) {
  Superoperator D;
  D.dim = S.dim;
  for (const auto& t : S.terms) switch (t.kind) {
      case Superoperator::Term::Kind::left_mul: D.add_right(t.A); break;
      case Superoperator::Term::Kind::right_mul: D.add_left(t.B); break;
      case Superoperator::Term::Kind::sandwich: D.add_sandwich(t.B, t.A); break;
    }
  return D;
}

// Instantaneous drift of <H>: Tr[dual(L)(H) rho].
inline double energy_drift(const Superoperator& L, const Mat& H, const Mat& rho) {
  require(int(H.rows()) == L.dim && int(rho.rows()) == L.dim,
          "energy_drift: dimension mismatch");
  return dual(L).apply(H).cwiseProduct(rho.transpose()).sum().real();
}

// Min eigenvalue of (I + eps L) rho0. Negative values certify that the map
// moves rho0 out of the positive cone to first order.
inline double positivity_probe(const Superoperator& L, const Mat& rho0, double eps) {
  require(eps > 0, "positivity_probe: eps must be > 0");
  Mat probe = rho0 + eps * L.apply(rho0);
  return min_eigenvalue(probe);
}

struct EvolutionResult {
  std::vector<double> times;
  std::vector<Mat> states;
  std::vector<double> energy_series;
  std::vector<double> min_eigenvalue_series;
  double max_trace_drift = 0.0;
};

namespace detail {

// One step of exp(L dt) acting on rho: scaled truncated Taylor series.
// Substep count comes from the generator's norm bound; each tail is summed
// until it falls far below the running total.
inline Mat taylor_exp_step(const Superoperator& L, Mat rho, double dt,
                           double norm_bound) {
  const int nsub = std::max(1, int(std::ceil(norm_bound * dt / 2.0)));
  const double h = dt / nsub;
  for (int s = 0; s < nsub; ++s) {
    Mat term = rho;
    Mat acc = rho;
    bool converged = false;
    for (int k = 1; k <= 120; ++k) {
      term = (h / k) * L.apply(term);
      acc += term;
      if (term.cwiseAbs().maxCoeff() < 1e-17 * acc.cwiseAbs().maxCoeff()) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw numeric_error(
          "propagate: matrix-exponential series did not converge (norm bound " +
          std::to_string(norm_bound) + ", dt " + std::to_string(dt) + ")");
    rho = acc;
  }
  return rho;
}

}  // namespace detail

// rho(t_k) = exp(L t_k) rho0 on the uniform grid t_k = k t_final / steps,
// k = 0..steps. The steps parameter controls output sampling only; the
// exponential itself is evaluated to ~1e-12. Small problems take a dense
// scaling-and-squaring exponential of the superoperator matrix; larger ones
// use the structured Taylor action, which never forms the dim^2 x dim^2
// matrix. Pass H to fill the energy series.
inline EvolutionResult propagate(const Superoperator& L, const StateOperator& rho0,
                                 double t_final, int steps, const Mat* H = nullptr) {
  require(steps >= 1, "propagate: steps must be >= 1");
  require(t_final > 0, "propagate: t_final must be > 0");
  require(int(rho0.rho.rows()) == L.dim, "propagate: dimension mismatch");
  const double dt = t_final / steps;
  const bool dense = L.dim <= 12;
  Mat step_matrix;
  if (dense) step_matrix = (L.matrix() * dt).exp();
  const double nb = dense ? 0.0 : L.norm_bound();

  EvolutionResult res;
  Mat rho = rho0.rho;
  auto record = [&](double t, const Mat& r) {
    res.times.push_back(t);
    res.states.push_back(r);
    res.energy_series.push_back(H ? expectation(*H, r).real() : 0.0);
    res.min_eigenvalue_series.push_back(min_eigenvalue(r));
    res.max_trace_drift =
        std::max(res.max_trace_drift, std::abs(r.trace() - cplx(1.0, 0.0)));
  };
  record(0.0, rho);
  for (int k = 1; k <= steps; ++k) {
    if (dense) {
      Eigen::Map<const CVec> v(rho.data(), L.dim * L.dim);
      CVec w = step_matrix * v;
      rho = Eigen::Map<const Mat>(w.data(), L.dim, L.dim);
    } else {
      rho = detail::taylor_exp_step(L, rho, dt, nb);
    }
    record(k * dt, rho);
  }
  return res;
}

struct MeanPoint {
  double t, q, p;
};

inline std::vector<MeanPoint> mean_trajectory(const Superoperator& L, const Mat& Q,
                                              const Mat& P, const StateOperator& rho0,
                                              double t_final, int steps) {
  EvolutionResult ev = propagate(L, rho0, t_final, steps);
  std::vector<MeanPoint> out;
  out.reserve(ev.times.size());
  for (size_t k = 0; k < ev.times.size(); ++k)
    out.push_back({ev.times[k], expectation(Q, ev.states[k]).real(),
                   expectation(P, ev.states[k]).real()});
  return out;
}

struct WitnessResult {
  double worst = 0.0;
  std::string state_label;
};

// Positivity-loss search: n_random seeded random pure states plus all
// two-level number-basis superpositions; reports the worst probe value.
inline WitnessResult witness_scan(const Superoperator& L, double eps, int n_random,
                                  unsigned long long seed) {
  std::mt19937_64 rng(seed);
  WitnessResult res;
  for (int t = 0; t < n_random; ++t) {
    CVec v = random_unit_vector(L.dim, rng);
    double e = positivity_probe(L, v * v.adjoint(), eps);
    if (e < res.worst) {
      res.worst = e;
      res.state_label = "random#" + std::to_string(t);
    }
  }
  for (int n1 = 0; n1 < L.dim; ++n1)
    for (int n2 = n1 + 1; n2 < L.dim; ++n2) {
      CVec v = CVec::Zero(L.dim);
      v(n1) = v(n2) = 1.0 / std::sqrt(2.0);
      double e = positivity_probe(L, v * v.adjoint(), eps);
      if (e < res.worst) {
        res.worst = e;
        res.state_label =
            "(|" + std::to_string(n1) + "> + |" + std::to_string(n2) + ">)/sqrt2";
      }
    }
  return res;
}

}  // namespace beable
