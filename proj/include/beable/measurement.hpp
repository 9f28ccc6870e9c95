#pragma once

// Object-apparatus composition and counter-readout probabilities: the
// finite-dimensional demonstration that diagonal readout through any stable
// trace-preserving channel reproduces the object density diagonal.

#include <unsupported/Eigen/KroneckerProduct>

#include "beable/fock.hpp"

namespace beable {

struct CompositeState {
  int dim_object = 0;
  int dim_apparatus = 0;
  Mat rho;
};

// linear map on composite-space operators
using ChannelMap = std::function<Mat(const Mat&)>;

// readout pattern: a stable channel followed by projection onto one object
// basis index
struct OutcomePattern {
  int object_index = 0;
  ChannelMap channel;
};

inline void check_density(const Mat& rho, const char* who) {
  require(std::abs(rho.trace().real() - 1.0) < 1e-12 &&
              std::abs(rho.trace().imag()) < 1e-12,
          std::string(who) + ": state must have unit trace");
  require((rho - rho.adjoint()).norm() < 1e-12,
          std::string(who) + ": state must be Hermitian");
  require(min_eigenvalue(rho) > -1e-10,
          std::string(who) + ": state must be positive semidefinite");
}

inline CompositeState compose(const StateOperator& rho_object,
                              const StateOperator& rho_apparatus) {
  const int d_o = int(rho_object.rho.rows());
  const int d_a = int(rho_apparatus.rho.rows());
  require(d_o >= 2 && d_a >= 2, "compose: both factors need dimension >= 2");
  check_density(rho_object.rho, "compose");
  check_density(rho_apparatus.rho, "compose");
  return {d_o, d_a, Eigen::kroneckerProduct(rho_object.rho, rho_apparatus.rho)};
}

// partial trace over the apparatus factor
inline Mat reduce_object(const CompositeState& state) {
  Mat out = Mat::Zero(state.dim_object, state.dim_object);
  for (int i = 0; i < state.dim_object; ++i)
    for (int j = 0; j < state.dim_object; ++j)
      for (int a = 0; a < state.dim_apparatus; ++a)
        out(i, j) += state.rho(i * state.dim_apparatus + a,
                               j * state.dim_apparatus + a);
  return out;
}

inline ChannelMap identity_channel() {
  return [](const Mat& rho) { return rho; };
}

inline ChannelMap unitary_channel(const Mat& U) {
  require((U * U.adjoint() - Mat::Identity(U.rows(), U.cols())).norm() < 1e-10,
          "unitary_channel: matrix is not unitary");
  return [U](const Mat& rho) { return Mat(U * rho * U.adjoint()); };
}

// kill every block coupling different object indices
inline ChannelMap dephasing_channel(int dim_object, int dim_apparatus) {
  require(dim_object >= 1 && dim_apparatus >= 1,
          "dephasing_channel: dimensions must be >= 1");
  return [dim_object, dim_apparatus](const Mat& rho) {
    Mat out = Mat::Zero(rho.rows(), rho.cols());
    for (int j = 0; j < dim_object; ++j)
      out.block(j * dim_apparatus, j * dim_apparatus, dim_apparatus, dim_apparatus) =
          rho.block(j * dim_apparatus, j * dim_apparatus, dim_apparatus,
                    dim_apparatus);
    return out;
  };
}

// spot-check trace preservation of a map on seeded random states
inline bool is_trace_preserving(const ChannelMap& G, int dim, int trials = 20,
                                double tol = 1e-10) {
  require(dim >= 1 && trials >= 1, "is_trace_preserving: bad arguments");
  std::mt19937_64 rng(0x7ace5eed);
  for (int t = 0; t < trials; ++t) {
    Mat sigma = random_density(dim, rng);
    if (std::abs(G(sigma).trace().real() - 1.0) > tol ||
        std::abs(G(sigma).trace().imag()) > tol)
      return false;
  }
  return true;
}

inline CompositeState apply_stable_channel(const CompositeState& state,
                                           const ChannelMap& G) {
  const int dim = state.dim_object * state.dim_apparatus;
  require(is_trace_preserving(G, dim),
          "apply_stable_channel: map is not trace preserving");
  Mat out = G(state.rho);
  require(std::abs(out.trace().real() - 1.0) < 1e-10,
          "apply_stable_channel: trace drifted under a checked map");
  return {state.dim_object, state.dim_apparatus, out};
}

inline OutcomePattern counter_pattern(int j, ChannelMap channel) {
  require(j >= 0, "counter_pattern: index must be >= 0");
  return {j, std::move(channel)};
}

// p_j: project the channel output onto object index j and take the trace
inline double outcome_probability(const CompositeState& state,
                                  const OutcomePattern& pattern) {
  require(pattern.object_index < state.dim_object,
          "outcome_probability: pattern index outside the object space");
  require(!pattern.channel ||
              is_trace_preserving(pattern.channel,
                                  state.dim_object * state.dim_apparatus),
          "outcome_probability: pattern channel is not trace preserving");
  const Mat out = pattern.channel ? pattern.channel(state.rho) : state.rho;
  const int a0 = pattern.object_index * state.dim_apparatus;
  cplx p = 0;
  for (int a = 0; a < state.dim_apparatus; ++a) p += out(a0 + a, a0 + a);
  return p.real();
}

struct BornRuleReport {
  double max_deviation = 0;      // |p_j - rho_jj| over all trials and indices
  double max_form_deviation = 0; // bilinear-form reconstruction of p_j
  double max_sum_error = 0;      // |sum_j p_j - 1| per trial
  double min_probability = 0;
  int trials = 0;
};

// run `trials` random object/apparatus pairs through the three stable channel
// presets and compare counter probabilities against the object diagonal
inline BornRuleReport born_rule_report(int dim_object, int dim_apparatus,
                                       int trials, uint64_t seed) {
  require(dim_object >= 1 && dim_apparatus >= 1,
          "born_rule_report: dimensions must be >= 1");
  require(trials >= 1, "born_rule_report: trials must be >= 1");
  std::mt19937_64 rng(seed);
  BornRuleReport rep;
  rep.trials = trials;
  rep.min_probability = 1;
  for (int t = 0; t < trials; ++t) {
    const Mat rho_o = random_density(dim_object, rng);
    const Mat rho_a = random_density(dim_apparatus, rng);
    CompositeState state{dim_object, dim_apparatus,
                         Eigen::kroneckerProduct(rho_o, rho_a)};
    ChannelMap G;
    switch (t % 3) {
      case 0:
        G = identity_channel();
        break;
      case 1: {
        // apparatus-local rotation: stable by construction
        std::normal_distribution<double> g;
        Mat R(dim_apparatus, dim_apparatus);
        for (int r = 0; r < dim_apparatus; ++r)
          for (int c = 0; c < dim_apparatus; ++c) R(r, c) = cplx(g(rng), g(rng));
        Mat Ua = Eigen::HouseholderQR<Mat>(R).householderQ();
        G = unitary_channel(
            Eigen::kroneckerProduct(Mat::Identity(dim_object, dim_object), Ua));
        break;
      }
      default:
        G = dephasing_channel(dim_object, dim_apparatus);
    }
    double psum = 0;
    for (int j = 0; j < dim_object; ++j) {
      const double p = outcome_probability(state, counter_pattern(j, G));
      rep.max_deviation = std::max(rep.max_deviation, std::abs(p - rho_o(j, j).real()));
      rep.min_probability = std::min(rep.min_probability, p);
      psum += p;
    }
    rep.max_sum_error = std::max(rep.max_sum_error, std::abs(psum - 1.0));
    // bilinear form: expand the object state over basis dyads and reassemble
    // each probability from the channel's action on them
    for (int m = 0; m < dim_object; ++m) {
      cplx pm = 0;
      for (int j = 0; j < dim_object; ++j)
        for (int jp = 0; jp < dim_object; ++jp) {
          Mat dyad = Mat::Zero(dim_object, dim_object);
          dyad(j, jp) = 1;
          CompositeState basis{dim_object, dim_apparatus,
                               Eigen::kroneckerProduct(dyad, rho_a)};
          const Mat out = G(basis.rho);
          cplx f = 0;
          for (int a = 0; a < dim_apparatus; ++a)
            f += out(m * dim_apparatus + a, m * dim_apparatus + a);
          pm += f * rho_o(j, jp);
        }
      const double direct = outcome_probability(state, counter_pattern(m, G));
      rep.max_form_deviation =
          std::max(rep.max_form_deviation, std::abs(pm - cplx(direct)));
    }
  }
  return rep;
}

}  // namespace beable
