#include <catch2/catch_amalgamated.hpp>

#include "beable/measurement.hpp"

using namespace beable;

namespace {

StateOperator pure_state(const CVec& v) { return {Mat(v * v.adjoint()), false}; }

StateOperator diag_state(std::initializer_list<double> probs) {
  Mat rho = Mat::Zero(long(probs.size()), long(probs.size()));
  int i = 0;
  for (double p : probs) rho(i, i) = p, ++i;
  return {rho, false};
}

}  // namespace

TEST_CASE("composition of product states") {
  std::mt19937_64 rng(5);
  StateOperator a = pure_state(random_unit_vector(3, rng));
  StateOperator b = pure_state(random_unit_vector(4, rng));
  CompositeState s = compose(a, b);
  REQUIRE(s.dim_object == 3);
  REQUIRE(s.dim_apparatus == 4);
  REQUIRE(std::abs(s.rho.trace().real() - 1.0) < 1e-12);
  // purity survives the product
  REQUIRE(std::abs((s.rho * s.rho).trace().real() - 1.0) < 1e-12);
  // partial trace undoes the composition
  REQUIRE((reduce_object(s) - a.rho).norm() < 1e-12);

  StateOperator mixed{random_density(3, rng), false};
  StateOperator app{random_density(4, rng), false};
  REQUIRE((reduce_object(compose(mixed, app)) - mixed.rho).norm() < 1e-12);
}

TEST_CASE("composition rejects bad inputs") {
  std::mt19937_64 rng(6);
  StateOperator ok{random_density(2, rng), false};
  StateOperator one{Mat::Identity(1, 1), false};
  REQUIRE_THROWS_AS(compose(one, ok), std::domain_error);
  REQUIRE_THROWS_AS(compose(ok, one), std::domain_error);
  StateOperator unnorm{Mat(2 * random_density(2, rng)), false};
  REQUIRE_THROWS_AS(compose(unnorm, ok), std::domain_error);
  StateOperator nonherm{Mat::Zero(2, 2), false};
  nonherm.rho(0, 0) = 1;
  nonherm.rho(0, 1) = 0.5;
  REQUIRE_THROWS_AS(compose(nonherm, ok), std::domain_error);
}

TEST_CASE("stable channels preserve what they must") {
  std::mt19937_64 rng(7);
  CompositeState s = compose(StateOperator{random_density(3, rng), false},
                             StateOperator{random_density(3, rng), false});

  CompositeState s1 = apply_stable_channel(s, identity_channel());
  REQUIRE((s1.rho - s.rho).norm() == 0.0);

  Mat R(9, 9);
  std::normal_distribution<double> g;
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) R(r, c) = cplx(g(rng), g(rng));
  Mat U = Eigen::HouseholderQR<Mat>(R).householderQ();
  CompositeState s2 = apply_stable_channel(s, unitary_channel(U));
  Eigen::SelfAdjointEigenSolver<Mat> e0(s.rho), e2(s2.rho);
  REQUIRE((e0.eigenvalues() - e2.eigenvalues()).norm() < 1e-10);

  CompositeState s3 = apply_stable_channel(s, dephasing_channel(3, 3));
  Mat ro = reduce_object(s);
  Mat r3 = reduce_object(s3);
  for (int j = 0; j < 3; ++j)
    REQUIRE(std::abs(r3(j, j).real() - ro(j, j).real()) < 1e-12);
  // cross-object blocks are gone
  REQUIRE(s3.rho.block(0, 3, 3, 3).norm() == 0.0);
}

TEST_CASE("non-trace-preserving maps are rejected") {
  std::mt19937_64 rng(8);
  CompositeState s = compose(StateOperator{random_density(2, rng), false},
                             StateOperator{random_density(2, rng), false});
  ChannelMap leaky = [](const Mat& rho) { return Mat(0.9 * rho); };
  REQUIRE_THROWS_AS(apply_stable_channel(s, leaky), std::domain_error);
  REQUIRE_THROWS_AS(outcome_probability(s, counter_pattern(0, leaky)),
                    std::domain_error);
  REQUIRE_THROWS_AS(unitary_channel(Mat(2 * Mat::Identity(4, 4))),
                    std::domain_error);
}

TEST_CASE("counter probabilities read the object diagonal") {
  std::mt19937_64 rng(9);
  CVec u1 = CVec::Zero(3);
  u1(0) = 1;
  CompositeState pure = compose(pure_state(u1),
                                StateOperator{random_density(3, rng), false});
  REQUIRE(outcome_probability(pure, counter_pattern(0, identity_channel())) ==
          Catch::Approx(1.0).margin(1e-12));
  REQUIRE(outcome_probability(pure, counter_pattern(1, identity_channel())) ==
          Catch::Approx(0.0).margin(1e-12));
  REQUIRE(outcome_probability(pure, counter_pattern(2, identity_channel())) ==
          Catch::Approx(0.0).margin(1e-12));

  CompositeState diag = compose(diag_state({0.5, 0.3, 0.2}),
                                StateOperator{random_density(3, rng), false});
  REQUIRE(outcome_probability(diag, counter_pattern(0, identity_channel())) ==
          Catch::Approx(0.5).margin(1e-10));
  REQUIRE(outcome_probability(diag, counter_pattern(1, identity_channel())) ==
          Catch::Approx(0.3).margin(1e-10));
  REQUIRE(outcome_probability(diag, counter_pattern(2, identity_channel())) ==
          Catch::Approx(0.2).margin(1e-10));
  REQUIRE_THROWS_AS(outcome_probability(diag, counter_pattern(3, identity_channel())),
                    std::domain_error);
}

TEST_CASE("probabilities ignore coherences and the apparatus state") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 20; ++t) {
    Mat rho_o = random_density(3, rng);  // generic: nonzero coherences
    CompositeState s = compose(StateOperator{rho_o, false},
                               StateOperator{random_density(3, rng), false});
    double sum = 0;
    for (int j = 0; j < 3; ++j) {
      const double p = outcome_probability(s, counter_pattern(j, dephasing_channel(3, 3)));
      REQUIRE(std::abs(p - rho_o(j, j).real()) < 1e-12);
      REQUIRE(p >= 0);
      sum += p;
    }
    REQUIRE(std::abs(sum - 1.0) < 1e-12);
  }
}

TEST_CASE("born-rule report over seeded trials") {
  BornRuleReport r23 = born_rule_report(2, 3, 20, 7);
  REQUIRE(r23.trials == 20);
  REQUIRE(r23.max_deviation < 1e-10);
  BornRuleReport r33 = born_rule_report(3, 3, 20, 7);
  REQUIRE(r33.max_deviation < 1e-10);
  REQUIRE(r33.max_sum_error < 1e-10);
  REQUIRE(r33.max_form_deviation < 1e-10);
  REQUIRE(r33.min_probability > 0);
  // trivial object space: the single counter always fires
  BornRuleReport r1 = born_rule_report(1, 3, 5, 11);
  REQUIRE(r1.max_deviation < 1e-12);
  REQUIRE(r1.max_sum_error < 1e-12);
  REQUIRE(r1.min_probability == Catch::Approx(1.0).margin(1e-12));
  REQUIRE_THROWS_AS(born_rule_report(0, 3, 5, 11), std::domain_error);
  REQUIRE_THROWS_AS(born_rule_report(2, 2, 0, 11), std::domain_error);
}

TEST_CASE("report determinism") {
  BornRuleReport a = born_rule_report(3, 3, 6, 42);
  BornRuleReport b = born_rule_report(3, 3, 6, 42);
  REQUIRE(a.max_deviation == b.max_deviation);
  REQUIRE(a.max_form_deviation == b.max_form_deviation);
}
