#include <catch2/catch_amalgamated.hpp>

#include "beable/kernel.hpp"

using namespace beable;

TEST_CASE("stencil at lambda = 0") {
  auto K = build_K(2, 0.0);
  RMat expect(3, 3);
  expect << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  REQUIRE((K.entries - expect).norm() == 0.0);
  REQUIRE(std::abs(K.entries.determinant()) < 1e-14);
}

TEST_CASE("stencil with a potential term") {
  auto K = build_K(3, 0.01);
  REQUIRE(K.entries(0, 0) == 0.99);
  REQUIRE(K.entries(1, 1) == 1.99);
  REQUIRE(K.entries(2, 2) == 1.99);
  // the last point has no potential contribution
  REQUIRE(K.entries(3, 3) == 1.0);
  REQUIRE(K.entries(0, 1) == -1.0);
  REQUIRE((K.entries - K.entries.transpose()).norm() == 0.0);
}

TEST_CASE("grid-driven kernel equals the standalone-lambda form") {
  GridSpec g = make_grid(8, 2.0, 0.7);
  REQUIRE((build_K(g).entries - build_K(8, g.lambda()).entries).norm() == 0.0);
}

TEST_CASE("reduction drops the free endpoint") {
  auto Kb = reduce(build_K(2, 0.0));
  RMat expect(2, 2);
  expect << 1, -1, -1, 2;
  REQUIRE((Kb.entries - expect).norm() == 0.0);
  REQUIRE(std::abs(Kb.entries.determinant() - 1.0) < 1e-14);
  REQUIRE(std::abs(reduce(build_K(3, 0.0)).entries.determinant() - 1.0) < 1e-12);
  REQUIRE_THROWS_AS(reduce(KernelMatrix{RMat::Identity(2, 2)}), std::domain_error);
}

TEST_CASE("determinant triple is (0, 1, n+1)") {
  REQUIRE(recurrence_determinants(1).Dbarbar == 2);
  auto t2 = recurrence_determinants(2);
  REQUIRE(t2.D == 0);
  REQUIRE(t2.Dbar == 1);
  REQUIRE(t2.Dbarbar == 3);
  for (int n = 1; n <= 100; ++n) {
    auto t = recurrence_determinants(n);
    REQUIRE(t.D == 0);
    REQUIRE(t.Dbar == 1);
    REQUIRE(t.Dbarbar == n + 1);
  }
  auto big = recurrence_determinants(10000);
  REQUIRE(big.D == 0);
  REQUIRE(big.Dbar == 1);
  REQUIRE(big.Dbarbar == 10001);
  REQUIRE_THROWS_AS(recurrence_determinants(0), std::domain_error);
}

TEST_CASE("determinant triple matches dense determinants") {
  const int n = 6;
  auto t = recurrence_determinants(n);
  RMat K = build_K(n, 0.0).entries;
  RMat Kb = reduce(build_K(n, 0.0)).entries;
  // the n x n all-twos block sits inside the next-order reduced kernel
  RMat interior = reduce(build_K(n + 1, 0.0)).entries.bottomRightCorner(n, n);
  REQUIRE(std::abs(K.determinant() - double(t.D)) < 1e-10);
  REQUIRE(std::abs(Kb.determinant() - double(t.Dbar)) < 1e-10);
  REQUIRE(std::abs(interior.determinant() - double(t.Dbarbar)) < 1e-10);
}

TEST_CASE("linear lambda-coefficient of the reduced determinant") {
  // det Kbar(lambda) = 1 - n(n+1)/2 lambda + O(lambda^2)
  for (int n = 1; n <= 50; ++n)
    REQUIRE(reduced_determinant_linear_coefficient(n) ==
            std::int64_t(n) * (n + 1) / 2);
  // numerical cross-check of the slope at small lambda
  for (int n : {3, 7, 12}) {
    const double h = 1e-7;
    double det = reduce(build_K(n, h)).entries.determinant();
    double slope = (1.0 - det) / h;
    REQUIRE(std::abs(slope - n * (n + 1) / 2.0) < 1e-4 * n * n);
  }
}

TEST_CASE("smallest reduced eigenvalue at lambda = 0") {
  // closed form 4 sin^2(pi / (2(2n+1))) from the Dirichlet-Neumann spectrum
  for (int n : {2, 3, 5, 8, 13}) {
    RMat K0 = reduce(build_K(n, 0.0)).entries;
    Eigen::SelfAdjointEigenSolver<RMat> es(K0);
    double expect = 4 * std::pow(std::sin(M_PI / (2.0 * (2 * n + 1))), 2);
    REQUIRE(std::abs(es.eigenvalues().minCoeff() - expect) < 1e-12);
  }
  // n = 3 case sits just below 1/4
  RMat K0 = reduce(build_K(3, 0.0)).entries;
  Eigen::SelfAdjointEigenSolver<RMat> es(K0);
  REQUIRE(std::abs(es.eigenvalues().minCoeff() - 0.19806226419516171) < 1e-13);
}

TEST_CASE("positivity threshold report") {
  auto r3 = positivity_threshold(make_grid(3, 1.0, 1.0));
  REQUIRE(r3.holds);  // 3 > 2 w^2 T^2 = 2
  REQUIRE(std::abs(r3.bound - 1.0 / 6.0) < 1e-15);
  auto r2 = positivity_threshold(make_grid(2, 1.0, 1.0));
  REQUIRE(!r2.holds);  // boundary case: 2 > 2 fails
  // the reported eigenvalue refers to the lambda = 0 matrix
  REQUIRE(std::abs(r3.eig_min - 0.19806226419516171) < 1e-12);
}

TEST_CASE("threshold is not sufficient on coarse grids") {
  // w = 1, T = sqrt(2.2): the formula holds for N = 5 yet the reduced
  // kernel has a negative eigenvalue, so the bound cannot be relied on
  // without the eigenvalue check.
  GridSpec g = make_grid(5, std::sqrt(2.2), 1.0);
  auto rep = positivity_threshold(g);
  REQUIRE(rep.holds);
  double eig_min_at_lambda = rep.eig_min - g.lambda();
  REQUIRE(std::abs(eig_min_at_lambda - (-0.006986)) < 1e-6);
  REQUIRE_THROWS_AS(invert_reduced(reduce(build_K(g)), g.eps), numeric_error);
  // refining the same physical problem restores positivity
  GridSpec fine = make_grid(12, std::sqrt(2.2), 1.0);
  REQUIRE(positivity_threshold(fine).eig_min - fine.lambda() > 0);
}

TEST_CASE("hand-checked inverse at N = 2") {
  auto G = invert_reduced(reduce(build_K(2, 0.0)), 0.1);
  RMat expect(2, 2);
  expect << 0.2, 0.1, 0.1, 0.1;
  REQUIRE((G.entries - expect).norm() < 1e-14);
}

TEST_CASE("inverse property and positivity across sizes") {
  for (int N : {4, 16, 64, 512}) {
    GridSpec g = make_grid(N, 1.0, 1.0);
    auto Kb = reduce(build_K(g));
    auto G = invert_reduced(Kb, g.eps);
    RMat prod = G.entries * (Kb.entries / g.eps);
    REQUIRE((prod - RMat::Identity(N, N)).cwiseAbs().maxCoeff() < 1e-10);
    Eigen::SelfAdjointEigenSolver<RMat> es(G.entries);
    REQUIRE(es.eigenvalues().minCoeff() > 0);
  }
}

TEST_CASE("quadratic form positivity") {
  GridSpec g = make_grid(6, 1.5, 0.8);
  auto G = invert_reduced(reduce(build_K(g)), g.eps);
  REQUIRE(quadratic_form(G, RVec::Zero(6)) == 0.0);
  RVec e1 = RVec::Zero(6);
  e1(0) = 1;
  REQUIRE(quadratic_form(G, e1) > 0);
  std::mt19937_64 rng(314);
  std::normal_distribution<double> gauss;
  for (int t = 0; t < 100; ++t) {
    RVec xi(6);
    for (int j = 0; j < 6; ++j) xi(j) = gauss(rng);
    if (xi.norm() == 0) continue;
    REQUIRE(quadratic_form(G, xi) > 0);
  }
  REQUIRE_THROWS_AS(quadratic_form(G, RVec::Zero(5)), std::domain_error);
}

TEST_CASE("first-basis-vector quadratic form at the hand-checked inverse") {
  auto G = invert_reduced(reduce(build_K(2, 0.0)), 0.1);
  RVec e1 = RVec::Zero(2);
  e1(0) = 1;
  REQUIRE(std::abs(quadratic_form(G, e1) - 0.2) < 1e-15);
}

TEST_CASE("kernel action converges to the continuum operator") {
  // (K f)_j / eps^2 -> -(f'' + w^2 f) at interior points, second order
  const double w = 0.7, T = 1.0;
  auto f = [](double t) { return std::sin(2 * t) + 0.3 * std::cos(t); };
  auto rhs = [&](double t) {
    return -(-4 * std::sin(2 * t) - 0.3 * std::cos(t) + w * w * f(t));
  };
  auto max_err = [&](int N) {
    GridSpec g = make_grid(N, T, w);
    auto K = build_K(g);
    RVec samples(N + 1);
    for (int j = 0; j <= N; ++j) samples(j) = f(j * g.eps);
    RVec out = K.entries * samples;
    double err = 0;
    for (int j = 2; j <= N - 2; ++j)
      err = std::max(err, std::abs(out(j) / (g.eps * g.eps) - rhs(j * g.eps)));
    return err;
  };
  double e32 = max_err(32), e64 = max_err(64);
  REQUIRE(e64 < e32);
  REQUIRE(e32 / e64 > 3.2);
  REQUIRE(e32 / e64 < 4.8);
}

TEST_CASE("grid construction guards") {
  REQUIRE_THROWS_AS(make_grid(1, 1.0, 1.0), std::domain_error);
  REQUIRE_THROWS_AS(make_grid(4, -1.0, 1.0), std::domain_error);
  REQUIRE_THROWS_AS(make_grid(4, 1.0, -0.5), std::domain_error);
  REQUIRE_THROWS_AS(build_K(1, 0.0), std::domain_error);
  REQUIRE_THROWS_AS(invert_reduced(reduce(build_K(4, 0.0)), 0.0),
                    std::domain_error);
}
