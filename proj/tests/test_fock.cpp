#include <catch2/catch_amalgamated.hpp>

#include "beable/fock.hpp"

using namespace beable;

TEST_CASE("canonical pair scales with frequency") {
  auto c1 = build_canonical(10, 1.0);
  auto c2 = build_canonical(10, 2.0);
  // Q ~ 1/sqrt(w), P ~ sqrt(w)
  REQUIRE((c2.Q - c1.Q / std::sqrt(2.0)).norm() < 1e-14);
  REQUIRE((c2.P - c1.P * std::sqrt(2.0)).norm() < 1e-14);
}

TEST_CASE("ladder structure of Q") {
  auto c = build_canonical(6, 1.0);
  REQUIRE(std::abs(c.Q(0, 1) - cplx(1.0 / std::sqrt(2.0), 0)) < 1e-15);
  REQUIRE(std::abs(c.Q(3, 4) - cplx(std::sqrt(4.0 / 2.0), 0)) < 1e-15);
  REQUIRE((c.Q - c.Q.adjoint()).norm() < 1e-15);
  REQUIRE((c.P - c.P.adjoint()).norm() < 1e-15);
}

TEST_CASE("commutator is i below the truncation boundary") {
  auto c = build_canonical(12, 0.7);
  Mat C = c.Q * c.P - c.P * c.Q;
  Mat err = safe_block(C) - I * Mat::Identity(11, 11);
  REQUIRE(err.norm() < 1e-13);
  // the defect is confined to the border and is large there
  REQUIRE(truncation_defect(C - I * Mat::Identity(13, 13)) > 1.0);
}

TEST_CASE("hamiltonian is diagonal with spectrum w(n + 1/2)") {
  auto c = build_canonical(8, 1.0);
  Mat H = build_hamiltonian(c.Q, c.P, 1.0);
  REQUIRE(std::abs(H(0, 0) - cplx(0.5, 0)) < 1e-14);
  REQUIRE(std::abs(H(5, 5) - cplx(5.5, 0)) < 1e-14);

  auto c3 = build_canonical(8, 3.0);
  Mat H3 = build_hamiltonian(c3.Q, c3.P, 3.0);
  REQUIRE(std::abs(H3(1, 1) - cplx(4.5, 0)) < 1e-14);

  // P^2 and w^2 Q^2 off-diagonals cancel exactly away from the border
  Mat off = safe_block(H);
  for (int i = 0; i < off.rows(); ++i) off(i, i) = 0;
  REQUIRE(off.norm() < 1e-13);
}

TEST_CASE("vacuum is the exact zero coherent state") {
  StateOperator s = coherent_state(cplx(0, 0), 10);
  Mat expect = Mat::Zero(11, 11);
  expect(0, 0) = 1;
  REQUIRE((s.rho - expect).norm() == 0.0);
  REQUIRE(!s.truncation_warning);
}

TEST_CASE("coherent state means, trace, and purity") {
  auto c = build_canonical(40, 1.0);
  StateOperator s = coherent_state(cplx(1.0, 0.0), 40);
  REQUIRE(!s.truncation_warning);
  REQUIRE(std::abs(s.rho.trace() - cplx(1, 0)) < 1e-14);
  REQUIRE(std::abs((s.rho * s.rho).trace() - cplx(1, 0)) < 1e-12);
  REQUIRE(std::abs(expectation(c.Q, s.rho).real() - std::sqrt(2.0)) < 1e-10);
  REQUIRE(std::abs(expectation(c.P, s.rho).real()) < 1e-12);
}

TEST_CASE("coherent state means follow Re and Im of alpha") {
  double w = 2.0;
  auto c = build_canonical(50, w);
  StateOperator s = coherent_state(cplx(0.5, 0.3), 50);
  REQUIRE(std::abs(expectation(c.Q, s.rho).real() - std::sqrt(2.0 / w) * 0.5) < 1e-10);
  REQUIRE(std::abs(expectation(c.P, s.rho).real() - std::sqrt(2.0 * w) * 0.3) < 1e-10);
}

TEST_CASE("coherent state flags aggressive truncation") {
  StateOperator s = coherent_state(cplx(2.0, 0.0), 10);  // |alpha|^2 = 4 > 10/4
  REQUIRE(s.truncation_warning);
  // still normalized by construction
  REQUIRE(std::abs(s.rho.trace() - cplx(1, 0)) < 1e-14);
}

TEST_CASE("constructor guards") {
  REQUIRE_THROWS_AS(build_canonical(0, 1.0), std::domain_error);
  REQUIRE_THROWS_AS(build_canonical(5, 0.0), std::domain_error);
  REQUIRE_THROWS_AS(build_canonical(5, -2.0), std::domain_error);
  auto c = build_canonical(4, 1.0);
  auto d = build_canonical(6, 1.0);
  REQUIRE_THROWS_AS(build_hamiltonian(c.Q, d.P, 1.0), std::domain_error);
}

TEST_CASE("slope fit recovers an exact line") {
  std::vector<double> t, y;
  for (int k = 0; k <= 20; ++k) {
    t.push_back(0.1 * k);
    y.push_back(3.0 - 0.2 * (0.1 * k));
  }
  REQUIRE(std::abs(fit_slope(t, y) + 0.2) < 1e-13);
}

TEST_CASE("random densities are states") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 20; ++k) {
    Mat rho = random_density(6, rng);
    REQUIRE(std::abs(rho.trace() - cplx(1, 0)) < 1e-13);
    REQUIRE((rho - rho.adjoint()).norm() < 1e-13);
    REQUIRE(min_eigenvalue(rho) > -1e-14);
  }
}
