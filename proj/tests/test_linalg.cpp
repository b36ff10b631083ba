#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "qpe/linalg.hpp"
#include "test_support.hpp"

using namespace qpe;
using namespace qpe::test;

namespace {

Eigen::MatrixXd random_symmetric(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
  return m;
}

Eigen::VectorXcd random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = std::complex<double>(dist(rng), dist(rng));
  return v / v.norm();
}

}  // namespace

TEST_CASE("sym_eig basic spectra") {
  Eigen::MatrixXd one(1, 1);
  one << -2.5;
  auto d = sym_eig(one);
  CHECK(d.eigenvalues(0) == doctest::Approx(-2.5));
  CHECK(std::abs(d.eigenvectors(0, 0)) == doctest::Approx(1.0));

  auto d2 = sym_eig(k2().adjacency_matrix());
  CHECK(d2.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(d2.eigenvalues(1) == doctest::Approx(1.0));

  auto d3 = sym_eig(k3().adjacency_matrix());
  CHECK(d3.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(d3.eigenvalues(1) == doctest::Approx(-1.0));
  CHECK(d3.eigenvalues(2) == doctest::Approx(2.0));
}

TEST_CASE("sym_eig reconstruction and orthonormality invariants") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Eigen::MatrixXd m = random_symmetric(n, rng);
    auto d = sym_eig(m);
    Eigen::MatrixXd recon = d.eigenvectors *
                            d.eigenvalues.asDiagonal() *
                            d.eigenvectors.transpose();
    CHECK((recon - m).cwiseAbs().maxCoeff() < 1e-9);
    Eigen::MatrixXd gram = d.eigenvectors.transpose() * d.eigenvectors;
    CHECK((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("sym_eig rejects bad input") {
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 0, 0;
  CHECK_THROWS_AS(sym_eig(asym), std::invalid_argument);
  Eigen::MatrixXd bad(1, 1);
  bad << std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(sym_eig(bad), std::invalid_argument);
}

TEST_CASE("sym_eig is deterministic within a build") {
  std::mt19937_64 rng(17);
  Eigen::MatrixXd m = random_symmetric(9, rng);
  auto a = sym_eig(m);
  auto b = sym_eig(m);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors == b.eigenvectors);
}

TEST_CASE("propagate examples") {
  auto d = sym_eig(k2().adjacency_matrix());

  Eigen::VectorXcd e0(2);
  e0 << 1.0, 0.0;
  auto at0 = propagate(d, 0.0, e0);
  CHECK((at0 - e0).norm() < 1e-12);

  double t = 0.83;
  auto evolved = propagate(d, t, e0);
  CHECK(std::abs(evolved(0) - std::complex<double>(std::cos(t), 0)) < 1e-12);
  CHECK(std::abs(evolved(1) - std::complex<double>(0, -std::sin(t))) < 1e-12);

  Eigen::VectorXcd wrong(3);
  CHECK_THROWS_AS(propagate(d, 1.0, wrong), std::invalid_argument);
}

TEST_CASE("propagate unitarity and group law on random inputs") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> time(-4.0, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    auto d = sym_eig(random_symmetric(n, rng));
    auto v = random_state(n, rng);
    double t1 = time(rng), t2 = time(rng);
    CHECK(propagate(d, t1, v).norm() == doctest::Approx(1.0).epsilon(1e-10));
    auto two_step = propagate(d, t1, propagate(d, t2, v));
    auto one_step = propagate(d, t1 + t2, v);
    CHECK((two_step - one_step).norm() < 1e-9);
  }
}

TEST_CASE("propagate agrees with the dense matrix exponential") {
  // independent route: scaling-and-squaring exponential of -iMt
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> time(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Eigen::MatrixXd m = random_symmetric(n, rng);
    double t = time(rng);
    Eigen::VectorXcd v = random_state(n, rng);
    Eigen::MatrixXcd gen = std::complex<double>(0, -t) * m.cast<std::complex<double>>();
    Eigen::VectorXcd expected = gen.exp() * v;
    Eigen::VectorXcd got = propagate(sym_eig(m), t, v);
    CHECK((got - expected).norm() < 1e-10);
  }
}

TEST_CASE("projectors examples") {
  auto pk2 = projectors(sym_eig(k2().adjacency_matrix()));
  REQUIRE(pk2.size() == 2);
  Eigen::MatrixXd expected(2, 2);
  expected << 0.5, -0.5, -0.5, 0.5;
  CHECK((pk2.projectors[0] - expected).cwiseAbs().maxCoeff() < 1e-12);

  auto pk3 = projectors(sym_eig(k3().adjacency_matrix()));
  REQUIRE(pk3.size() == 2);
  Eigen::MatrixXd third = Eigen::MatrixXd::Constant(3, 3, 1.0 / 3.0);
  CHECK((pk3.projectors[1] - third).cwiseAbs().maxCoeff() < 1e-12);  // lambda = 2
  CHECK((pk3.projectors[0] - (Eigen::MatrixXd::Identity(3, 3) - third))
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  auto pid = projectors(sym_eig(Eigen::MatrixXd::Identity(4, 4)));
  REQUIRE(pid.size() == 1);
  CHECK((pid.projectors[0] - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("projector completeness, idempotence and orthogonality") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(8, rng);
    auto ps = projectors(sym_eig(g.adjacency_matrix()));
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(8, 8);
    for (const auto& p : ps.projectors) {
      sum += p;
      CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-8);
    }
    CHECK((sum - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-8);
    for (size_t a = 0; a < ps.size(); ++a)
      for (size_t b = a + 1; b < ps.size(); ++b)
        CHECK((ps.projectors[a] * ps.projectors[b]).cwiseAbs().maxCoeff() < 1e-8);
  }
}
