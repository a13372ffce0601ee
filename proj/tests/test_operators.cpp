#include <doctest.h>

#include <random>

#include "spgl/operators.hpp"
#include "spgl/spectrum.hpp"
#include "support/random_inputs.hpp"

using namespace spgl;
using spgl::testing::random_symmetric;
using spgl::testing::random_weights;

TEST_CASE("edge index map is a bijection") {
  for (int p : {2, 3, 4, 7, 11, 30}) {
    for (std::int64_t k = 0; k < edge_count(p); ++k) {
      const EdgePair e = edge_pair(p, k);
      CHECK(e.row > e.col);
      CHECK(e.row < p);
      CHECK(edge_index(p, e.row, e.col) == k);
    }
  }
  CHECK_THROWS_AS(edge_index(4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(edge_pair(4, 6), std::invalid_argument);
}

TEST_CASE("lap_apply matches the worked 4x4 example") {
  VectorXd w(6);
  w << 1, 2, 3, 4, 5, 6;
  const MatrixXd M = lap_apply(4, w);
  CHECK(M(0, 0) == doctest::Approx(6));
  CHECK(M(1, 1) == doctest::Approx(10));
  CHECK(M(2, 2) == doctest::Approx(12));
  CHECK(M(3, 3) == doctest::Approx(14));
  CHECK(M(1, 0) == doctest::Approx(-1));
  CHECK(M(2, 0) == doctest::Approx(-2));
  CHECK(M(3, 0) == doctest::Approx(-3));
  CHECK(M(2, 1) == doctest::Approx(-4));
  CHECK(M(3, 1) == doctest::Approx(-5));
  CHECK(M(3, 2) == doctest::Approx(-6));
  CHECK(M.isApprox(M.transpose()));
}

TEST_CASE("lap_apply smallest cases") {
  CHECK(lap_apply(3, VectorXd::Zero(3)).isZero(0));
  VectorXd w1(1);
  w1 << 2.5;
  const MatrixXd M = lap_apply(2, w1);
  CHECK(M(0, 0) == doctest::Approx(2.5));
  CHECK(M(0, 1) == doctest::Approx(-2.5));
  CHECK_THROWS_AS(lap_apply(4, w1), std::invalid_argument);
}

TEST_CASE("lap row sums vanish and the matrix is PSD for w >= 0") {
  std::mt19937_64 rng(7);
  for (int p : {3, 8, 17}) {
    const VectorXd w = random_weights(rng, p);
    const MatrixXd M = lap_apply(p, w);
    CHECK((M * VectorXd::Ones(p)).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, M.norm()));
    const SpectralPair ep = sym_eigen(M);
    CHECK(ep.eigenvalues(0) > -1e-10);
  }
  // Integer weights make the cancellation exact.
  std::uniform_int_distribution<int> di(0, 9);
  VectorXd w(edge_count(9));
  for (int k = 0; k < w.size(); ++k) w(k) = di(rng);
  CHECK((lap_apply(9, w) * VectorXd::Ones(9)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("lap_adjoint matches the worked example and identity input") {
  std::mt19937_64 rng(11);
  const MatrixXd Y = random_symmetric(rng, 4);
  const VectorXd v = lap_adjoint(Y);
  CHECK(v(0) == doctest::Approx(Y(0, 0) - Y(1, 0) - Y(0, 1) + Y(1, 1)));
  CHECK(v(5) == doctest::Approx(Y(2, 2) - Y(3, 2) - Y(2, 3) + Y(3, 3)));
  CHECK(lap_adjoint(MatrixXd::Identity(5, 5)).isApproxToConstant(2.0));
  CHECK_THROWS_AS(lap_adjoint(MatrixXd::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("adj_apply example, zero diagonal, and degree relation") {
  VectorXd w(6);
  w << 1, 2, 3, 4, 5, 6;
  const MatrixXd A = adj_apply(4, w);
  CHECK(A.diagonal().isZero(0));
  CHECK(A(1, 0) == doctest::Approx(1));
  CHECK(A(3, 2) == doctest::Approx(6));
  CHECK(adj_apply(4, VectorXd::Zero(6)).isZero(0));
  // Theta = Diag(degrees) - A(w): the sum is diagonal.
  std::mt19937_64 rng(3);
  const VectorXd wr = random_weights(rng, 6);
  const MatrixXd sum = lap_apply(6, wr) + adj_apply(6, wr);
  CHECK((sum - MatrixXd(sum.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("adj_adjoint basic values") {
  CHECK(adj_adjoint(MatrixXd::Identity(4, 4)).isZero(0));
  std::mt19937_64 rng(5);
  const MatrixXd Y = random_symmetric(rng, 5);
  const VectorXd v = adj_adjoint(Y);
  for (std::int64_t k = 0; k < v.size(); ++k) {
    const EdgePair e = edge_pair(5, k);
    CHECK(v(k) == doctest::Approx(2.0 * Y(e.row, e.col)));
  }
}

TEST_CASE("adjoint identities hold to 1e-12 relative") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> gauss;
  for (int p = 2; p <= 50; p += 3) {
    for (int rep = 0; rep < 20; ++rep) {
      const VectorXd w = random_weights(rng, p);
      MatrixXd Y(p, p);
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) Y(i, j) = gauss(rng);
      const double lhsL = lap_apply(p, w).cwiseProduct(Y).sum();
      const double rhsL = w.dot(lap_adjoint(Y));
      CHECK(std::abs(lhsL - rhsL) <= 1e-12 * std::max(1.0, std::abs(lhsL)));
      const double lhsA = adj_apply(p, w).cwiseProduct(Y).sum();
      const double rhsA = w.dot(adj_adjoint(Y));
      CHECK(std::abs(lhsA - rhsA) <= 1e-12 * std::max(1.0, std::abs(lhsA)));
    }
  }
}

TEST_CASE("operator norms: formula, empirical bound, equality at all-ones") {
  CHECK(operator_norms(8).first == doctest::Approx(4.0));
  CHECK(operator_norms(2).first == doctest::Approx(2.0));
  CHECK(operator_norms(17).second == doctest::Approx(std::sqrt(2.0)));

  std::mt19937_64 rng(17);
  for (int p : {4, 9}) {
    const double bound = operator_norms(p).first;
    for (int rep = 0; rep < 1000; ++rep) {
      VectorXd x = random_weights(rng, p).array() - 1.0;  // signed directions too
      x.normalize();
      CHECK(lap_apply(p, x).norm() <= bound + 1e-10);
    }
    const VectorXd ones = VectorXd::Ones(edge_count(p));
    CHECK(std::abs(lap_apply(p, ones).norm() - bound * ones.norm()) < 1e-10);
    CHECK(lap_apply(p, ones).norm() == doctest::Approx(p * std::sqrt(p - 1.0)));
  }
}

TEST_CASE("||Lw||^2 = w^T L*(Lw) > 0 for w != 0") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 50; ++rep) {
    const int p = 2 + static_cast<int>(rng() % 20);
    VectorXd w = random_weights(rng, p).array() - 0.7;
    if (w.norm() == 0.0) continue;
    const double direct = lap_apply(p, w).squaredNorm();
    const double composed = w.dot(lap_adjoint(lap_apply(p, w)));
    CHECK(direct == doctest::Approx(composed).epsilon(1e-10));
    CHECK(direct > 0.0);
  }
}

TEST_CASE("weight vector validation") {
  WeightVector ok{4, VectorXd::Ones(6)};
  CHECK_NOTHROW(check_weight_vector(ok));
  WeightVector bad_len{4, VectorXd::Ones(5)};
  CHECK_THROWS_AS(check_weight_vector(bad_len), std::invalid_argument);
  WeightVector neg{3, VectorXd::Constant(3, -1.0)};
  CHECK_THROWS_AS(check_weight_vector(neg), std::invalid_argument);
}
