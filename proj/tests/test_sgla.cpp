#include <doctest.h>

#include <cmath>
#include <random>

#include "spgl/metrics.hpp"
#include "spgl/operators.hpp"
#include "spgl/sga.hpp"
#include "spgl/sgl.hpp"
#include "spgl/sgla.hpp"
#include "spgl/spectrum.hpp"
#include "spgl/synth.hpp"
#include "support/random_inputs.hpp"

using namespace spgl;
using spgl::testing::random_psd;
using spgl::testing::random_weights;

namespace {

SglaState random_state(std::mt19937_64& rng, int p, double beta, double gamma) {
  SglaState s;
  s.p = p;
  s.z = p % 2;
  s.beta = beta;
  s.gamma = gamma;
  s.adj_set.c2 = 0.0;
  s.w = random_weights(rng, p).array() + 0.05;
  s.K = random_psd(rng, p);
  SglState l;
  l.p = p;
  l.w = s.w;
  l.beta = beta;
  l.set = s.lap_set;
  s.U = sgl_update_U(l);
  l.U = s.U;
  s.lambda = sgl_update_lambda(l);
  SgaState a;
  a.p = p;
  a.z = s.z;
  a.w = s.w;
  a.gamma = gamma;
  a.set = s.adj_set;
  s.V = sga_update_V(a);
  a.V = s.V;
  s.psi = sga_update_psi(a);
  return s;
}

double w_cost(const SglaState& s, const VectorXd& w) {
  const VectorXd c1 =
      s.beta * lap_adjoint(s.U * s.lambda.asDiagonal() * s.U.transpose() - s.K / s.beta);
  const VectorXd c2 = s.gamma * adj_adjoint(s.V * s.psi.asDiagonal() * s.V.transpose());
  return 0.5 * s.beta * lap_apply(s.p, w).squaredNorm() - c1.dot(w) +
         0.5 * s.gamma * adj_apply(s.p, w).squaredNorm() - c2.dot(w);
}

}  // namespace

TEST_CASE("sgla_objective closed form and consistency with sgl") {
  const int p = 6, q = 5;
  SglaState s;
  s.p = p;
  s.z = 0;
  s.beta = 3.0;
  s.gamma = 5.0;
  s.w = VectorXd::Zero(edge_count(p));
  s.K = MatrixXd::Zero(p, p);
  s.lambda = VectorXd::Ones(q);
  s.U = MatrixXd::Identity(p, q);
  s.psi = VectorXd::Zero(p);
  s.V = MatrixXd::Identity(p, p);
  // (beta/2) q + (gamma/2) ||V Diag(psi) V^T||^2, and psi = 0 kills the last term.
  CHECK(sgla_objective(s) == doctest::Approx(0.5 * s.beta * q));

  // With psi = 0 the objective equals the sgl objective plus (gamma/2)||Aw||^2.
  std::mt19937_64 rng(91);
  SglaState r = random_state(rng, 7, 10.0, 4.0);
  r.psi.setZero();
  SglState l;
  l.p = r.p;
  l.w = r.w;
  l.U = r.U;
  l.lambda = r.lambda;
  l.K = r.K;
  l.beta = r.beta;
  l.set = r.lap_set;
  const double expected = sgl_objective(l) + 0.5 * r.gamma * adj_apply(r.p, r.w).squaredNorm();
  CHECK(sgla_objective(r) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("sgla gradient matches central finite differences") {
  std::mt19937_64 rng(93);
  for (int rep = 0; rep < 10; ++rep) {
    const int p = 5 + static_cast<int>(rng() % 4);
    SglaState s = random_state(rng, p, 20.0, 7.0);
    const VectorXd c1 =
        s.beta * lap_adjoint(s.U * s.lambda.asDiagonal() * s.U.transpose() - s.K / s.beta);
    const VectorXd c2 = s.gamma * adj_adjoint(s.V * s.psi.asDiagonal() * s.V.transpose());
    const VectorXd grad = s.beta * lap_adjoint(lap_apply(s.p, s.w)) - c1 +
                          s.gamma * adj_adjoint(adj_apply(s.p, s.w)) - c2;
    VectorXd fd(grad.size());
    const double h = 1e-6;
    for (int i = 0; i < grad.size(); ++i) {
      VectorXd wp = s.w, wm = s.w;
      wp(i) += h;
      wm(i) -= h;
      fd(i) = (w_cost(s, wp) - w_cost(s, wm)) / (2.0 * h);
    }
    CHECK((fd - grad).norm() <= 1e-5 * std::max(1.0, grad.norm()));
  }
}

TEST_CASE("sgla_update_w descends and keeps fixed points fixed") {
  std::mt19937_64 rng(97);
  for (int rep = 0; rep < 100; ++rep) {
    const int p = 4 + static_cast<int>(rng() % 8);
    SglaState s = random_state(rng, p, 15.0, 5.0);
    const double before = w_cost(s, s.w);
    CHECK(w_cost(s, sgla_update_w(s)) <= before + 1e-9 * std::max(1.0, std::abs(before)));
  }
  SglaState t = random_state(rng, 6, 15.0, 5.0);
  for (int it = 0; it < 8000; ++it) t.w = sgla_update_w(t);
  CHECK((sgla_update_w(t) - t.w).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("sgla_fit learns a 2-component bipartite composite") {
  const GroundTruth part1 = gen_bipartite(5, 3, 0.9, 1.0, 3.0, 311);
  const GroundTruth part2 = gen_bipartite(4, 4, 0.9, 1.0, 3.0, 312);
  const GroundTruth gt = disjoint_union({part1, part2});
  const int p = 16;
  REQUIRE(gt.theta.rows() == p);
  const MatrixXd S = scm(sample_igmrf(gt.theta, 30000, 313));
  SolverConfig cfg;
  cfg.beta = 1e3;
  cfg.gamma = 1e3;
  LaplacianSpectralSet lap{.k = 2};
  AdjacencySpectralSet adj{.z = 0, .c1 = 1e6, .c2 = 0.0};
  const FitResult res = sgla_fit(S, lap, adj, cfg);
  const EvalReport rep = f_score(res.theta, gt.theta, 0.1);
  CHECK(rep.f_score >= 0.9);
  CHECK(rep.relative_error <= 0.4);
  // Monotone objective trace.
  for (std::size_t i = 1; i < res.objective_trace.size(); ++i)
    CHECK(res.objective_trace[i] <=
          res.objective_trace[i - 1] + 1e-9 * std::max(1.0, std::abs(res.objective_trace[i - 1])));
  // lambda respects the k-component zero pattern (q = p - k retained).
  CHECK(res.lambda.size() == p - 2);
  // psi symmetric about the origin.
  const int b = static_cast<int>(res.psi.size());
  for (int i = 0; i < b / 2; ++i) CHECK(res.psi(i) == -res.psi(b - 1 - i));
}

TEST_CASE("parallel and sequential spectral updates match bit for bit") {
  const GroundTruth gt = gen_bipartite(5, 4, 0.8, 1.0, 2.0, 411);
  const MatrixXd S = scm(sample_igmrf(gt.theta, 3000, 412));
  SolverConfig cfg;
  cfg.beta = 100.0;
  cfg.gamma = 100.0;
  cfg.max_iter = 50;
  cfg.tol = 0.0;
  AdjacencySpectralSet adj{.z = 1, .c1 = 1e6, .c2 = 0.0};
  const FitResult seq = sgla_fit(S, {}, adj, cfg);
  cfg.parallel_spectral = true;
  const FitResult par = sgla_fit(S, {}, adj, cfg);
  CHECK((seq.w - par.w).cwiseAbs().maxCoeff() == 0.0);
  CHECK((seq.lambda - par.lambda).cwiseAbs().maxCoeff() == 0.0);
  CHECK((seq.psi - par.psi).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(seq.objective_trace.size() == par.objective_trace.size());
  for (std::size_t i = 0; i < seq.objective_trace.size(); ++i)
    CHECK(seq.objective_trace[i] == par.objective_trace[i]);
}

TEST_CASE("k=1 sgla tracks sga structure recovery on a bipartite instance") {
  const GroundTruth gt = gen_bipartite(6, 4, 0.8, 1.0, 3.0, 511);
  const MatrixXd S = scm(sample_igmrf(gt.theta, 20000, 512));
  SolverConfig cfg;
  cfg.gamma = 1e4;
  const FitResult via_sga = sga_fit(S, {}, cfg);
  cfg.beta = 1e3;
  AdjacencySpectralSet adj{.z = 0, .c1 = 1e6, .c2 = 0.0};
  const FitResult via_sgla = sgla_fit(S, {}, adj, cfg);
  const double fs_sga = f_score(via_sga.theta, gt.theta, 0.1).f_score;
  const double fs_sgla = f_score(via_sgla.theta, gt.theta, 0.1).f_score;
  CHECK(std::abs(fs_sga - fs_sgla) <= 0.1);
}
