#include "spgl/sgla.hpp"

#include <cmath>
#include <future>
#include <stdexcept>
#include <utility>

#include "spgl/isotonic.hpp"
#include "spgl/operators.hpp"
#include "spgl/sga.hpp"
#include "spgl/sgl.hpp"
#include "spgl/spectrum.hpp"

namespace spgl {

namespace {

SgaState adj_view(const SglaState& s) {
  SgaState a;
  a.p = s.p;
  a.z = s.z;
  a.w = s.w;
  a.V = s.V;
  a.psi = s.psi;
  a.gamma = s.gamma;
  a.set = s.adj_set;
  return a;
}

SglState lap_view(const SglaState& s) {
  SglState l;
  l.p = s.p;
  l.w = s.w;
  l.U = s.U;
  l.lambda = s.lambda;
  l.beta = s.beta;
  l.set = s.lap_set;
  return l;
}

}  // namespace

double sgla_objective(const SglaState& s) {
  const MatrixXd Lw = lap_apply(s.p, s.w);
  const MatrixXd Rl = Lw - s.U * s.lambda.asDiagonal() * s.U.transpose();
  const MatrixXd Ra = adj_apply(s.p, s.w) - s.V * s.psi.asDiagonal() * s.V.transpose();
  return -s.lambda.array().log().sum() + s.K.cwiseProduct(Lw).sum() +
         0.5 * s.beta * Rl.squaredNorm() + 0.5 * s.gamma * Ra.squaredNorm();
}

VectorXd sgla_update_w(const SglaState& s) {
  const VectorXd c1 =
      s.beta * lap_adjoint(s.U * s.lambda.asDiagonal() * s.U.transpose() - s.K / s.beta);
  const VectorXd c2 = s.gamma * adj_adjoint(s.V * s.psi.asDiagonal() * s.V.transpose());
  const VectorXd grad1 = s.beta * lap_adjoint(lap_apply(s.p, s.w)) - c1;
  const VectorXd grad2 = s.gamma * adj_adjoint(adj_apply(s.p, s.w)) - c2;
  const double lipschitz = 2.0 * (s.p * s.beta + s.gamma);
  return (s.w - (grad1 + grad2) / lipschitz).cwiseMax(0.0);
}

FitResult sgla_fit(const MatrixXd& S, const LaplacianSpectralSet& lap_set,
                   const AdjacencySpectralSet& adj_set, const SolverConfig& cfg) {
  const int p = static_cast<int>(S.rows());
  if (S.rows() != S.cols()) throw std::invalid_argument("sgla_fit: S must be square");
  if (!(adj_set.c2 >= 0.0) || !(adj_set.c1 >= adj_set.c2))
    throw std::invalid_argument("AdjacencySpectralSet: need c1 >= c2 >= 0");

  SglaState s;
  s.p = p;
  s.z = adj_set.z < 0 ? p % 2 : adj_set.z;
  if ((p - s.z) <= 0 || (p - s.z) % 2 != 0)
    throw std::invalid_argument("AdjacencySpectralSet: p - z must be positive and even");
  s.lap_set = lap_set;
  s.adj_set = adj_set;
  s.beta = cfg.beta;
  s.gamma = cfg.gamma;
  s.K = S + sparsity_shift(p, cfg.alpha);
  s.w = naive_warm_start(S, cfg.rank_tol);

  s.U = sgl_update_U(lap_view(s));
  s.lambda = lap_set.fixed_spectrum
                 ? *lap_set.fixed_spectrum
                 : reg_isotonic((s.U.transpose() * lap_apply(p, s.w) * s.U).diagonal().eval(),
                                s.beta, {lap_set.c1, lap_set.c2});
  s.V = sga_update_V(adj_view(s));
  s.psi = sym_isotonic_psi((s.V.transpose() * adj_apply(p, s.w) * s.V).diagonal().eval(),
                           {adj_set.c1, adj_set.c2});

  FitResult res;
  res.p = p;
  res.objective_trace.push_back(sgla_objective(s));
  res.converged = false;

  int t = 0;
  for (; t < cfg.max_iter; ++t) {
    const VectorXd w_prev = s.w;
    s.w = sgla_update_w(s);

    if (cfg.parallel_spectral) {
      auto lap_task = std::async(std::launch::async, [&]() {
        SglState l = lap_view(s);
        MatrixXd U = sgl_update_U(l);
        l.U = U;
        return std::make_pair(std::move(U), sgl_update_lambda(l));
      });
      auto adj_task = std::async(std::launch::async, [&]() {
        SgaState a = adj_view(s);
        MatrixXd V = sga_update_V(a);
        a.V = V;
        return std::make_pair(std::move(V), sga_update_psi(a));
      });
      auto [U, lambda] = lap_task.get();
      auto [V, psi] = adj_task.get();
      s.U = std::move(U);
      s.lambda = std::move(lambda);
      s.V = std::move(V);
      s.psi = std::move(psi);
    } else {
      s.U = sgl_update_U(lap_view(s));
      s.V = sga_update_V(adj_view(s));
      {
        SglState l = lap_view(s);
        s.lambda = sgl_update_lambda(l);
      }
      {
        SgaState a = adj_view(s);
        s.psi = sga_update_psi(a);
      }
    }

    res.objective_trace.push_back(sgla_objective(s));
    const double rel = (s.w - w_prev).norm() / std::max(w_prev.norm(), 1e-10);
    if (cfg.beta_schedule == BetaSchedule::kGeometric)
      s.beta = std::min(s.beta * cfg.beta_growth, cfg.beta_max);
    if (rel < cfg.tol) {
      res.converged = true;
      ++t;
      break;
    }
  }

  res.iterations = t;
  res.w = s.w;
  res.theta = lap_apply(p, s.w);
  res.lambda = s.lambda;
  res.U = s.U;
  res.psi = s.psi;
  res.V = s.V;
  return res;
}

}  // namespace spgl
