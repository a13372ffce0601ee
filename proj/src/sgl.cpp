#include "spgl/sgl.hpp"

#include <cmath>
#include <stdexcept>

#include "spgl/isotonic.hpp"
#include "spgl/operators.hpp"
#include "spgl/spectrum.hpp"

namespace spgl {

MatrixXd sparsity_shift(int p, double alpha) {
  return alpha * (2.0 * MatrixXd::Identity(p, p) - MatrixXd::Ones(p, p));
}

VectorXd naive_warm_start(const MatrixXd& S, double rank_tol) {
  const int p = static_cast<int>(S.rows());
  const MatrixXd Sp = pinv(S, rank_tol);
  // Read edge weights off the pseudo-inverse the way the Naive estimator
  // does: theta_ij = -w_ij, clipped to the feasible cone.
  VectorXd w0(edge_count(p));
  std::int64_t k = 0;
  for (int j = 0; j < p; ++j)
    for (int i = j + 1; i < p; ++i, ++k) w0(k) = std::max(0.0, -Sp(i, j));
  if (!w0.allFinite() || !(w0.maxCoeff() > 0.0)) return VectorXd::Ones(edge_count(p));
  return w0;
}

namespace {

void validate_set(int p, const LaplacianSpectralSet& set) {
  if (set.k < 1 || set.k >= p)
    throw std::invalid_argument("LaplacianSpectralSet: need 1 <= k < p");
  if (!(set.c1 > 0.0) || !(set.c1 <= set.c2))
    throw std::invalid_argument("LaplacianSpectralSet: need 0 < c1 <= c2");
  if (set.fixed_spectrum && set.fixed_spectrum->size() != p - set.k)
    throw std::invalid_argument("LaplacianSpectralSet: fixed_spectrum must have length p - k");
}

}  // namespace

double sgl_objective(const SglState& s) {
  const MatrixXd Lw = lap_apply(s.p, s.w);
  const MatrixXd R = Lw - s.U * s.lambda.asDiagonal() * s.U.transpose();
  return -s.lambda.array().log().sum() + s.K.cwiseProduct(Lw).sum() + 0.5 * s.beta * R.squaredNorm();
}

VectorXd sgl_update_w(const SglState& s) {
  const MatrixXd target = s.U * s.lambda.asDiagonal() * s.U.transpose() - s.K / s.beta;
  const VectorXd c = lap_adjoint(target);
  const VectorXd grad = lap_adjoint(lap_apply(s.p, s.w)) - c;
  return (s.w - grad / (2.0 * s.p)).cwiseMax(0.0);
}

MatrixXd sgl_update_U(const SglState& s) {
  const SpectralPair ep = sym_eigen(lap_apply(s.p, s.w));
  return ep.eigenvectors.rightCols(s.p - s.set.k);
}

VectorXd sgl_update_lambda(const SglState& s) {
  if (s.set.fixed_spectrum) return *s.set.fixed_spectrum;
  const MatrixXd Lw = lap_apply(s.p, s.w);
  const VectorXd d = (s.U.transpose() * Lw * s.U).diagonal();
  return reg_isotonic(d, s.beta, {s.set.c1, s.set.c2});
}

FitResult sgl_fit(const MatrixXd& S, const LaplacianSpectralSet& set, const SolverConfig& cfg) {
  const int p = static_cast<int>(S.rows());
  if (S.rows() != S.cols()) throw std::invalid_argument("sgl_fit: S must be square");
  validate_set(p, set);

  SglState s;
  s.p = p;
  s.set = set;
  s.beta = cfg.beta;
  s.K = S + sparsity_shift(p, cfg.alpha);
  s.w = naive_warm_start(S, cfg.rank_tol);
  s.U = sgl_update_U(s);
  s.lambda = set.fixed_spectrum
                 ? *set.fixed_spectrum
                 : reg_isotonic((s.U.transpose() * lap_apply(p, s.w) * s.U).diagonal().eval(),
                                s.beta, {set.c1, set.c2});

  FitResult res;
  res.p = p;
  res.objective_trace.push_back(sgl_objective(s));
  res.converged = false;

  int t = 0;
  for (; t < cfg.max_iter; ++t) {
    const VectorXd w_prev = s.w;
    s.w = sgl_update_w(s);
    s.U = sgl_update_U(s);
    s.lambda = sgl_update_lambda(s);
    res.objective_trace.push_back(sgl_objective(s));
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
  return res;
}

}  // namespace spgl
