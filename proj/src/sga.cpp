#include "spgl/sga.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "spgl/isotonic.hpp"
#include "spgl/operators.hpp"
#include "spgl/sgl.hpp"
#include "spgl/spectrum.hpp"

namespace spgl {

namespace {

constexpr double kL2Cap = 1e6;

MatrixXd ones_shift(int p) { return MatrixXd::Constant(p, p, 1.0 / p); }

// Eigendecomposition of Lw + J with jitter retries: 1e-10 I added and
// escalated x10 up to 3 times if the matrix is numerically singular.
SpectralPair decompose_shifted(int p, const VectorXd& w) {
  MatrixXd M = lap_apply(p, w) + ones_shift(p);
  double jitter = 1e-10;
  for (int attempt = 0; attempt <= 3; ++attempt) {
    const SpectralPair ep = sym_eigen(M);
    if (ep.eigenvalues(0) > 0.0) return ep;
    if (attempt == 3) break;
    M += jitter * MatrixXd::Identity(p, p);
    jitter *= 10.0;
  }
  throw std::runtime_error("sga: Lw + J is singular even after jitter retries");
}

double log_det_from(const SpectralPair& ep) {
  return ep.eigenvalues.array().log().sum();
}

MatrixXd inverse_from(const SpectralPair& ep) {
  return ep.eigenvectors * ep.eigenvalues.cwiseInverse().asDiagonal() * ep.eigenvectors.transpose();
}

int resolve_z(int p, const AdjacencySpectralSet& set) {
  const int z = set.z < 0 ? p % 2 : set.z;
  if (z < 0 || (p - z) <= 0 || (p - z) % 2 != 0)
    throw std::invalid_argument("AdjacencySpectralSet: p - z must be positive and even");
  return z;
}

}  // namespace

double sga_objective(const SgaState& s) {
  const MatrixXd Lw = lap_apply(s.p, s.w);
  const SpectralPair ep = sym_eigen(Lw + ones_shift(s.p));
  if (ep.eigenvalues(0) <= 0.0) return std::numeric_limits<double>::infinity();
  const MatrixXd R = adj_apply(s.p, s.w) - s.V * s.psi.asDiagonal() * s.V.transpose();
  return -log_det_from(ep) + s.K.cwiseProduct(Lw).sum() + 0.5 * s.gamma * R.squaredNorm();
}

VectorXd sga_update_w(const SgaState& s, double step_scale) {
  const SpectralPair ep = decompose_shifted(s.p, s.w);
  const MatrixXd inv = inverse_from(ep);
  const VectorXd c_tilde =
      adj_adjoint(s.V * s.psi.asDiagonal() * s.V.transpose()) - lap_adjoint(s.K) / s.gamma;
  // Analytic gradient of -(1/gamma) log det(Lw + J) + 0.5 ||Aw||^2 - c~^T w.
  const VectorXd grad =
      -lap_adjoint(inv) / s.gamma + adj_adjoint(adj_apply(s.p, s.w)) - c_tilde;
  const double eig_min = ep.eigenvalues(0);
  const double l2 = std::min(2.0 * s.p / (eig_min * eig_min), kL2Cap);
  const double L = (2.0 + l2 / s.gamma) * step_scale;
  return (s.w - grad / L).cwiseMax(0.0);
}

MatrixXd sga_update_V(const SgaState& s) {
  const SpectralPair ep = sym_eigen(adj_apply(s.p, s.w));
  const int p = s.p;
  const int half = (p - s.z) / 2;
  MatrixXd V(p, p - s.z);
  // Descending order: column c of V is ascending column p-1-c.
  for (int c = 0; c < half; ++c) V.col(c) = ep.eigenvectors.col(p - 1 - c);
  for (int c = 0; c < half; ++c) V.col(half + c) = ep.eigenvectors.col(half - 1 - c);
  return V;
}

VectorXd sga_update_psi(const SgaState& s) {
  const VectorXd e = (s.V.transpose() * adj_apply(s.p, s.w) * s.V).diagonal();
  return sym_isotonic_psi(e, {s.set.c1, s.set.c2});
}

FitResult sga_fit(const MatrixXd& S, const AdjacencySpectralSet& set, const SolverConfig& cfg) {
  const int p = static_cast<int>(S.rows());
  if (S.rows() != S.cols()) throw std::invalid_argument("sga_fit: S must be square");
  if (!(set.c2 > 0.0) || !(set.c1 >= set.c2))
    throw std::invalid_argument("AdjacencySpectralSet: need c1 >= c2 > 0");

  SgaState s;
  s.p = p;
  s.z = resolve_z(p, set);
  s.set = set;
  s.gamma = cfg.gamma;
  s.K = S + sparsity_shift(p, cfg.alpha);
  // Warm start padded away from zero so Lw + J starts positive definite.
  s.w = naive_warm_start(S, cfg.rank_tol).array() + 1e-3;
  s.V = sga_update_V(s);
  s.psi = sga_update_psi(s);

  FitResult res;
  res.p = p;
  res.objective_trace.push_back(sga_objective(s));
  res.converged = false;

  int t = 0;
  for (; t < cfg.max_iter; ++t) {
    const VectorXd w_prev = s.w;
    const double obj_prev = res.objective_trace.back();
    // The L2 estimate is not a certified Lipschitz bound; halve the step
    // until the majorized update actually descends (any larger constant is
    // still a valid majorizer).
    double scale = 1.0;
    for (int tries = 0; tries < 60; ++tries) {
      s.w = sga_update_w({s.p, s.z, w_prev, s.V, s.psi, s.K, s.gamma, s.set}, scale);
      const double obj_now = sga_objective(s);
      if (obj_now <= obj_prev + 1e-12 * std::max(1.0, std::abs(obj_prev))) break;
      scale *= 2.0;
    }
    s.V = sga_update_V(s);
    s.psi = sga_update_psi(s);
    res.objective_trace.push_back(sga_objective(s));
    const double rel = (s.w - w_prev).norm() / std::max(w_prev.norm(), 1e-10);
    if (rel < cfg.tol) {
      res.converged = true;
      ++t;
      break;
    }
  }

  res.iterations = t;
  res.w = s.w;
  res.theta = lap_apply(p, s.w);
  res.psi = s.psi;
  res.V = s.V;
  return res;
}

}  // namespace spgl
