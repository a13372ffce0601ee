// Shared solver configuration, spectral constraint sets, and fit results.
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace spgl {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Laplacian spectral target: k zero eigenvalues (graph components) and the
/// remaining p-k eigenvalues ordered inside [c1, c2].  A fixed_spectrum of
/// length p-k switches to cospectral mode (the eigenvalue block is pinned).
struct LaplacianSpectralSet {
  int k = 1;
  double c1 = 1e-6;
  double c2 = 1e6;
  std::optional<VectorXd> fixed_spectrum;
};

/// Adjacency spectral target for bipartite structures: z zero eigenvalues in
/// the middle of the symmetric spectrum, the retained positive half ordered
/// inside [c2, c1] (descending convention, c1 >= c2 > 0 in the general case).
/// z < 0 means "choose automatically" (p mod 2).
struct AdjacencySpectralSet {
  int z = -1;
  double c1 = 1e6;   // upper bound on psi_1
  double c2 = 1e-6;  // lower bound on psi_{b/2}
};

enum class BetaSchedule { kConstant, kGeometric };

struct SolverConfig {
  double beta = 100.0;   // Laplacian-factor coupling penalty
  double gamma = 1e4;    // adjacency-factor coupling penalty
  double alpha = 0.0;    // l1 sparsity level, enters via K = S + alpha(2I - 11^T)
  double tol = 1e-4;     // stop when ||w_new - w|| / max(||w||, eps) < tol
  int max_iter = 5000;
  BetaSchedule beta_schedule = BetaSchedule::kConstant;
  double beta_growth = 1.1;  // geometric schedule: beta <- min(growth*beta, beta_max)
  double beta_max = 1e9;
  double rank_tol = 1e-9;
  bool parallel_spectral = false;  // SGLA: run the (U,lambda) and (V,psi) updates concurrently
};

struct FitResult {
  int p = 0;
  VectorXd w;       // learned edge weights
  MatrixXd theta;   // lap_apply(p, w)
  VectorXd lambda;  // retained Laplacian eigenvalues (SGL/SGLA)
  MatrixXd U;       // their eigenvectors
  VectorXd psi;     // retained adjacency eigenvalues (SGA/SGLA)
  MatrixXd V;       // their eigenvectors
  std::vector<double> objective_trace;  // objective after every iteration, [0] = initial
  int iterations = 0;
  bool converged = false;
};

/// Sparsity regularizer matrix H = alpha (2I - 11^T); K = S + H.
MatrixXd sparsity_shift(int p, double alpha);

/// Shared warm start: w0 = max(L* pinv(S), 0) scaled to unit max entry,
/// all-ones if that degenerates.
VectorXd naive_warm_start(const MatrixXd& S, double rank_tol);

}  // namespace spgl
