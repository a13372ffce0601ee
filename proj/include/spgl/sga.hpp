// Connected bipartite graph learning under adjacency spectral constraints:
// block coordinate minimization of
//
//   -log det(Lw + J) + tr(K Lw) + (gamma/2) ||Aw - V Diag(psi) V^T||_F^2
//
// over w >= 0, orthonormal V (p x b, b = p - z) and an origin-symmetric
// ordered psi.  J = (1/p) 11^T closes the rank defect of a connected
// Laplacian, so det(Lw + J) equals its generalized determinant.
#pragma once

#include "spgl/solver.hpp"

namespace spgl {

struct SgaState {
  int p = 0;
  int z = 0;  // zero adjacency eigenvalues dropped from the middle
  VectorXd w;
  MatrixXd V;     // p x b orthonormal, b = p - z
  VectorXd psi;   // b retained eigenvalues, psi_i = -psi_{b+1-i}
  MatrixXd K;
  double gamma = 0.0;
  AdjacencySpectralSet set;
};

/// +infinity when Lw + J is not positive definite.
double sga_objective(const SgaState& s);

/// Majorized projected-gradient step on w.  The log-det curvature estimate
/// L2 = 2p / eigmin(Lw+J)^2 (capped at 1e6) may undershoot; step_scale > 1
/// halves the step for the backtracking fallback in sga_fit.
VectorXd sga_update_w(const SgaState& s, double step_scale = 1.0);

/// Eigenvectors of A w ordered by descending eigenvalue with the z middle
/// (smallest magnitude) columns dropped.
MatrixXd sga_update_V(const SgaState& s);

/// Origin-symmetric ordered fit to e = diag(V^T (A w) V).
VectorXd sga_update_psi(const SgaState& s);

FitResult sga_fit(const MatrixXd& S, const AdjacencySpectralSet& set, const SolverConfig& cfg);

}  // namespace spgl
