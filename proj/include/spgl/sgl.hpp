// Structured graph learning under Laplacian spectral constraints: block
// coordinate minimization of
//
//   -sum log(lambda_i) + tr(K Lw) + (beta/2) ||Lw - U Diag(lambda) U^T||_F^2
//
// over w >= 0, orthonormal U (p x q, q = p - k) and lambda in the ordered box.
// Covers k-component, connected-sparse (k = 1) and cospectral variants.
#pragma once

#include "spgl/solver.hpp"

namespace spgl {

struct SglState {
  int p = 0;
  VectorXd w;
  MatrixXd U;       // p x q orthonormal
  VectorXd lambda;  // q retained eigenvalues
  MatrixXd K;       // S + alpha (2I - 11^T)
  double beta = 0.0;
  LaplacianSpectralSet set;
};

double sgl_objective(const SglState& s);

/// One majorized projected-gradient step on the w block:
/// w+ = (w - grad/(2p))_+ with grad = L*(L w) - L*(U Diag(lambda) U^T - K/beta).
VectorXd sgl_update_w(const SglState& s);

/// Eigenvectors of L w for eigenvalues k+1..p (ascending), the k smallest dropped.
MatrixXd sgl_update_U(const SglState& s);

/// Ordered-box eigenvalue fit to d = diag(U^T (L w) U); returns the fixed
/// spectrum unchanged in cospectral mode.
VectorXd sgl_update_lambda(const SglState& s);

FitResult sgl_fit(const MatrixXd& S, const LaplacianSpectralSet& set, const SolverConfig& cfg);

}  // namespace spgl
