// Joint Laplacian + adjacency spectral constraints (flagship use:
// k-component bipartite graphs).  Block coordinate minimization of
//
//   -sum log(lambda_i) + tr(K Lw) + (beta/2)  ||Lw - U Diag(lambda) U^T||_F^2
//                                + (gamma/2) ||Aw - V Diag(psi) V^T||_F^2
//
// cycling w -> U -> V -> lambda -> psi.  The (U, lambda) and (V, psi) pairs
// read only w, so they can run in parallel with bit-identical results.
#pragma once

#include "spgl/solver.hpp"

namespace spgl {

struct SglaState {
  int p = 0;
  int z = 0;
  VectorXd w;
  MatrixXd U;
  VectorXd lambda;
  MatrixXd V;
  VectorXd psi;
  MatrixXd K;
  double beta = 0.0;
  double gamma = 0.0;
  LaplacianSpectralSet lap_set;
  AdjacencySpectralSet adj_set;
};

double sgla_objective(const SglaState& s);

/// w+ = (w - (grad_f1 + grad_f2) / (2 p beta + 2 gamma))_+ where f1/f2 are the
/// beta- and gamma-scaled quadratic halves of the objective.
VectorXd sgla_update_w(const SglaState& s);

FitResult sgla_fit(const MatrixXd& S, const LaplacianSpectralSet& lap_set,
                   const AdjacencySpectralSet& adj_set, const SolverConfig& cfg);

}  // namespace spgl
