// Linear operators mapping edge-weight vectors to Laplacian / adjacency
// matrices, together with their adjoints and operator norms.
//
// A weighted undirected graph on p nodes with no self loops has
// m = p(p-1)/2 free weights.  We store them in a vector w indexed by the
// lower triangle in column-major order: the pair (i, j) with i > j
// (1-based) maps to k = i - j + (j-1)(2p-j)/2.  All public indices in
// this header are 0-based; the bijection below is the single place where
// the layout is defined.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

namespace spgl {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Number of free edge weights for a p-node graph.
inline std::int64_t edge_count(int p) {
  return static_cast<std::int64_t>(p) * (p - 1) / 2;
}

/// Edge endpoints, 0-based, always row > col.
struct EdgePair {
  int row;
  int col;
};

/// Linear index of the pair (row, col), row > col, both 0-based.
std::int64_t edge_index(int p, int row, int col);

/// Inverse of edge_index.
EdgePair edge_pair(int p, std::int64_t k);

/// Weight vector together with its node count.  values(k) is the weight of
/// edge_pair(p, k); all entries must be non-negative for a valid graph.
struct WeightVector {
  int p = 0;
  VectorXd values;
};

/// Throws std::invalid_argument unless w has length p(p-1)/2 and w >= 0.
void check_weight_vector(const WeightVector& w);

/// Laplacian operator: off-diagonal (i,j) = -w_k, diagonal = row degree.
/// Row sums are zero by construction; the result is PSD whenever w >= 0.
MatrixXd lap_apply(int p, const VectorXd& w);

/// Adjoint of lap_apply: [L* Y]_k = y_ii - y_ij - y_ji + y_jj.
VectorXd lap_adjoint(const MatrixXd& Y);

/// Adjacency operator: off-diagonal (i,j) = +w_k, zero diagonal.
MatrixXd adj_apply(int p, const VectorXd& w);

/// Adjoint of adj_apply: [A* Y]_k = y_ij + y_ji.
VectorXd adj_adjoint(const MatrixXd& Y);

/// Operator norms (sup of ||Op w||_F over unit w): sqrt(2p) for the
/// Laplacian operator and sqrt(2) for the adjacency operator.  Their
/// squares 2p and 2 are the Lipschitz constants used by the solvers.
std::pair<double, double> operator_norms(int p);

}  // namespace spgl
