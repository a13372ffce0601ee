// Symmetric eigendecomposition, generalized determinant, and Moore-Penrose
// pseudo-inverse.  Every solver goes through this wrapper so that ordering,
// sign conventions, and rank decisions are made in exactly one place.
#pragma once

#include <Eigen/Dense>

namespace spgl {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Relative cutoff below which an eigenvalue counts as numerically zero.
inline constexpr double kDefaultRankTol = 1e-9;

/// Eigenpairs of a symmetric matrix.  Eigenvalues ascending; column i of
/// eigenvectors pairs with eigenvalues(i).  Columns are sign-normalized so
/// that the largest-magnitude component of each is non-negative, which makes
/// repeated decompositions of identical inputs bit-reproducible.
struct SpectralPair {
  VectorXd eigenvalues;
  MatrixXd eigenvectors;
};

/// Decompose a symmetric matrix (symmetric within 1e-8, checked).
/// Throws std::invalid_argument on shape/symmetry violations and
/// std::runtime_error with condition diagnostics if the backend fails.
SpectralPair sym_eigen(const MatrixXd& M);

/// Generalized determinant: product of eigenvalues exceeding
/// rank_tol * max eigenvalue, accumulated in the log domain.
double gdet(const MatrixXd& M, double rank_tol = kDefaultRankTol);

/// Moore-Penrose pseudo-inverse by spectral inversion of the eigenvalues
/// above rank_tol * max |eigenvalue|.
MatrixXd pinv(const MatrixXd& M, double rank_tol = kDefaultRankTol);

}  // namespace spgl
