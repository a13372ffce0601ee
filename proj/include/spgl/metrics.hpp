// Evaluation metrics (relative Frobenius error, edge-recovery F-score) and
// the two reference baselines: the pseudo-inverse of the sample covariance
// and the non-negative quadratic fit of a Laplacian to it.
#pragma once

#include <Eigen/Dense>
#include <string>

namespace spgl {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct EvalReport {
  double relative_error = 0.0;
  double f_score = 0.0;
  long tp = 0;
  long fp = 0;
  long fn = 0;
  double edge_threshold = 0.1;
};

/// ||theta_hat - theta_true||_F / ||theta_true||_F.
double relative_error(const MatrixXd& theta_hat, const MatrixXd& theta_true);

/// Edge-recovery report; an edge exists when -theta_ij >= threshold.  Both
/// F-score and relative error are filled in.  With no edges on either side
/// the F-score is defined as 1 (perfect agreement).
EvalReport f_score(const MatrixXd& theta_hat, const MatrixXd& theta_true, double threshold = 0.1);

/// Naive baseline: pseudo-inverse of the sample covariance matrix.
MatrixXd baseline_naive(const MatrixXd& S, double rank_tol = 1e-9);

/// QP baseline: w = argmin_{w >= 0} ||S^+ - L w||_F^2 by projected gradient
/// with the exact Lipschitz step 1/(2p).
VectorXd baseline_qp(const MatrixXd& S, double tol = 1e-6, int max_iter = 20000,
                     double rank_tol = 1e-9);

/// Flat snake_case JSON object.
std::string to_json(const EvalReport& r);

}  // namespace spgl
