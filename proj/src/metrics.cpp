#include "spgl/metrics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spgl/operators.hpp"
#include "spgl/spectrum.hpp"

#include <json.hpp>

namespace spgl {

double relative_error(const MatrixXd& theta_hat, const MatrixXd& theta_true) {
  if (theta_hat.rows() != theta_true.rows() || theta_hat.cols() != theta_true.cols())
    throw std::invalid_argument("relative_error: shape mismatch");
  return (theta_hat - theta_true).norm() / theta_true.norm();
}

EvalReport f_score(const MatrixXd& theta_hat, const MatrixXd& theta_true, double threshold) {
  if (theta_hat.rows() != theta_true.rows())
    throw std::invalid_argument("f_score: shape mismatch");
  const int p = static_cast<int>(theta_true.rows());
  EvalReport rep;
  rep.edge_threshold = threshold;
  rep.relative_error = relative_error(theta_hat, theta_true);
  for (int j = 0; j < p; ++j)
    for (int i = j + 1; i < p; ++i) {
      const bool est = -theta_hat(i, j) >= threshold;
      const bool act = -theta_true(i, j) >= threshold;
      if (est && act)
        ++rep.tp;
      else if (est && !act)
        ++rep.fp;
      else if (!est && act)
        ++rep.fn;
    }
  const long denom = 2 * rep.tp + rep.fp + rep.fn;
  rep.f_score = denom > 0 ? 2.0 * rep.tp / denom : 1.0;
  return rep;
}

MatrixXd baseline_naive(const MatrixXd& S, double rank_tol) { return pinv(S, rank_tol); }

VectorXd baseline_qp(const MatrixXd& S, double tol, int max_iter, double rank_tol) {
  const int p = static_cast<int>(S.rows());
  const MatrixXd Sp = pinv(S, rank_tol);
  const VectorXd target = lap_adjoint(Sp);
  VectorXd w = VectorXd::Zero(edge_count(p));
  for (int t = 0; t < max_iter; ++t) {
    const VectorXd grad = lap_adjoint(lap_apply(p, w)) - target;
    const VectorXd w_next = (w - grad / (2.0 * p)).cwiseMax(0.0);
    const double rel = (w_next - w).norm() / std::max(w.norm(), 1e-10);
    w = w_next;
    if (rel < tol) break;
  }
  return w;
}

std::string to_json(const EvalReport& r) {
  nlohmann::json j{{"relative_error", r.relative_error},
                   {"f_score", r.f_score},
                   {"tp", r.tp},
                   {"fp", r.fp},
                   {"fn", r.fn},
                   {"edge_threshold", r.edge_threshold}};
  return j.dump();
}

}  // namespace spgl
