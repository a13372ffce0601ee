// Ordered spectral subproblems shared by the solvers:
//
//  * reg_isotonic     minimizes  -sum log(x_i) + (beta/2) ||x - d||^2  over
//                     the box-ordered chain  c1 <= x_1 <= ... <= x_q <= c2,
//                     by pooling adjacent violating blocks with the closed
//                     form block value (dbar + sqrt(dbar^2 + 4/beta)) / 2
//                     and clamping at the bounds.  At most q+1 sweeps.
//
//  * isotonic_ls      plain least-squares fit under the same chain (no log
//                     term): pool-adjacent-violators followed by clipping.
//
//  * sym_isotonic_psi least-squares projection of a length-b vector onto the
//                     origin-symmetric descending chain used for adjacency
//                     half-spectra:  upper >= x_1 >= ... >= x_{b/2} >= lower,
//                     x_{b+1-i} = -x_i.
//
//  * oracle_solve     independent reference solver (exhaustive enumeration
//                     of consecutive level-set partitions, block values by
//                     bisection).  Exact but exponential in q; verification
//                     use only.
#pragma once

#include <Eigen/Dense>

namespace spgl {

using Eigen::VectorXd;

/// Ascending chain bounds, 0 < c1 <= c2.
struct OrderedBox {
  double c1 = 1e-6;
  double c2 = 1e6;
};

/// Descending origin-symmetric chain bounds for adjacency half-spectra,
/// upper >= lower >= 0.
struct PsiBox {
  double upper = 1e6;
  double lower = 1e-6;
};

struct IsotonicResult {
  VectorXd values;
  int sweeps = 0;  // pooling sweeps performed; bounded by q+1
};

VectorXd reg_isotonic(const VectorXd& d, double beta, const OrderedBox& box);
IsotonicResult reg_isotonic_traced(const VectorXd& d, double beta, const OrderedBox& box);

VectorXd isotonic_ls(const VectorXd& targets, double lo, double hi);

/// e has even length b.  Returns the full length-b vector; the first half is
/// the box-ordered fit to the anti-symmetrized targets (e_i - e_{b+1-i})/2,
/// the second half mirrors it with flipped sign.
VectorXd sym_isotonic_psi(const VectorXd& e, const PsiBox& box);

/// Reference solver for the reg_isotonic program (with_log_term = true) or
/// the plain box-ordered least squares (with_log_term = false).
VectorXd oracle_solve(const VectorXd& d, double beta, const OrderedBox& box, bool with_log_term);

}  // namespace spgl
