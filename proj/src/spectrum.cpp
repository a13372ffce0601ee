#include "spgl/spectrum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spgl {

namespace {

constexpr double kSymmetryTol = 1e-8;

void fix_signs(MatrixXd& V) {
  for (Eigen::Index c = 0; c < V.cols(); ++c) {
    Eigen::Index imax = 0;
    V.col(c).cwiseAbs().maxCoeff(&imax);
    if (V(imax, c) < 0.0) V.col(c) = -V.col(c);
  }
}

}  // namespace

SpectralPair sym_eigen(const MatrixXd& M) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("sym_eigen: matrix must be square");
  const double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol) {
    std::ostringstream os;
    os << "sym_eigen: matrix is not symmetric (max |M - M^T| = " << asym << ")";
    throw std::invalid_argument(os.str());
  }
  // Symmetrize so identical logical inputs hit identical bit patterns.
  const MatrixXd A = 0.5 * (M + M.transpose());
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(A);
  if (es.info() != Eigen::Success) {
    std::ostringstream os;
    os << "sym_eigen: backend failed to converge (p = " << M.rows()
       << ", ||M||_F = " << M.norm() << ", max |M_ij| = " << M.cwiseAbs().maxCoeff() << ")";
    throw std::runtime_error(os.str());
  }
  SpectralPair out{es.eigenvalues(), es.eigenvectors()};
  fix_signs(out.eigenvectors);
  return out;
}

double gdet(const MatrixXd& M, double rank_tol) {
  const SpectralPair ep = sym_eigen(M);
  const double emax = ep.eigenvalues.cwiseAbs().maxCoeff();
  const double cut = rank_tol * emax;
  double log_acc = 0.0;
  for (Eigen::Index i = 0; i < ep.eigenvalues.size(); ++i) {
    const double e = ep.eigenvalues(i);
    if (e > cut) log_acc += std::log(e);
  }
  return std::exp(log_acc);
}

MatrixXd pinv(const MatrixXd& M, double rank_tol) {
  const SpectralPair ep = sym_eigen(M);
  const double emax = ep.eigenvalues.cwiseAbs().maxCoeff();
  const double cut = rank_tol * emax;
  VectorXd inv = VectorXd::Zero(ep.eigenvalues.size());
  for (Eigen::Index i = 0; i < ep.eigenvalues.size(); ++i)
    if (std::abs(ep.eigenvalues(i)) > cut) inv(i) = 1.0 / ep.eigenvalues(i);
  return ep.eigenvectors * inv.asDiagonal() * ep.eigenvectors.transpose();
}

}  // namespace spgl
