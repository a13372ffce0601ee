#include "spgl/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spgl {

namespace {

void require_square(const MatrixXd& Y, const char* who) {
  if (Y.rows() != Y.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square, got " +
                                std::to_string(Y.rows()) + "x" + std::to_string(Y.cols()));
}

void require_length(int p, const VectorXd& w, const char* who) {
  if (p < 2) throw std::invalid_argument(std::string(who) + ": need p >= 2");
  if (w.size() != edge_count(p))
    throw std::invalid_argument(std::string(who) + ": weight vector has length " +
                                std::to_string(w.size()) + ", expected p(p-1)/2 = " +
                                std::to_string(edge_count(p)) + " for p = " + std::to_string(p));
}

// First linear index of column `col` in the lower-triangle layout.
inline std::int64_t col_offset(int p, int col) {
  return static_cast<std::int64_t>(col) * p - static_cast<std::int64_t>(col) * (col + 1) / 2;
}

}  // namespace

std::int64_t edge_index(int p, int row, int col) {
  if (col >= row || col < 0 || row >= p)
    throw std::invalid_argument("edge_index: need 0 <= col < row < p");
  return col_offset(p, col) + (row - col - 1);
}

EdgePair edge_pair(int p, std::int64_t k) {
  if (k < 0 || k >= edge_count(p)) throw std::invalid_argument("edge_pair: index out of range");
  // Invert col_offset: start from the continuous estimate, then fix up.
  int col = static_cast<int>(p - 0.5 - std::sqrt((p - 0.5) * (p - 0.5) - 2.0 * static_cast<double>(k)));
  if (col < 0) col = 0;
  while (col + 1 < p - 1 && col_offset(p, col + 1) <= k) ++col;
  while (col > 0 && col_offset(p, col) > k) --col;
  const int row = static_cast<int>(k - col_offset(p, col)) + col + 1;
  return {row, col};
}

void check_weight_vector(const WeightVector& w) {
  require_length(w.p, w.values, "WeightVector");
  for (std::int64_t k = 0; k < w.values.size(); ++k)
    if (!(w.values(k) >= 0.0))
      throw std::invalid_argument("WeightVector: entry " + std::to_string(k) +
                                  " is negative or NaN: " + std::to_string(w.values(k)));
}

MatrixXd lap_apply(int p, const VectorXd& w) {
  require_length(p, w, "lap_apply");
  MatrixXd M = MatrixXd::Zero(p, p);
  std::int64_t k = 0;
  for (int j = 0; j < p; ++j)
    for (int i = j + 1; i < p; ++i, ++k) {
      M(i, j) = -w(k);
      M(j, i) = -w(k);
      M(i, i) += w(k);
      M(j, j) += w(k);
    }
  return M;
}

VectorXd lap_adjoint(const MatrixXd& Y) {
  require_square(Y, "lap_adjoint");
  const int p = static_cast<int>(Y.rows());
  VectorXd v(edge_count(p));
  std::int64_t k = 0;
  for (int j = 0; j < p; ++j)
    for (int i = j + 1; i < p; ++i, ++k) v(k) = Y(i, i) - Y(i, j) - Y(j, i) + Y(j, j);
  return v;
}

MatrixXd adj_apply(int p, const VectorXd& w) {
  require_length(p, w, "adj_apply");
  MatrixXd M = MatrixXd::Zero(p, p);
  std::int64_t k = 0;
  for (int j = 0; j < p; ++j)
    for (int i = j + 1; i < p; ++i, ++k) {
      M(i, j) = w(k);
      M(j, i) = w(k);
    }
  return M;
}

VectorXd adj_adjoint(const MatrixXd& Y) {
  require_square(Y, "adj_adjoint");
  const int p = static_cast<int>(Y.rows());
  VectorXd v(edge_count(p));
  std::int64_t k = 0;
  for (int j = 0; j < p; ++j)
    for (int i = j + 1; i < p; ++i, ++k) v(k) = Y(i, j) + Y(j, i);
  return v;
}

std::pair<double, double> operator_norms(int p) {
  if (p < 2) throw std::invalid_argument("operator_norms: need p >= 2");
  return {std::sqrt(2.0 * p), std::sqrt(2.0)};
}

}  // namespace spgl
