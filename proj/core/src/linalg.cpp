// SPDX-License-Identifier: Apache-2.0
#include "ft422/linalg.hpp"

#include <stdexcept>

namespace ft422 {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix embed(const Matrix& op, std::span<const int> targets, int num_qubits) {
  const int k = static_cast<int>(targets.size());
  const int local_dim = 1 << k;
  if (op.rows() != local_dim || op.cols() != local_dim)
    throw std::invalid_argument("embed: operator dimension does not match target count");
  for (int i = 0; i < k; ++i) {
    if (targets[i] < 0 || targets[i] >= num_qubits)
      throw std::out_of_range("embed: target qubit out of range");
    for (int j = i + 1; j < k; ++j)
      if (targets[i] == targets[j]) throw std::invalid_argument("embed: duplicate target qubit");
  }

  const int dim = 1 << num_qubits;
  int target_mask = 0;
  for (int t : targets) target_mask |= 1 << t;

  Matrix out = Matrix::Zero(dim, dim);
  for (int row = 0; row < dim; ++row) {
    int local_row = 0;
    for (int m = 0; m < k; ++m) local_row |= ((row >> targets[m]) & 1) << m;
    const int rest = row & ~target_mask;
    for (int local_col = 0; local_col < local_dim; ++local_col) {
      int col = rest;
      for (int m = 0; m < k; ++m) col |= ((local_col >> m) & 1) << targets[m];
      out(row, col) = op(local_row, local_col);
    }
  }
  return out;
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double trace_distance(const Matrix& a, const Matrix& b) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace ft422
