// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

namespace ft422 {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kStateTol = 1e-10;
inline constexpr double kPositivitySlack = 1e-9;

// Kronecker product with the first factor as the most significant index block.
Matrix kron(const Matrix& a, const Matrix& b);

// Embeds a k-qubit operator into an n-qubit register. targets[m] is the
// register qubit carrying local bit m of the operator's index space; register
// qubit i is bit i of a basis-state index (qubit 0 is the least significant).
Matrix embed(const Matrix& op, std::span<const int> targets, int num_qubits);

bool is_unitary(const Matrix& u, double tol = kUnitaryTol);
bool is_hermitian(const Matrix& m, double tol = kStateTol);

// max |a_ij - b_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);

// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Matrix& m);

// Trace distance (1/2)*||a - b||_1 between Hermitian matrices.
double trace_distance(const Matrix& a, const Matrix& b);

}  // namespace ft422
