// SPDX-License-Identifier: Apache-2.0
#include "ft422/gates.hpp"

#include <cmath>

namespace ft422::gates {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Matrix identity(int num_qubits) {
  const int dim = 1 << num_qubits;
  return Matrix::Identity(dim, dim);
}

Matrix x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix y() {
  Matrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Matrix z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix h() {
  Matrix m(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return m;
}

Matrix s() {
  Matrix m(2, 2);
  m << 1, 0, 0, kI;
  return m;
}

Matrix sdg() {
  Matrix m(2, 2);
  m << 1, 0, 0, -kI;
  return m;
}

Matrix zrot(double theta) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = std::exp(kI * theta);
  return m;
}

Matrix yrot(double theta) {
  Matrix m(2, 2);
  const double c = std::cos(theta / 2.0);
  const double sn = std::sin(theta / 2.0);
  m << c, -sn, sn, c;
  return m;
}

Matrix cnot() {
  // Basis index = control + 2*target.
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;  // |c=0,t=0>
  m(2, 2) = 1;  // |c=0,t=1>
  m(3, 1) = 1;  // |c=1,t=0> -> |c=1,t=1>
  m(1, 3) = 1;  // |c=1,t=1> -> |c=1,t=0>
  return m;
}

}  // namespace ft422::gates
