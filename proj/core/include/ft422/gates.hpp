// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ft422/linalg.hpp"

namespace ft422::gates {

Matrix identity(int num_qubits = 1);
Matrix x();
Matrix y();
Matrix z();
Matrix h();
Matrix s();
Matrix sdg();

// diag(1, e^{i theta})
Matrix zrot(double theta);
// exp(-i theta Y / 2)
Matrix yrot(double theta);

// Two-qubit CNOT; local qubit 0 is the control, local qubit 1 the target.
Matrix cnot();

}  // namespace ft422::gates
