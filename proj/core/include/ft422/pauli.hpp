// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ft422/linalg.hpp"

namespace ft422 {

// n-qubit Pauli operator in symplectic form: X^x Z^z per qubit (phase-free;
// products track Hermitian representatives up to sign via matrix realization
// when needed).
struct PauliString {
  int num_qubits = 0;
  unsigned x_mask = 0;
  unsigned z_mask = 0;

  static PauliString identity(int n) { return {n, 0u, 0u}; }
  // spec like "X1X3" or "Z1Z2Z3Z4"; qubit numbers are 1-based.
  static PauliString parse(int n, const std::string& spec);

  bool commutes_with(const PauliString& other) const;
  int weight() const;
  PauliString times(const PauliString& other) const;  // phase dropped

  // Matrix realization with Y = iXZ convention (Hermitian for genuine Y).
  Matrix matrix() const;

  std::string label() const;
};

}  // namespace ft422
