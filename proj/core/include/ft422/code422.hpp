// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <utility>

#include "ft422/pauli.hpp"
#include "ft422/state.hpp"

namespace ft422::code422 {

// Stabilizers, logical operators and destabilizers of the four-qubit
// error-detecting code on data qubits D1..D4 (register qubits 0..3).
struct CodeSpec {
  PauliString stabilizer_x;   // X1X2X3X4
  PauliString stabilizer_z;   // Z1Z2Z3Z4
  PauliString logical_x1;     // X1X3
  PauliString logical_x2;     // X1X2
  PauliString logical_z1;     // Z1Z2
  PauliString logical_z2;     // Z1Z3
  PauliString destab_z;       // Z4, flips s_z
  PauliString destab_x;       // X4, flips s_x
};

const CodeSpec& code_spec();

// Joint eigenstate label |L1 L2, s_z s_x>. S_x has eigenvalue (-1)^{s_z} and
// S_z has eigenvalue (-1)^{s_x} on the labeled state.
struct LogicalLabel {
  int l1 = 0;
  int l2 = 0;
  int s_z = 0;
  int s_x = 0;

  // Basis ordering (L1, L2, s_z, s_x) most-significant-first.
  int index() const { return (l1 << 3) | (l2 << 2) | (s_z << 1) | s_x; }
  static LogicalLabel from_index(int idx);
};

// The unit-norm joint eigenstate for a label. The s_z = s_x = 0 codewords are
// the canonical superpositions; other sectors are defined by destabilizer
// action Z4^{s_z} X4^{s_x} applied in that order (X4 first), which fixes all
// global phases.
QuantumState logical_basis_state(const LogicalLabel& label);

// The two computational bitstrings (by basis index) carrying the populations
// of a labeled eigenstate; independent of s_z.
std::pair<int, int> label_bitstrings(const LogicalLabel& label);

// 16x16 unitary whose columns are logical_basis_state ordered by label index.
Matrix logical_change_of_basis();

// Eigenstates of the logical X operators inside the codespace, labeled by the
// signs (g, p) = (value of X1X3, value of X1X2); these are H^x4 images of the
// codewords.
QuantumState xbasis_codeword(bool g_minus, bool p_minus);

// Projector onto syndrome sector (s_z, s_x) of the 4-qubit register.
Matrix sector_projector(int s_z, int s_x);

struct SectorInfo {
  double probability = 0.0;
  // Renormalized projection expressed in the logical basis (index L1*2 + L2);
  // absent when the sector probability vanishes.
  std::optional<Eigen::Matrix4cd> conditional;
};

// Per-sector probabilities tr(Pi rho) and conditional logical blocks;
// probabilities sum to 1. Sector array indexed by s_z*2 + s_x.
std::array<SectorInfo, 4> sector_probabilities(const QuantumState& state);

struct CodespaceMetrics {
  double acceptance = 0.0;              // tr(rho_00)
  std::optional<double> fidelity;       // <target| rho_00 |target> / tr(rho_00)
};

CodespaceMetrics codespace_metrics(const QuantumState& state, const LogicalLabel& target);
CodespaceMetrics codespace_metrics(const QuantumState& state, const QuantumState& target_state);

}  // namespace ft422::code422
