// SPDX-License-Identifier: Apache-2.0
#include "ft422/code422.hpp"

#include <cmath>
#include <stdexcept>

#include "ft422/gates.hpp"

namespace ft422::code422 {

namespace {
constexpr int kDataQubits = 4;
constexpr int kDim = 16;

// Codeword bitstring pairs by (L1, L2), as basis indices with qubit i = bit i.
constexpr int kCodewordBits[4][2] = {
    {0b0000, 0b1111},  // |00>: |0000> + |1111>
    {0b0011, 0b1100},  // |01>: |1100> + |0011>  (D1=bit0)
    {0b0101, 0b1010},  // |10>: |1010> + |0101>
    {0b0110, 0b1001},  // |11>: |0110> + |1001>
};
}  // namespace

const CodeSpec& code_spec() {
  static const CodeSpec spec{
      PauliString::parse(kDataQubits, "X1X2X3X4"),
      PauliString::parse(kDataQubits, "Z1Z2Z3Z4"),
      PauliString::parse(kDataQubits, "X1X3"),
      PauliString::parse(kDataQubits, "X1X2"),
      PauliString::parse(kDataQubits, "Z1Z2"),
      PauliString::parse(kDataQubits, "Z1Z3"),
      PauliString::parse(kDataQubits, "Z4"),
      PauliString::parse(kDataQubits, "X4"),
  };
  return spec;
}

LogicalLabel LogicalLabel::from_index(int idx) {
  if (idx < 0 || idx >= kDim) throw std::out_of_range("LogicalLabel: index out of range");
  return {(idx >> 3) & 1, (idx >> 2) & 1, (idx >> 1) & 1, idx & 1};
}

QuantumState logical_basis_state(const LogicalLabel& label) {
  Vector v = Vector::Zero(kDim);
  const double r = 1.0 / std::sqrt(2.0);
  const int a = kCodewordBits[(label.l1 << 1) | label.l2][0];
  const int b = kCodewordBits[(label.l1 << 1) | label.l2][1];
  v(a) = r;
  v(b) = r;
  QuantumState s = QuantumState::pure(kDataQubits, v);
  if (label.s_x) s = apply_unitary(s, UnitarySpec(gates::x(), {3}));
  if (label.s_z) s = apply_unitary(s, UnitarySpec(gates::z(), {3}));
  return s;
}

std::pair<int, int> label_bitstrings(const LogicalLabel& label) {
  int a = kCodewordBits[(label.l1 << 1) | label.l2][0];
  int b = kCodewordBits[(label.l1 << 1) | label.l2][1];
  if (label.s_x) {
    a ^= 0b1000;
    b ^= 0b1000;
  }
  return {a, b};
}

Matrix logical_change_of_basis() {
  Matrix u(kDim, kDim);
  for (int idx = 0; idx < kDim; ++idx)
    u.col(idx) = logical_basis_state(LogicalLabel::from_index(idx)).amplitudes();
  return u;
}

QuantumState xbasis_codeword(bool g_minus, bool p_minus) {
  // H^x4 maps |L1 L2, 00> to the X-basis state with g = (-1)^{L2}, p = (-1)^{L1}.
  const LogicalLabel label{p_minus ? 1 : 0, g_minus ? 1 : 0, 0, 0};
  QuantumState s = logical_basis_state(label);
  for (int q = 0; q < kDataQubits; ++q) s = apply_unitary(s, UnitarySpec(gates::h(), {q}));
  return s;
}

Matrix sector_projector(int s_z, int s_x) {
  const Matrix id = Matrix::Identity(kDim, kDim);
  const Matrix sx = code_spec().stabilizer_x.matrix();
  const Matrix sz = code_spec().stabilizer_z.matrix();
  const double fx = s_z ? -1.0 : 1.0;
  const double fz = s_x ? -1.0 : 1.0;
  return 0.25 * (id + fx * sx) * (id + fz * sz);
}

std::array<SectorInfo, 4> sector_probabilities(const QuantumState& state) {
  if (state.num_qubits() != kDataQubits)
    throw std::invalid_argument("sector_probabilities: expected a 4-qubit state");
  const Matrix rho = state.density_matrix();
  std::array<SectorInfo, 4> out;
  for (int s_z = 0; s_z < 2; ++s_z) {
    for (int s_x = 0; s_x < 2; ++s_x) {
      SectorInfo& info = out[static_cast<std::size_t>(s_z * 2 + s_x)];
      // Logical-basis matrix elements <L1L2,s | rho | L1'L2',s>.
      Eigen::Matrix4cd block;
      for (int l = 0; l < 4; ++l) {
        const LogicalLabel row{(l >> 1) & 1, l & 1, s_z, s_x};
        const Vector bra = logical_basis_state(row).amplitudes();
        for (int m = 0; m < 4; ++m) {
          const LogicalLabel col{(m >> 1) & 1, m & 1, s_z, s_x};
          const Vector ket = logical_basis_state(col).amplitudes();
          block(l, m) = (bra.adjoint() * rho * ket)(0, 0);
        }
      }
      info.probability = block.trace().real();
      if (info.probability > 1e-12) {
        info.conditional = block / info.probability;
      }
    }
  }
  return out;
}

CodespaceMetrics codespace_metrics(const QuantumState& state, const LogicalLabel& target) {
  return codespace_metrics(state, logical_basis_state(target));
}

CodespaceMetrics codespace_metrics(const QuantumState& state, const QuantumState& target_state) {
  if (state.num_qubits() != kDataQubits || target_state.num_qubits() != kDataQubits)
    throw std::invalid_argument("codespace_metrics: expected 4-qubit states");
  const Matrix rho = state.density_matrix();
  const Matrix pi = sector_projector(0, 0);
  const Matrix rho00 = pi * rho * pi;
  CodespaceMetrics m;
  m.acceptance = rho00.trace().real();
  if (m.acceptance >= 1e-12) {
    const Vector t = target_state.amplitudes();
    m.fidelity = ((t.adjoint() * rho00 * t)(0, 0)).real() / m.acceptance;
  }
  return m;
}

}  // namespace ft422::code422
