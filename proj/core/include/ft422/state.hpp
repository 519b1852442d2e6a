// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ft422/linalg.hpp"
#include "ft422/rng.hpp"

namespace ft422 {

inline constexpr int kMaxQubits = 5;

// Exact state of a small qubit register. The density matrix is the canonical
// representation; a pure-state vector is kept as long as only unitaries have
// been applied. Basis-state index convention: register qubit i is bit i of the
// index (qubit 0 least significant). For the five-qubit device register the
// order is (D1, D2, D3, D4, S1) = qubits (0, 1, 2, 3, 4), and character i of a
// printed bitstring label is the outcome of qubit i.
class QuantumState {
 public:
  // |0...0> on num_qubits qubits (pure representation).
  explicit QuantumState(int num_qubits);

  static QuantumState pure(int num_qubits, const Vector& amplitudes);
  static QuantumState basis_state(int num_qubits, int index);
  static QuantumState density(int num_qubits, const Matrix& rho);

  int num_qubits() const { return num_qubits_; }
  int dim() const { return 1 << num_qubits_; }
  bool is_pure_representation() const { return pure_; }

  // Density matrix view (materialized from the vector on demand).
  Matrix density_matrix() const;
  // Pure amplitudes; throws if the state has been densified.
  const Vector& amplitudes() const;

  // Drops the pure fast path.
  void densify();

  double trace() const;

  // Checks trace one, Hermiticity, and positivity up to numerical slack;
  // throws std::runtime_error naming the violated invariant.
  void validate() const;

  std::string bitstring_label(int index) const;

 private:
  QuantumState() = default;
  int num_qubits_ = 0;
  bool pure_ = false;
  Vector vec_;
  Matrix rho_;

  friend QuantumState apply_unitary(const QuantumState&, const struct UnitarySpec&);
  friend QuantumState apply_channel(const QuantumState&, const struct KrausChannel&);
  friend QuantumState dephase_qubit(const QuantumState&, int);
};

// A k-qubit unitary (k = 1 or 2) with its register targets. targets[m] carries
// local bit m of the gate matrix index space.
struct UnitarySpec {
  Matrix matrix;
  std::vector<int> targets;

  UnitarySpec(Matrix m, std::vector<int> t);
};

// Kraus channel on one or two qubits; operators must satisfy completeness
// sum A_i^dag A_i = I within 1e-12.
struct KrausChannel {
  std::vector<Matrix> operators;
  std::vector<int> targets;

  KrausChannel(std::vector<Matrix> ops, std::vector<int> t);
};

// rho -> U rho U^dag on the target subsystem (vector path: v -> U v).
QuantumState apply_unitary(const QuantumState& state, const UnitarySpec& u);

// rho -> sum_i A_i rho A_i^dag. Densifies a pure state.
QuantumState apply_channel(const QuantumState& state, const KrausChannel& ch);

// Projective measurement in the computational basis without recording the
// outcome: zeroes coherences between the 0 and 1 subspaces of one qubit.
QuantumState dephase_qubit(const QuantumState& state, int qubit);

// Diagonal of rho in the computational basis, indexed by basis state.
std::vector<double> measure_probabilities(const QuantumState& state);

// i.i.d. samples of full-register outcomes. Deterministic in (seed, shot
// index) regardless of how shots are partitioned across lanes.
std::vector<std::uint32_t> sample_shots(const QuantumState& state, int shots, std::uint64_t seed);

// Inverse-CDF draw from an explicit probability table (used by shot samplers).
std::uint32_t sample_outcome(const std::vector<double>& probs, double u);

// Projects one qubit onto |value> and renormalizes; returns the outcome
// probability together with the conditional state. Throws if the outcome
// probability vanishes.
std::pair<double, QuantumState> project_qubit(const QuantumState& state, int qubit, int value);

// Partial trace over one qubit.
QuantumState trace_out_qubit(const QuantumState& state, int qubit);

}  // namespace ft422
