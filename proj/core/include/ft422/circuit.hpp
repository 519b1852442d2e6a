// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ft422/state.hpp"

namespace ft422 {

// Physical register for the preparation experiments: data qubits D1..D4 on
// indices 0..3, syndrome qubit S1 on index 4.
inline constexpr int kD1 = 0;
inline constexpr int kD2 = 1;
inline constexpr int kD3 = 2;
inline constexpr int kD4 = 3;
inline constexpr int kS1 = 4;
inline constexpr int kRegisterQubits = 5;

const char* qubit_name(int index);
int qubit_index(const std::string& name);

enum class MeasureFrame { z, x };

struct CircuitOp {
  enum class Kind { gate, channel, measure, barrier };

  Kind kind = Kind::barrier;
  std::string name;
  std::vector<int> targets;
  std::vector<std::pair<std::string, double>> params;
  Matrix matrix;               // gate
  std::vector<Matrix> kraus;   // channel
  MeasureFrame frame = MeasureFrame::z;

  static CircuitOp gate(std::string name, Matrix m, std::vector<int> targets,
                        std::vector<std::pair<std::string, double>> params = {});
  static CircuitOp channel(std::string name, std::vector<Matrix> kraus, std::vector<int> targets,
                           std::vector<std::pair<std::string, double>> params = {});
  static CircuitOp measure(int qubit, MeasureFrame frame);
  static CircuitOp barrier(std::string name);
};

// Ordered list of timed operations over the named register. Op position in
// the list is the logical timestamp; named barriers mark insertion sites.
struct Circuit {
  int num_qubits = kRegisterQubits;
  std::vector<CircuitOp> ops;

  // Index of the barrier with the given name; -1 when absent.
  int find_barrier(const std::string& name) const;
  // Indices of gates with the given name, in order.
  std::vector<int> find_gates(const std::string& name) const;

  void insert_after(int position, CircuitOp op);

  // One op per line: kind/name, targets, params.
  std::string serialize() const;
};

struct RunOptions {
  // Stop before the first measurement op on a data qubit, leaving the
  // prepared register (with the syndrome measurement already applied) intact.
  bool stop_before_data_measurement = false;
};

// Executes the circuit on |0...0>. Measurements are applied as projective
// dephasing (X-frame measurements rotate by H first), so the diagonal of the
// final state is the joint readout distribution over (c1..c4, c_s) with basis
// index bit i = qubit i.
QuantumState run_circuit(const Circuit& circuit, const RunOptions& options = {});

// Probability and conditional 4-qubit data state given the syndrome qubit
// outcome, taken after the syndrome measurement but before data readout.
std::pair<double, QuantumState> conditional_data_state(const QuantumState& register_state,
                                                       int syndrome_value);

}  // namespace ft422
