// SPDX-License-Identifier: Apache-2.0
#include "ft422/circuit.hpp"

#include <cstdio>
#include <stdexcept>

#include "ft422/gates.hpp"

namespace ft422 {

namespace {
constexpr const char* kQubitNames[kRegisterQubits] = {"D1", "D2", "D3", "D4", "S1"};
}

const char* qubit_name(int index) {
  if (index < 0 || index >= kRegisterQubits) throw std::out_of_range("qubit_name: bad index");
  return kQubitNames[index];
}

int qubit_index(const std::string& name) {
  for (int i = 0; i < kRegisterQubits; ++i)
    if (name == kQubitNames[i]) return i;
  throw std::invalid_argument("qubit_index: unknown qubit " + name);
}

CircuitOp CircuitOp::gate(std::string name, Matrix m, std::vector<int> targets,
                          std::vector<std::pair<std::string, double>> params) {
  CircuitOp op;
  op.kind = Kind::gate;
  op.name = std::move(name);
  op.matrix = std::move(m);
  op.targets = std::move(targets);
  op.params = std::move(params);
  return op;
}

CircuitOp CircuitOp::channel(std::string name, std::vector<Matrix> kraus, std::vector<int> targets,
                             std::vector<std::pair<std::string, double>> params) {
  CircuitOp op;
  op.kind = Kind::channel;
  op.name = std::move(name);
  op.kraus = std::move(kraus);
  op.targets = std::move(targets);
  op.params = std::move(params);
  return op;
}

CircuitOp CircuitOp::measure(int qubit, MeasureFrame frame) {
  CircuitOp op;
  op.kind = Kind::measure;
  op.name = "measure";
  op.targets = {qubit};
  op.frame = frame;
  return op;
}

CircuitOp CircuitOp::barrier(std::string name) {
  CircuitOp op;
  op.kind = Kind::barrier;
  op.name = std::move(name);
  return op;
}

int Circuit::find_barrier(const std::string& name) const {
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (ops[i].kind == CircuitOp::Kind::barrier && ops[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> Circuit::find_gates(const std::string& name) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (ops[i].kind == CircuitOp::Kind::gate && ops[i].name == name) out.push_back(static_cast<int>(i));
  return out;
}

void Circuit::insert_after(int position, CircuitOp op) {
  if (position < -1 || position >= static_cast<int>(ops.size()))
    throw std::out_of_range("Circuit::insert_after: bad position");
  ops.insert(ops.begin() + position + 1, std::move(op));
}

std::string Circuit::serialize() const {
  std::string out;
  char buf[64];
  for (const CircuitOp& op : ops) {
    switch (op.kind) {
      case CircuitOp::Kind::gate:
        out += "gate " + op.name;
        break;
      case CircuitOp::Kind::channel:
        out += "channel " + op.name;
        break;
      case CircuitOp::Kind::measure:
        out += "measure";
        break;
      case CircuitOp::Kind::barrier:
        out += "barrier " + op.name;
        break;
    }
    for (int t : op.targets) {
      out += ' ';
      out += qubit_name(t);
    }
    for (const auto& [key, value] : op.params) {
      std::snprintf(buf, sizeof buf, " %s=%.9g", key.c_str(), value);
      out += buf;
    }
    if (op.kind == CircuitOp::Kind::measure)
      out += op.frame == MeasureFrame::z ? " frame=Z" : " frame=X";
    out += '\n';
  }
  return out;
}

QuantumState run_circuit(const Circuit& circuit, const RunOptions& options) {
  QuantumState state(circuit.num_qubits);
  for (const CircuitOp& op : circuit.ops) {
    switch (op.kind) {
      case CircuitOp::Kind::gate:
        state = apply_unitary(state, UnitarySpec(op.matrix, op.targets));
        break;
      case CircuitOp::Kind::channel:
        state = apply_channel(state, KrausChannel(op.kraus, op.targets));
        break;
      case CircuitOp::Kind::measure: {
        const int q = op.targets.at(0);
        if (options.stop_before_data_measurement && q != kS1) return state;
        if (op.frame == MeasureFrame::x)
          state = apply_unitary(state, UnitarySpec(gates::h(), {q}));
        state = dephase_qubit(state, q);
        break;
      }
      case CircuitOp::Kind::barrier:
        break;
    }
  }
  return state;
}

std::pair<double, QuantumState> conditional_data_state(const QuantumState& register_state,
                                                       int syndrome_value) {
  if (register_state.num_qubits() != kRegisterQubits)
    throw std::invalid_argument("conditional_data_state: expected the 5-qubit register");
  auto [prob, projected] = project_qubit(register_state, kS1, syndrome_value);
  return {prob, trace_out_qubit(projected, kS1)};
}

}  // namespace ft422
