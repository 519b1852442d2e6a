// SPDX-License-Identifier: Apache-2.0
#include "ft422/prep.hpp"

#include <stdexcept>

#include "ft422/gates.hpp"

namespace ft422 {

namespace {

const PauliString& pr_pauli(const PrepTarget& target) {
  // Z basis: Xbar_L1^first * Xbar_L2^second. X basis (after H^x4):
  // Zbar_L1^first * Zbar_L2^second.
  static const PauliString none = PauliString::identity(4);
  static const PauliString x_l1 = PauliString::parse(4, "X1X3");
  static const PauliString x_l2 = PauliString::parse(4, "X1X2");
  static const PauliString z_l1 = PauliString::parse(4, "Z1Z2");
  static const PauliString z_l2 = PauliString::parse(4, "Z1Z3");
  static const PauliString x_both = x_l1.times(x_l2);  // X2X3
  static const PauliString z_both = z_l1.times(z_l2);  // Z2Z3
  const bool a = target.first != 0;
  const bool b = target.second != 0;
  if (target.basis == PrepTarget::Basis::z) {
    if (a && b) return x_both;
    if (a) return x_l1;
    if (b) return x_l2;
    return none;
  }
  if (a && b) return z_both;
  if (a) return z_l1;
  if (b) return z_l2;
  return none;
}

void append_pauli_gates(Circuit& circuit, const PauliString& p) {
  for (int q = 0; q < p.num_qubits; ++q) {
    const bool xb = (p.x_mask >> q) & 1;
    const bool zb = (p.z_mask >> q) & 1;
    if (xb && zb)
      circuit.ops.push_back(CircuitOp::gate("y", gates::y(), {q}));
    else if (xb)
      circuit.ops.push_back(CircuitOp::gate("x", gates::x(), {q}));
    else if (zb)
      circuit.ops.push_back(CircuitOp::gate("z", gates::z(), {q}));
  }
}

}  // namespace

PrepTarget PrepTarget::parse(const std::string& text) {
  if (text.size() != 4 || text[1] != ':')
    throw std::invalid_argument("PrepTarget: expected like Z:11 or X:+-, got " + text);
  PrepTarget t;
  if (text[0] == 'Z' || text[0] == 'z')
    t.basis = Basis::z;
  else if (text[0] == 'X' || text[0] == 'x')
    t.basis = Basis::x;
  else
    throw std::invalid_argument("PrepTarget: basis must be Z or X");
  auto decode = [&](char c) {
    if (t.basis == Basis::z) {
      if (c == '0') return 0;
      if (c == '1') return 1;
      throw std::invalid_argument("PrepTarget: Z-basis labels are 0/1");
    }
    if (c == '+') return 0;
    if (c == '-') return 1;
    throw std::invalid_argument("PrepTarget: X-basis labels are +/-");
  };
  t.first = decode(text[2]);
  t.second = decode(text[3]);
  return t;
}

std::string PrepTarget::to_string() const {
  std::string s = basis == Basis::z ? "Z:" : "X:";
  if (basis == Basis::z) {
    s += first ? '1' : '0';
    s += second ? '1' : '0';
  } else {
    s += first ? '-' : '+';
    s += second ? '-' : '+';
  }
  return s;
}

int PrepTarget::expected_protected_parity() const {
  // Z basis: c1^c2 reads Zbar_L1 = (-1)^{L1}. X basis: the X-frame parity
  // c1^c2 reads Xbar_L2, whose sign is the protected (second) label.
  return basis == Basis::z ? first : second;
}

int PrepTarget::expected_gauge_parity() const {
  return basis == Basis::z ? second : first;
}

QuantumState PrepTarget::ideal_state() const {
  if (basis == Basis::z)
    return code422::logical_basis_state({first, second, 0, 0});
  return code422::xbasis_codeword(first != 0, second != 0);
}

Circuit build_prep_circuit(const PrepTarget& target, CnotModel cnot_model, double stark_theta_rad) {
  Circuit circuit;
  circuit.ops.push_back(CircuitOp::gate("x", gates::x(), {kS1}));
  for (int q = kD1; q <= kD4; ++q) circuit.ops.push_back(CircuitOp::gate("h", gates::h(), {q}));

  static const char* kSites[3] = {kSiteA, kSiteB, kSiteC};
  for (int q = kD1; q <= kD4; ++q) {
    circuit.ops.push_back(CircuitOp::gate("cnot", gates::cnot(), {q, kS1}));
    if (cnot_model == CnotModel::stark)
      circuit.ops.push_back(CircuitOp::gate("zrot", gates::zrot(stark_theta_rad), {q},
                                            {{"theta", stark_theta_rad}}));
    if (q < kD4) circuit.ops.push_back(CircuitOp::barrier(std::string("site:") + kSites[q]));
  }

  for (int q = kD1; q <= kD4; ++q) circuit.ops.push_back(CircuitOp::gate("h", gates::h(), {q}));
  circuit.ops.push_back(CircuitOp::measure(kS1, MeasureFrame::z));

  circuit.ops.push_back(CircuitOp::barrier("pr"));
  if (target.basis == PrepTarget::Basis::x)
    for (int q = kD1; q <= kD4; ++q) circuit.ops.push_back(CircuitOp::gate("h", gates::h(), {q}));
  append_pauli_gates(circuit, pr_pauli(target));

  circuit.ops.push_back(CircuitOp::barrier("readout"));
  const MeasureFrame frame = target.basis == PrepTarget::Basis::z ? MeasureFrame::z : MeasureFrame::x;
  for (int q = kD1; q <= kD4; ++q) circuit.ops.push_back(CircuitOp::measure(q, frame));
  return circuit;
}

Circuit insert_error(const Circuit& circuit, const std::string& site, double theta_rad) {
  const int pos = circuit.find_barrier("site:" + site);
  if (pos < 0) throw std::invalid_argument("insert_error: no such site " + site);
  Circuit out = circuit;
  out.insert_after(pos, CircuitOp::gate("zrot", gates::zrot(theta_rad), {kS1}, {{"theta", theta_rad}}));
  return out;
}

Circuit insert_correlated_error(const Circuit& circuit, double theta_rad) {
  Circuit out = circuit;
  const std::vector<int> cnots = out.find_gates("cnot");
  if (cnots.size() != 4) throw std::invalid_argument("insert_correlated_error: not a prep circuit");
  const Matrix yy = kron(gates::yrot(theta_rad), gates::yrot(theta_rad));
  // Insert back to front so the recorded positions stay valid.
  for (auto it = cnots.rbegin(); it != cnots.rend(); ++it) {
    const int data = out.ops[static_cast<std::size_t>(*it)].targets.at(0);
    // Local bit 0 = data qubit, bit 1 = S1; kron's first factor is the most
    // significant local bit, so the order below puts Y(theta) on each.
    out.insert_after(*it, CircuitOp::gate("yy", yy, {data, kS1}, {{"theta", theta_rad}}));
  }
  return out;
}

Circuit inject_pauli(const Circuit& circuit, int position, int qubit, char pauli) {
  Matrix m;
  std::string name;
  switch (pauli) {
    case 'X': m = gates::x(); name = "x"; break;
    case 'Y': m = gates::y(); name = "y"; break;
    case 'Z': m = gates::z(); name = "z"; break;
    default: throw std::invalid_argument("inject_pauli: pauli must be X, Y or Z");
  }
  Circuit out = circuit;
  out.insert_after(position, CircuitOp::gate(name, m, {qubit}));
  return out;
}

Circuit with_prep_damping(const Circuit& circuit, const NoiseConfig& config) {
  bool all_infinite = true;
  for (double t1 : config.t1_us)
    if (!std::isinf(t1)) all_infinite = false;
  if (all_infinite) return circuit;

  Circuit out;
  out.num_qubits = circuit.num_qubits;
  for (const CircuitOp& op : circuit.ops) {
    out.ops.push_back(op);
    if (op.kind != CircuitOp::Kind::gate) continue;
    // zrot (frame change / inserted error) and yy (inserted error) take no
    // schedule time of their own.
    double duration = 0.0;
    if (op.name == "cnot")
      duration = config.cnot_gate_us;
    else if (op.name == "h" || op.name == "x" || op.name == "y" || op.name == "z")
      duration = config.single_gate_us;
    if (duration <= 0.0) continue;
    for (int q = 0; q < circuit.num_qubits; ++q) {
      if (std::isinf(config.t1_us[static_cast<std::size_t>(q)])) continue;
      const double gamma = damping_gamma(duration, config.t1_us[static_cast<std::size_t>(q)]);
      if (gamma == 0.0) continue;
      KrausChannel ch = amplitude_damping(duration, config.t1_us[static_cast<std::size_t>(q)], q);
      out.ops.push_back(CircuitOp::channel("amp_damp", ch.operators, {q}, {{"gamma", gamma}}));
    }
  }
  return out;
}

}  // namespace ft422
