// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "ft422/circuit.hpp"
#include "ft422/code422.hpp"
#include "ft422/noise.hpp"

namespace ft422 {

// One of the eight preparable logical states. In the Z basis the labels are
// bit values (first = protected qubit L1, second = gauge qubit L2); in the X
// basis they are signs (first = gauge, second = protected) because the
// Hadamard post-rotations swap the roles.
struct PrepTarget {
  enum class Basis { z, x };

  Basis basis = Basis::z;
  int first = 0;   // Z: L1 bit. X: gauge sign (0 = +, 1 = -).
  int second = 0;  // Z: L2 bit. X: protected sign.

  static PrepTarget z(int l1, int l2) { return {Basis::z, l1, l2}; }
  static PrepTarget x(int g_minus, int p_minus) { return {Basis::x, g_minus, p_minus}; }
  // "Z:11", "X:+-", ...
  static PrepTarget parse(const std::string& text);
  std::string to_string() const;

  // Parity values of (c1^c2, c1^c3) an ideal accepted shot reports.
  int expected_protected_parity() const;
  int expected_gauge_parity() const;

  // The prepared codeword (4-qubit pure state).
  QuantumState ideal_state() const;
};

enum class CnotModel { ideal, stark };

inline constexpr const char* kSiteA = "A";
inline constexpr const char* kSiteB = "B";
inline constexpr const char* kSiteC = "C";

// Builds the syndrome-measurement preparation circuit: data start |0>^4 and
// S1 starts |1>; H on data; CNOTs with controls D1..D4 in order onto S1 with
// insertion sites A/B/C after the first three; H on data; S1 measured;
// post-rotations for the target; data measured (Z frame for Z-basis targets,
// X frame for X-basis targets). Conditioned on c_s = 1 the ideal circuit
// leaves the data register in exactly the target codeword.
// The stark model adds a systematic Z(theta_s) to each CNOT's data qubit.
Circuit build_prep_circuit(const PrepTarget& target, CnotModel cnot_model = CnotModel::ideal,
                           double stark_theta_rad = 0.0);

// Z(theta) = diag(1, e^{i theta}) on S1 at the named site. At theta = pi the
// inserted error is circuit-equivalent to X on {D2,D3,D4} / {D3,D4} / {D4}
// for sites A / B / C (phase errors propagate from target to control).
Circuit insert_error(const Circuit& circuit, const std::string& site, double theta_rad);

// Correlated two-qubit error: Y(theta) x Y(theta) on (data control, S1) after
// each of the four CNOTs.
Circuit insert_correlated_error(const Circuit& circuit, double theta_rad);

// Single-qubit Pauli fault inserted after the op at `position` (-1 = before
// the first op); used for exhaustive fault-injection checks.
Circuit inject_pauli(const Circuit& circuit, int position, int qubit, char pauli);

// Interleaves per-qubit amplitude damping between circuit ops according to
// the gate-duration schedule in the config (all five qubits damp for each
// gate's duration; barriers and measurements take no time).
Circuit with_prep_damping(const Circuit& circuit, const NoiseConfig& config);

}  // namespace ft422
