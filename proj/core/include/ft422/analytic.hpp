// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>

#include "ft422/code422.hpp"

namespace ft422::analytic {

enum class Location { a, b, c };
enum class LogicalQubit { protected_q, gauge_q, joint };

Location location_from_char(char c);

// Closed-form coefficients of the single-Z(theta) insertion model (ideal prep
// circuit for the |1 1> codeword followed by uniform asymmetric readout on
// all five qubits): acceptance = a_j + b_j cos(theta), conditional logical
// error = (c_j + d_j cos(theta)) / acceptance. Exact in alpha = 1 - 2 p0 and
// beta = 1 - 2 p1; the syndrome-bit crossovers cancel because the true
// syndrome value is independent of the data outcome in this circuit. The
// expressions for locations A and C are identical, at location A the gauge
// error equals the protected error, and the location-B acceptance is exactly
// flat (b_B = 0).
struct InsertionCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c_protected = 0.0;
  double d_protected = 0.0;
  double c_gauge = 0.0;
  double d_gauge = 0.0;
  double c_joint = 0.0;
  double d_joint = 0.0;
};

InsertionCoefficients insertion_coefficients(Location loc, double p0, double p1);

// Coefficient family reported alongside the reference fitted values. It
// tracks a post-rotation-free variant of the analysis and carries small
// algebraic slips, so it deviates from the exact enumeration (and from
// insertion_coefficients) once p0 != p1; on the p0 = p1 diagonal the two
// families coincide. Kept solely to reproduce the reported readout-parameter
// match; it has no joint-error entries.
InsertionCoefficients reported_insertion_coefficients(Location loc, double p0, double p1);

// P_j(accept)(theta) = a_j + b_j cos(theta).
double acceptance_model(Location loc, double theta, double p0, double p1);

// Conditional logical error probability; nullopt when the acceptance
// vanishes at this angle.
std::optional<double> logical_error_model(Location loc, LogicalQubit r, double theta, double p0,
                                          double p1);

// Survival P(1 | accept) of either encoded qubit for a pure |1 1> codeword
// decaying with equal T1 on every qubit and perfect readout:
// (2 - 2 e^{t/T1} + e^{2 t/T1})^{-1}.
double ideal_decay(double t_us, double t1_us);

struct DecayModelParams {
  // Mixture weights over the 16 joint eigenstates, by label index.
  std::array<double, 16> init_mixture{};
  std::array<double, 4> t1_us{};  // data qubits D1..D4
  double p0 = 0.0;
  double p1 = 0.0;

  static DecayModelParams ideal_codeword(const code422::LogicalLabel& label,
                                         std::array<double, 4> t1_us, double p0, double p1);
  void validate() const;
};

struct DecayPoint {
  double acceptance = 0.0;        // P(c1^c2^c3^c4 = 0)
  double p1_protected = 0.0;      // P(c1^c2 = 1 | accept)
  double p1_gauge = 0.0;          // P(c1^c3 = 1 | accept)
};

// Exact classical pipeline: per-qubit 1 -> 0 decay with gamma_i = 1 -
// e^{-t/T1_i} acting on the two computational bitstrings of each mixture
// component, readout crossovers folded in, then the software parity
// post-processing. Diagonal dynamics suffice because the final measurement is
// in the computational basis.
DecayPoint decay_model(double t_us, const DecayModelParams& params);

}  // namespace ft422::analytic
