// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <limits>
#include <vector>

#include "ft422/rng.hpp"
#include "ft422/state.hpp"

namespace ft422 {

// Per-qubit noise parameters for the register (D1, D2, D3, D4, S1).
// T2 / pure dephasing is deliberately not modeled; the decay analysis uses
// amplitude damping only.
struct NoiseConfig {
  std::array<double, 5> t1_us{};   // relaxation times, > 0 (may be +inf)
  std::array<double, 5> p0{};      // readout P(0|1)
  std::array<double, 5> p1{};      // readout P(1|0)
  Eigen::Matrix<double, 5, 5> zz_khz = Eigen::Matrix<double, 5, 5>::Zero();
  double stark_theta_rad = 0.0;    // systematic Z(theta) per CNOT on its data qubit

  // Damping schedule for circuit simulation.
  double single_gate_us = 0.085;
  double cnot_gate_us = 0.78;
  bool damping_during_prep = false;

  // Noiseless configuration (infinite T1, perfect readout, no couplings).
  static NoiseConfig ideal();
  // Reference device characterization: per-qubit T1 and readout crossover
  // probabilities, and the symmetrized static ZZ matrix (kHz). Entries below
  // the 5 kHz measurement resolution are zero.
  static NoiseConfig device_defaults();

  void set_uniform_readout(double p0_all, double p1_all);
  void validate() const;  // throws on out-of-range fields or asymmetric ZZ
};

double damping_gamma(double t_us, double t1_us);

// Amplitude damping channel for duration t: A0 = |0><0| + sqrt(1-g)|1><1|,
// A1 = sqrt(g)|0><1| with g = 1 - exp(-t/T1).
KrausChannel amplitude_damping(double t_us, double t1_us, int target = 0);

// Asymmetric binary readout channel acting on a single recorded bit.
int readout_flip(int bit, double p0, double p1, RngStream& rng);

// Mean assignment error (p0 + p1) / 2.
double assignment_error(double p0, double p1);

// Exact readout-error fold: maps a distribution over 2^n true outcomes to the
// distribution over reported outcomes under independent per-qubit crossovers.
std::vector<double> fold_readout(const std::vector<double>& probs,
                                 std::span<const double> p0, std::span<const double> p1);

// Unitary free evolution under H = sum_{i<j} pi * eta_ij Z_i Z_j for t
// microseconds, eta in kHz. Requires a symmetric zero-diagonal matrix sized
// to the state register.
QuantumState zz_evolution(const QuantumState& state, const Eigen::MatrixXd& zz_khz, double t_us);

enum class EchoSequence { none, midpoint_x };

struct IdleOptions {
  int trotter_slices = 400;  // >= 100 required; 400 puts the splitting error below 1e-6
  EchoSequence echo = EchoSequence::none;
};

// Free evolution for t microseconds: static ZZ plus independent per-qubit
// amplitude damping, Trotterized in equal slices. A 4-qubit state evolves
// under the data-data ZZ block and data T1s; the 5-qubit register uses the
// full matrix. The midpoint-X echo applies X to all four data qubits at t/2;
// being the X-type stabilizer, it preserves both measured parities in either
// readout frame, so no software frame compensation is needed.
QuantumState idle_evolution(const QuantumState& state, const NoiseConfig& config, double t_us,
                            const IdleOptions& options = {});

}  // namespace ft422
