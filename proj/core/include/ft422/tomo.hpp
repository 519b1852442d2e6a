// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "ft422/circuit.hpp"
#include "ft422/code422.hpp"
#include "ft422/noise.hpp"
#include "ft422/prep.hpp"

namespace ft422::tomo {

// Measurement outcomes of one 4-qubit Pauli setting; basis[i] in {X,Y,Z} is
// the measured axis of data qubit i. Counts may be expected values
// (exact-probability mode) and always sum to shots_per_setting.
struct TomoSetting {
  std::string basis;  // e.g. "XZYX"
  std::array<double, 16> counts{};
};

struct TomoDataset {
  int shots_per_setting = 0;
  bool exact = false;
  std::vector<TomoSetting> settings;  // all 81 bases, lexicographic

  void validate() const;
};

// All 81 basis strings in lexicographic order (XXXX first).
const std::vector<std::string>& all_settings();

// Runs the preparation circuit (dissipation per the config schedule when
// enabled), conditions on the reported syndrome value c_s = 1 (S1 readout
// crossovers included), rotates into each Pauli basis, folds the data readout
// crossovers, and records counts. exact_probabilities = true stores expected
// counts instead of sampling; otherwise each setting draws from its own
// seeded substream.
TomoDataset simulate_tomography(const Circuit& circuit, const NoiseConfig& noise,
                                int shots_per_setting, std::uint64_t seed,
                                bool exact_probabilities = false);

// Linear inversion over all 256 Pauli expectations (each averaged over every
// covering setting) followed by eigenvalue truncation at the a-priori
// sampling-noise floor and trace renormalization. Exact-probability datasets
// invert exactly; sampled datasets shed the shot-noise eigenvalue junk.
QuantumState reconstruct(const TomoDataset& data);

// Entrywise |(U^dag rho U) - (U^dag rho_ideal U)| in the logical basis
// ordering, where rho_ideal is the target's pure codeword state.
Eigen::Matrix<double, 16, 16> logical_difference_matrix(const QuantumState& state,
                                                        const code422::LogicalLabel& target);
Eigen::Matrix<double, 16, 16> logical_difference_matrix(const QuantumState& state,
                                                        const QuantumState& ideal_state);

// Codespace acceptance plus the four logical populations of the normalized
// codespace block: Z frame orders (00, 01, 10, 11); X frame orders the
// X-eigenstate populations as (g+, p+), (g+, p-), (g-, p+), (g-, p-).
struct TableMetricsRow {
  double acceptance = 0.0;
  std::array<double, 4> populations{};
  bool codespace_empty = false;
};

TableMetricsRow table_metrics(const QuantumState& state, PrepTarget::Basis basis);

}  // namespace ft422::tomo
