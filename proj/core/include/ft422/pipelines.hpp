// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ft422/analytic.hpp"
#include "ft422/config.hpp"
#include "ft422/postsel.hpp"
#include "ft422/tomo.hpp"

namespace ft422::pipelines {

// Exact joint readout distribution over the 32 outcomes (c1..c4, c_s) of a
// circuit under the config noise: per-gate damping when enabled, then the
// per-qubit readout crossovers folded in analytically.
std::vector<double> exact_outcome_distribution(const Circuit& circuit, const NoiseConfig& noise);

// Samples shots from the circuit's true outcome distribution, then applies
// per-qubit readout flips; stream-split so the same seed never reuses draws.
std::vector<ShotRecord> sample_noisy_shots(const Circuit& circuit, const NoiseConfig& noise,
                                           PrepTarget::Basis basis, long shots,
                                           std::uint64_t seed);

enum class SweepSite { a, b, c, yy };
SweepSite sweep_site_from_string(const std::string& s);
const char* to_string(SweepSite site);

Circuit sweep_circuit(const PrepTarget& target, SweepSite site, double theta,
                      const NoiseConfig& noise);

struct SweepPoint {
  double theta = 0.0;
  PostSelSummary sampled;
  PostSelSummary exact;
};

// One sweep angle: error inserted at the site (or correlated YY after every
// CNOT), Monte Carlo and exact statistics side by side. exact_only skips
// sampling and copies the exact values into the sampled slot.
SweepPoint run_sweep_point(const PrepTarget& target, SweepSite site, double theta,
                           const NoiseConfig& noise, long shots, std::uint64_t seed,
                           bool exact_only);

enum class DecayState { z11, pp };

struct DecayPointResult {
  double t_us = 0.0;
  PostSelSummary sampled;
  PostSelSummary exact;
  bool has_model = false;
  analytic::DecayPoint model;  // classical decay model (Z-basis states only)
};

// Free-evolution experiment at one hold time: ideal preparation conditioned
// on the reported syndrome (S1 kept in the register so its static ZZ fields
// and relaxation act during the idle), then data readout in the Z frame (11)
// or X frame (pp). Acceptance and parities condition only on the prep-time
// syndrome selection; data readout crossovers apply at measurement.
DecayPointResult run_decay_point(DecayState state, double t_us, const NoiseConfig& noise,
                                 EchoSequence echo, long shots, std::uint64_t seed,
                                 int trotter_slices, bool exact_only);

struct PrepResult {
  PostSelSummary sampled;
  PostSelSummary exact;
  code422::CodespaceMetrics metrics;   // vs the target codeword
  tomo::TableMetricsRow table_row;
  std::vector<ShotRecord> shots;
};

PrepResult run_prep(const PrepTarget& target, const NoiseConfig& noise, long shots,
                    std::uint64_t seed, bool exact_only);

// Conditional 4-qubit data state given reported c_s = 1 (syndrome readout
// crossovers included), before any data readout.
QuantumState prepared_data_state(const PrepTarget& target, const NoiseConfig& noise);

struct TomoResult {
  tomo::TomoDataset dataset;
  QuantumState reconstructed;
  Eigen::Matrix<double, 16, 16> difference;
  tomo::TableMetricsRow table_row;

  TomoResult() : reconstructed(4) {}
};

TomoResult run_tomo(const PrepTarget& target, const NoiseConfig& noise, int shots_per_setting,
                    std::uint64_t seed, bool exact_probabilities);

}  // namespace ft422::pipelines
