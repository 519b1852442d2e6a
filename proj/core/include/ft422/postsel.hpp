// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ft422/prep.hpp"

namespace ft422 {

// One measurement record: syndrome outcome c_s and data outcomes c1..c4,
// tagged with the frame the data bits were read in.
struct ShotRecord {
  int c_s = 0;
  std::array<int, 4> c{};  // c1..c4
  PrepTarget::Basis basis = PrepTarget::Basis::z;

  static ShotRecord from_outcome(std::uint32_t outcome, PrepTarget::Basis basis);
  std::uint32_t outcome() const;  // 5-bit basis index, bit i = qubit i
};

struct ConditionalErrors {
  double p_err_protected = 0.0;  // protected parity wrong, gauge right
  double p_err_gauge = 0.0;      // gauge parity wrong, protected right
  double p_err_joint = 0.0;      // both parities wrong
  double se_protected = 0.0;
  double se_gauge = 0.0;
  double se_joint = 0.0;
};

// Post-selection summary: shots are first filtered on c_s = 1, then accepted
// when the software parity c1^c2^c3^c4 vanishes. Acceptance is conditional on
// c_s = 1. The protected (gauge) value is the parity of c1,c2 (c1,c3);
// conditional error probabilities are exclusive per logical qubit, with the
// joint error counting both parities flipped.
struct PostSelSummary {
  std::int64_t total_shots = 0;
  std::int64_t total_syndrome_ok = 0;
  std::int64_t accepted = 0;
  double acceptance = 0.0;
  double se_acceptance = 0.0;
  std::optional<ConditionalErrors> errors;  // absent when nothing was accepted
};

PostSelSummary postprocess(const std::vector<ShotRecord>& shots, const PrepTarget& target);

// Same summary computed from an exact 32-outcome probability table over
// (c1..c4, c_s) with readout errors already folded in; standard errors are 0.
PostSelSummary exact_statistics(const std::vector<double>& outcome_probs, const PrepTarget& target);

// Applies per-qubit readout crossovers to sampled outcomes.
std::vector<ShotRecord> apply_readout_noise(const std::vector<std::uint32_t>& outcomes,
                                            PrepTarget::Basis basis, const NoiseConfig& noise,
                                            std::uint64_t seed);

}  // namespace ft422
