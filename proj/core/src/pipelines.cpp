// SPDX-License-Identifier: Apache-2.0
#include "ft422/pipelines.hpp"

#include "ft422/gates.hpp"

#include <stdexcept>

namespace ft422::pipelines {

std::vector<double> exact_outcome_distribution(const Circuit& circuit, const NoiseConfig& noise) {
  const Circuit noisy = noise.damping_during_prep ? with_prep_damping(circuit, noise) : circuit;
  const QuantumState final_state = run_circuit(noisy);
  return fold_readout(measure_probabilities(final_state), noise.p0, noise.p1);
}

std::vector<ShotRecord> sample_noisy_shots(const Circuit& circuit, const NoiseConfig& noise,
                                           PrepTarget::Basis basis, long shots,
                                           std::uint64_t seed) {
  const Circuit noisy = noise.damping_during_prep ? with_prep_damping(circuit, noise) : circuit;
  const QuantumState final_state = run_circuit(noisy);
  const std::vector<std::uint32_t> outcomes =
      sample_shots(final_state, static_cast<int>(shots), seed);
  return apply_readout_noise(outcomes, basis, noise, seed);
}

SweepSite sweep_site_from_string(const std::string& s) {
  if (s == "A" || s == "a") return SweepSite::a;
  if (s == "B" || s == "b") return SweepSite::b;
  if (s == "C" || s == "c") return SweepSite::c;
  if (s == "yy" || s == "YY") return SweepSite::yy;
  throw std::invalid_argument("sweep site must be A, B, C or yy");
}

const char* to_string(SweepSite site) {
  switch (site) {
    case SweepSite::a: return "A";
    case SweepSite::b: return "B";
    case SweepSite::c: return "C";
    case SweepSite::yy: return "yy";
  }
  return "?";
}

Circuit sweep_circuit(const PrepTarget& target, SweepSite site, double theta,
                      const NoiseConfig& noise) {
  const CnotModel model = noise.stark_theta_rad != 0.0 ? CnotModel::stark : CnotModel::ideal;
  const Circuit base = build_prep_circuit(target, model, noise.stark_theta_rad);
  switch (site) {
    case SweepSite::a: return insert_error(base, kSiteA, theta);
    case SweepSite::b: return insert_error(base, kSiteB, theta);
    case SweepSite::c: return insert_error(base, kSiteC, theta);
    case SweepSite::yy: return insert_correlated_error(base, theta);
  }
  throw std::logic_error("sweep_circuit: bad site");
}

SweepPoint run_sweep_point(const PrepTarget& target, SweepSite site, double theta,
                           const NoiseConfig& noise, long shots, std::uint64_t seed,
                           bool exact_only) {
  const Circuit circuit = sweep_circuit(target, site, theta, noise);
  SweepPoint point;
  point.theta = theta;
  point.exact = exact_statistics(exact_outcome_distribution(circuit, noise), target);
  if (exact_only) {
    point.sampled = point.exact;
  } else {
    point.sampled = postprocess(sample_noisy_shots(circuit, noise, target.basis, shots, seed), target);
  }
  return point;
}

namespace {

// 5-qubit state after an accepted (reported c_s = 1) ideal preparation, with
// S1 kept in the register. Readout crossovers on S1 mix in the true-0 branch.
QuantumState accepted_register_state(const PrepTarget& target, const NoiseConfig& noise) {
  const CnotModel model = noise.stark_theta_rad != 0.0 ? CnotModel::stark : CnotModel::ideal;
  Circuit circuit = build_prep_circuit(target, model, noise.stark_theta_rad);
  if (noise.damping_during_prep) circuit = with_prep_damping(circuit, noise);
  RunOptions opts;
  opts.stop_before_data_measurement = true;
  const QuantumState reg = run_circuit(circuit, opts);

  auto [q1, state1] = project_qubit(reg, kS1, 1);
  Matrix rho = (1.0 - noise.p0[kS1]) * q1 * state1.density_matrix();
  double norm = (1.0 - noise.p0[kS1]) * q1;
  if (noise.p1[kS1] > 0.0) {
    auto [q0, state0] = project_qubit(reg, kS1, 0);
    rho += noise.p1[kS1] * q0 * state0.density_matrix();
    norm += noise.p1[kS1] * q0;
  }
  return QuantumState::density(kRegisterQubits, rho / norm);
}

// Distribution over the data outcomes of an evolved register state, measured
// in the requested frame, with data readout crossovers folded in. Returned as
// a 32-entry table with all mass on c_s = 1 (the prep-time selection).
std::vector<double> data_outcome_table(QuantumState state, MeasureFrame frame,
                                       const NoiseConfig& noise) {
  if (frame == MeasureFrame::x)
    for (int q = 0; q < 4; ++q)
      state = apply_unitary(state, UnitarySpec(gates::h(), {q}));
  const std::vector<double> joint = measure_probabilities(state);

  std::vector<double> data_probs(16, 0.0);
  for (int outcome = 0; outcome < 32; ++outcome)
    data_probs[static_cast<std::size_t>(outcome & 15)] += joint[static_cast<std::size_t>(outcome)];
  const std::array<double, 4> p0s{noise.p0[0], noise.p0[1], noise.p0[2], noise.p0[3]};
  const std::array<double, 4> p1s{noise.p1[0], noise.p1[1], noise.p1[2], noise.p1[3]};
  data_probs = fold_readout(data_probs, p0s, p1s);

  std::vector<double> table(32, 0.0);
  for (int c = 0; c < 16; ++c) table[static_cast<std::size_t>(c) | (1u << kS1)] = data_probs[static_cast<std::size_t>(c)];
  return table;
}

}  // namespace

DecayPointResult run_decay_point(DecayState state, double t_us, const NoiseConfig& noise,
                                 EchoSequence echo, long shots, std::uint64_t seed,
                                 int trotter_slices, bool exact_only) {
  const PrepTarget target = state == DecayState::z11 ? PrepTarget::z(1, 1) : PrepTarget::x(0, 0);
  const MeasureFrame frame =
      state == DecayState::z11 ? MeasureFrame::z : MeasureFrame::x;

  QuantumState reg = accepted_register_state(target, noise);
  IdleOptions idle;
  idle.trotter_slices = trotter_slices;
  idle.echo = echo;
  reg = idle_evolution(reg, noise, t_us, idle);

  DecayPointResult out;
  out.t_us = t_us;
  const std::vector<double> table = data_outcome_table(reg, frame, noise);
  out.exact = exact_statistics(table, target);

  if (exact_only) {
    out.sampled = out.exact;
  } else {
    // Sample data outcomes from the pre-readout distribution, flip, then
    // stamp the accepted syndrome bit.
    QuantumState measured = reg;
    if (frame == MeasureFrame::x)
      for (int q = 0; q < 4; ++q) measured = apply_unitary(measured, UnitarySpec(gates::h(), {q}));
    const std::vector<std::uint32_t> raw =
        sample_shots(measured, static_cast<int>(shots), seed);
    NoiseConfig data_noise = noise;
    data_noise.p0[kS1] = 0.0;
    data_noise.p1[kS1] = 0.0;
    std::vector<ShotRecord> records = apply_readout_noise(raw, target.basis, data_noise, seed);
    for (ShotRecord& r : records) r.c_s = 1;
    out.sampled = postprocess(records, target);
  }

  if (state == DecayState::z11) {
    out.has_model = true;
    analytic::DecayModelParams params = analytic::DecayModelParams::ideal_codeword(
        {1, 1, 0, 0}, {noise.t1_us[0], noise.t1_us[1], noise.t1_us[2], noise.t1_us[3]},
        noise.p0[0], noise.p1[0]);
    out.model = analytic::decay_model(t_us, params);
  }
  return out;
}

QuantumState prepared_data_state(const PrepTarget& target, const NoiseConfig& noise) {
  return trace_out_qubit(accepted_register_state(target, noise), kS1);
}

PrepResult run_prep(const PrepTarget& target, const NoiseConfig& noise, long shots,
                    std::uint64_t seed, bool exact_only) {
  const CnotModel model = noise.stark_theta_rad != 0.0 ? CnotModel::stark : CnotModel::ideal;
  const Circuit circuit = build_prep_circuit(target, model, noise.stark_theta_rad);

  PrepResult out;
  out.exact = exact_statistics(exact_outcome_distribution(circuit, noise), target);
  if (exact_only) {
    out.sampled = out.exact;
  } else {
    out.shots = sample_noisy_shots(circuit, noise, target.basis, shots, seed);
    out.sampled = postprocess(out.shots, target);
  }

  const QuantumState data_state = prepared_data_state(target, noise);
  out.metrics = code422::codespace_metrics(data_state, target.ideal_state());
  out.table_row = tomo::table_metrics(
      data_state, target.basis == PrepTarget::Basis::z ? PrepTarget::Basis::z : PrepTarget::Basis::x);
  return out;
}

TomoResult run_tomo(const PrepTarget& target, const NoiseConfig& noise, int shots_per_setting,
                    std::uint64_t seed, bool exact_probabilities) {
  const CnotModel model = noise.stark_theta_rad != 0.0 ? CnotModel::stark : CnotModel::ideal;
  const Circuit circuit = build_prep_circuit(target, model, noise.stark_theta_rad);

  TomoResult out;
  out.dataset = tomo::simulate_tomography(circuit, noise, shots_per_setting, seed,
                                          exact_probabilities);
  out.reconstructed = tomo::reconstruct(out.dataset);
  out.difference = tomo::logical_difference_matrix(out.reconstructed, target.ideal_state());
  out.table_row = tomo::table_metrics(out.reconstructed, target.basis);
  return out;
}

}  // namespace ft422::pipelines
