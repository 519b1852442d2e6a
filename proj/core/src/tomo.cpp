// SPDX-License-Identifier: Apache-2.0
#include "ft422/tomo.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "ft422/gates.hpp"
#include "ft422/parallel.hpp"
#include "ft422/rng.hpp"

namespace ft422::tomo {

namespace {

constexpr int kDataQubits = 4;
constexpr int kDim = 16;

// Rotation taking the measured axis onto Z: X -> H, Y -> H S^dag, Z -> I.
Matrix frame_rotation(char axis) {
  switch (axis) {
    case 'X': return gates::h();
    case 'Y': return gates::h() * gates::sdg();
    case 'Z': return gates::identity();
    default: throw std::invalid_argument("tomo: basis axis must be X, Y or Z");
  }
}

Matrix pauli_matrix_for(char axis) {
  switch (axis) {
    case 'I': return gates::identity();
    case 'X': return gates::x();
    case 'Y': return gates::y();
    case 'Z': return gates::z();
    default: throw std::invalid_argument("tomo: bad Pauli letter");
  }
}

// 4-qubit Pauli string indexed base-4 (digit per qubit, 0=I 1=X 2=Y 3=Z).
std::string pauli_string_from_index(int idx) {
  static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  std::string s(kDataQubits, 'I');
  for (int q = 0; q < kDataQubits; ++q) s[static_cast<std::size_t>(q)] = kLetters[(idx >> (2 * q)) & 3];
  return s;
}

Matrix pauli_matrix_from_string(const std::string& p) {
  Matrix out = Matrix::Identity(1, 1);
  for (int q = kDataQubits - 1; q >= 0; --q)
    out = kron(out, pauli_matrix_for(p[static_cast<std::size_t>(q)]));
  return out;
}

}  // namespace

void TomoDataset::validate() const {
  if (settings.size() != all_settings().size())
    throw std::invalid_argument("TomoDataset: expected all 81 settings");
  for (const TomoSetting& s : settings) {
    double sum = 0.0;
    for (double c : s.counts) sum += c;
    if (std::abs(sum - shots_per_setting) > 1e-6 * std::max(1.0, static_cast<double>(shots_per_setting)))
      throw std::invalid_argument("TomoDataset: counts for setting " + s.basis +
                                  " do not sum to shots");
  }
}

const std::vector<std::string>& all_settings() {
  static const std::vector<std::string> settings = [] {
    std::vector<std::string> out;
    static constexpr char kAxes[3] = {'X', 'Y', 'Z'};
    for (char a : kAxes)
      for (char b : kAxes)
        for (char c : kAxes)
          for (char d : kAxes) out.push_back(std::string{a, b, c, d});
    return out;
  }();
  return settings;
}

TomoDataset simulate_tomography(const Circuit& circuit, const NoiseConfig& noise,
                                int shots_per_setting, std::uint64_t seed,
                                bool exact_probabilities) {
  if (shots_per_setting < 1)
    throw std::invalid_argument("simulate_tomography: shots_per_setting must be >= 1");

  Circuit prep = noise.damping_during_prep ? with_prep_damping(circuit, noise) : circuit;
  RunOptions opts;
  opts.stop_before_data_measurement = true;
  const QuantumState register_state = run_circuit(prep, opts);

  // Condition on the *reported* syndrome value 1: S1 crossovers mix in the
  // true-0 sector.
  auto [q1, state1] = project_qubit(register_state, kS1, 1);
  Matrix rho = (1.0 - noise.p0[kS1]) * q1 * trace_out_qubit(state1, kS1).density_matrix();
  double norm = (1.0 - noise.p0[kS1]) * q1;
  if (noise.p1[kS1] > 0.0) {
    auto [q0, state0] = project_qubit(register_state, kS1, 0);
    rho += noise.p1[kS1] * q0 * trace_out_qubit(state0, kS1).density_matrix();
    norm += noise.p1[kS1] * q0;
  }
  const QuantumState data_state = QuantumState::density(kDataQubits, rho / norm);

  const std::array<double, 4> p0s{noise.p0[0], noise.p0[1], noise.p0[2], noise.p0[3]};
  const std::array<double, 4> p1s{noise.p1[0], noise.p1[1], noise.p1[2], noise.p1[3]};

  // Settings are independent; per-setting substreams keep the counts
  // identical no matter how the pool schedules them.
  TomoDataset out;
  out.shots_per_setting = shots_per_setting;
  out.exact = exact_probabilities;
  out.settings.resize(all_settings().size());
  const RngStream rng(seed);
  parallel_for_index(all_settings().size(), [&](std::size_t setting_idx) {
    const std::string& basis = all_settings()[setting_idx];
    QuantumState rotated = data_state;
    for (int q = 0; q < kDataQubits; ++q) {
      if (basis[static_cast<std::size_t>(q)] == 'Z') continue;
      rotated = apply_unitary(rotated, UnitarySpec(frame_rotation(basis[static_cast<std::size_t>(q)]), {q}));
    }
    std::vector<double> probs = fold_readout(measure_probabilities(rotated), p0s, p1s);

    TomoSetting& s = out.settings[setting_idx];
    s.basis = basis;
    if (exact_probabilities) {
      for (int o = 0; o < kDim; ++o)
        s.counts[static_cast<std::size_t>(o)] = probs[static_cast<std::size_t>(o)] * shots_per_setting;
    } else {
      const RngStream sub = rng.substream(setting_idx);
      for (int shot = 0; shot < shots_per_setting; ++shot)
        s.counts[sample_outcome(probs, sub.uniform_at(static_cast<std::uint64_t>(shot)))] += 1.0;
    }
  });
  return out;
}

QuantumState reconstruct(const TomoDataset& data) {
  data.validate();
  const double shots = static_cast<double>(data.shots_per_setting);

  Matrix rho = Matrix::Zero(kDim, kDim);
  for (int pauli_idx = 0; pauli_idx < 256; ++pauli_idx) {
    const std::string pauli = pauli_string_from_index(pauli_idx);
    int support = 0;
    for (int q = 0; q < kDataQubits; ++q)
      if (pauli[static_cast<std::size_t>(q)] != 'I') support |= 1 << q;

    double expectation;
    if (support == 0) {
      expectation = 1.0;
    } else {
      double sum = 0.0;
      int covering = 0;
      for (const TomoSetting& s : data.settings) {
        bool covers = true;
        for (int q = 0; q < kDataQubits; ++q)
          if ((support >> q) & 1 && s.basis[static_cast<std::size_t>(q)] != pauli[static_cast<std::size_t>(q)])
            covers = false;
        if (!covers) continue;
        ++covering;
        double est = 0.0;
        for (int o = 0; o < kDim; ++o) {
          const double sign = std::popcount(static_cast<unsigned>(o & support)) % 2 ? -1.0 : 1.0;
          est += sign * s.counts[static_cast<std::size_t>(o)];
        }
        sum += est / shots;
      }
      expectation = sum / covering;
    }
    rho += (expectation / kDim) * pauli_matrix_from_string(pauli);
  }

  // Hermitize, truncate eigenvalues at the known sampling-noise floor, and
  // renormalize the trace. The floor is half the a-priori Frobenius noise
  // norm: each weight-w Pauli estimate carries variance at most
  // 1/(shots * 3^{4-w}) over its 3^{4-w} covering settings, which sums to
  // (10^4 - 1)/81 / shots over the 255 non-identity terms. Exact-probability
  // datasets carry no sampling noise, so the floor is zero and the
  // reconstruction inverts exactly.
  rho = 0.5 * (rho + Matrix(rho.adjoint()));
  double floor = 0.0;
  if (!data.exact) {
    const double variance_sum = (9999.0 / 81.0) / shots;
    floor = 0.5 * std::sqrt(variance_sum / kDim);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  Eigen::VectorXd evals = es.eigenvalues();
  Eigen::VectorXd truncated(16);
  for (int i = 0; i < 16; ++i) truncated(i) = evals(i) > floor ? evals(i) : 0.0;
  double total = truncated.sum();
  if (total <= 0.0) {  // pathological dataset: keep the dominant eigenvector
    truncated.setZero();
    truncated(15) = 1.0;
    total = 1.0;
  }
  truncated /= total;
  const Matrix projected =
      es.eigenvectors() * truncated.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  return QuantumState::density(kDataQubits, projected);
}

Eigen::Matrix<double, 16, 16> logical_difference_matrix(const QuantumState& state,
                                                        const code422::LogicalLabel& target) {
  return logical_difference_matrix(state, code422::logical_basis_state(target));
}

Eigen::Matrix<double, 16, 16> logical_difference_matrix(const QuantumState& state,
                                                        const QuantumState& ideal_state) {
  const Matrix u = code422::logical_change_of_basis();
  const Matrix delta =
      u.adjoint() * (state.density_matrix() - ideal_state.density_matrix()) * u;
  return delta.cwiseAbs();
}

TableMetricsRow table_metrics(const QuantumState& state, PrepTarget::Basis basis) {
  const Matrix rho = state.density_matrix();
  const Matrix pi = code422::sector_projector(0, 0);
  const Matrix block = pi * rho * pi;

  TableMetricsRow row;
  row.acceptance = block.trace().real();
  if (row.acceptance < 1e-12) {
    row.codespace_empty = true;
    return row;
  }
  for (int i = 0; i < 4; ++i) {
    Vector basis_state;
    if (basis == PrepTarget::Basis::z) {
      basis_state = code422::logical_basis_state({(i >> 1) & 1, i & 1, 0, 0}).amplitudes();
    } else {
      basis_state = code422::xbasis_codeword((i >> 1) & 1, i & 1).amplitudes();
    }
    row.populations[static_cast<std::size_t>(i)] =
        ((basis_state.adjoint() * block * basis_state)(0, 0)).real() / row.acceptance;
  }
  return row;
}

}  // namespace ft422::tomo
