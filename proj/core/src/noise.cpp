// SPDX-License-Identifier: Apache-2.0
#include "ft422/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ft422/circuit.hpp"
#include "ft422/gates.hpp"

namespace ft422 {

NoiseConfig NoiseConfig::ideal() {
  NoiseConfig cfg;
  cfg.t1_us.fill(std::numeric_limits<double>::infinity());
  cfg.p0.fill(0.0);
  cfg.p1.fill(0.0);
  return cfg;
}

NoiseConfig NoiseConfig::device_defaults() {
  NoiseConfig cfg;
  cfg.t1_us = {50.4, 70.3, 77.7, 68.5, 68.0};
  cfg.p0 = {0.0567, 0.0402, 0.0455, 0.0573, 0.0424};
  cfg.p1 = {0.0240, 0.0090, 0.0191, 0.0069, 0.0088};
  auto set = [&cfg](int a, int b, double khz) {
    cfg.zz_khz(a, b) = khz;
    cfg.zz_khz(b, a) = khz;
  };
  set(kD1, kD2, -49.5);
  set(kD3, kD4, -77.0);
  set(kD1, kS1, -94.5);
  set(kD2, kS1, -30.0);
  set(kD3, kS1, -25.0);
  set(kD4, kS1, -42.5);
  return cfg;
}

void NoiseConfig::set_uniform_readout(double p0_all, double p1_all) {
  p0.fill(p0_all);
  p1.fill(p1_all);
}

void NoiseConfig::validate() const {
  for (int q = 0; q < 5; ++q) {
    if (!(t1_us[q] > 0.0)) throw std::invalid_argument("NoiseConfig: T1 must be positive");
    if (p0[q] < 0.0 || p0[q] > 1.0 || p1[q] < 0.0 || p1[q] > 1.0)
      throw std::invalid_argument("NoiseConfig: readout probabilities must lie in [0, 1]");
  }
  for (int i = 0; i < 5; ++i) {
    if (zz_khz(i, i) != 0.0) throw std::invalid_argument("NoiseConfig: ZZ diagonal must be zero");
    for (int j = 0; j < 5; ++j)
      if (zz_khz(i, j) != zz_khz(j, i))
        throw std::invalid_argument("NoiseConfig: ZZ matrix must be symmetric");
  }
}

double damping_gamma(double t_us, double t1_us) {
  if (t_us < 0.0) throw std::invalid_argument("damping_gamma: negative duration");
  if (!(t1_us > 0.0)) throw std::invalid_argument("damping_gamma: T1 must be positive");
  if (std::isinf(t1_us)) return 0.0;
  return 1.0 - std::exp(-t_us / t1_us);
}

KrausChannel amplitude_damping(double t_us, double t1_us, int target) {
  const double gamma = damping_gamma(t_us, t1_us);
  Matrix a0 = Matrix::Zero(2, 2);
  a0(0, 0) = 1.0;
  a0(1, 1) = std::sqrt(1.0 - gamma);
  Matrix a1 = Matrix::Zero(2, 2);
  a1(0, 1) = std::sqrt(gamma);
  return KrausChannel({a0, a1}, {target});
}

int readout_flip(int bit, double p0, double p1, RngStream& rng) {
  const double u = rng.uniform();
  if (bit != 0) return u < p0 ? 0 : 1;
  return u < p1 ? 1 : 0;
}

double assignment_error(double p0, double p1) { return 0.5 * (p0 + p1); }

std::vector<double> fold_readout(const std::vector<double>& probs,
                                 std::span<const double> p0, std::span<const double> p1) {
  const std::size_t dim = probs.size();
  std::size_t n = 0;
  while ((1ull << n) < dim) ++n;
  if ((1ull << n) != dim) throw std::invalid_argument("fold_readout: table size not a power of 2");
  if (p0.size() < n || p1.size() < n)
    throw std::invalid_argument("fold_readout: missing per-qubit parameters");

  std::vector<double> out = probs;
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t mask = 1ull << q;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & mask) continue;
      const std::size_t j = i | mask;
      const double low = out[i];
      const double high = out[j];
      out[i] = (1.0 - p1[q]) * low + p0[q] * high;
      out[j] = p1[q] * low + (1.0 - p0[q]) * high;
    }
  }
  return out;
}

QuantumState zz_evolution(const QuantumState& state, const Eigen::MatrixXd& zz_khz, double t_us) {
  if (t_us < 0.0) throw std::invalid_argument("zz_evolution: negative duration");
  const int n = state.num_qubits();
  if (zz_khz.rows() != n || zz_khz.cols() != n)
    throw std::invalid_argument("zz_evolution: ZZ matrix size does not match register");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (zz_khz(i, j) != zz_khz(j, i))
        throw std::invalid_argument("zz_evolution: ZZ matrix must be symmetric");

  // Diagonal phases exp(-i * pi * eta_ij * z_i z_j * t), eta in kHz, t in us.
  const int dim = state.dim();
  Vector phase(dim);
  for (int b = 0; b < dim; ++b) {
    double angle = 0.0;
    for (int i = 0; i < n; ++i) {
      const double zi = ((b >> i) & 1) ? -1.0 : 1.0;
      for (int j = i + 1; j < n; ++j) {
        const double zj = ((b >> j) & 1) ? -1.0 : 1.0;
        angle += std::numbers::pi * zz_khz(i, j) * 1e-3 * t_us * zi * zj;
      }
    }
    phase(b) = std::exp(Complex(0.0, -angle));
  }

  if (state.is_pure_representation()) {
    Vector v = state.amplitudes();
    for (int b = 0; b < dim; ++b) v(b) *= phase(b);
    return QuantumState::pure(n, v);
  }
  Matrix rho = state.density_matrix();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) rho(i, j) *= phase(i) * std::conj(phase(j));
  return QuantumState::density(n, rho);
}

QuantumState idle_evolution(const QuantumState& state, const NoiseConfig& config, double t_us,
                            const IdleOptions& options) {
  if (t_us < 0.0) throw std::invalid_argument("idle_evolution: negative duration");
  const int n = state.num_qubits();
  if (n != 4 && n != 5) throw std::invalid_argument("idle_evolution: expected 4 or 5 qubits");
  if (t_us == 0.0) return state;

  const Eigen::MatrixXd zz = config.zz_khz.topLeftCorner(n, n);
  int slices = std::max(2, options.trotter_slices);
  if (options.echo == EchoSequence::midpoint_x && slices % 2 != 0) ++slices;
  const double dt = t_us / slices;

  // Strang splitting per slice: ZZ(dt/2), damping(dt), ZZ(dt/2). The ZZ terms
  // commute among themselves, so only the ZZ/damping split contributes error,
  // at second order in the slice width.
  QuantumState out = state;
  for (int s = 0; s < slices; ++s) {
    if (options.echo == EchoSequence::midpoint_x && s == slices / 2) {
      for (int q = 0; q < 4; ++q) out = apply_unitary(out, UnitarySpec(gates::x(), {q}));
    }
    out = zz_evolution(out, zz, 0.5 * dt);
    for (int q = 0; q < n; ++q) {
      if (std::isinf(config.t1_us[static_cast<std::size_t>(q)])) continue;
      out = apply_channel(out, amplitude_damping(dt, config.t1_us[static_cast<std::size_t>(q)], q));
    }
    out = zz_evolution(out, zz, 0.5 * dt);
  }
  return out;
}

}  // namespace ft422
