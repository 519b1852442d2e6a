// SPDX-License-Identifier: Apache-2.0
#include "ft422/state.hpp"

#include <cmath>
#include <stdexcept>

namespace ft422 {

namespace {

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits)
    throw std::invalid_argument("QuantumState: qubit count must be in [1, 5]");
}

#ifndef NDEBUG
constexpr bool kValidateAfterOps = true;
#else
constexpr bool kValidateAfterOps = false;
#endif

}  // namespace

QuantumState::QuantumState(int num_qubits) {
  check_qubit_count(num_qubits);
  num_qubits_ = num_qubits;
  pure_ = true;
  vec_ = Vector::Zero(dim());
  vec_(0) = 1.0;
}

QuantumState QuantumState::pure(int num_qubits, const Vector& amplitudes) {
  check_qubit_count(num_qubits);
  if (amplitudes.size() != (1 << num_qubits))
    throw std::invalid_argument("QuantumState::pure: amplitude vector size mismatch");
  QuantumState s;
  s.num_qubits_ = num_qubits;
  s.pure_ = true;
  s.vec_ = amplitudes;
  const double n = amplitudes.norm();
  if (std::abs(n - 1.0) > kStateTol) {
    if (n == 0.0) throw std::invalid_argument("QuantumState::pure: zero vector");
    s.vec_ /= n;
  }
  return s;
}

QuantumState QuantumState::basis_state(int num_qubits, int index) {
  check_qubit_count(num_qubits);
  if (index < 0 || index >= (1 << num_qubits))
    throw std::out_of_range("QuantumState::basis_state: index out of range");
  Vector v = Vector::Zero(1 << num_qubits);
  v(index) = 1.0;
  return pure(num_qubits, v);
}

QuantumState QuantumState::density(int num_qubits, const Matrix& rho) {
  check_qubit_count(num_qubits);
  if (rho.rows() != (1 << num_qubits) || rho.cols() != (1 << num_qubits))
    throw std::invalid_argument("QuantumState::density: matrix dimension mismatch");
  QuantumState s;
  s.num_qubits_ = num_qubits;
  s.pure_ = false;
  s.rho_ = rho;
  s.validate();
  return s;
}

Matrix QuantumState::density_matrix() const {
  if (pure_) return vec_ * vec_.adjoint();
  return rho_;
}

const Vector& QuantumState::amplitudes() const {
  if (!pure_) throw std::runtime_error("QuantumState: no pure representation available");
  return vec_;
}

void QuantumState::densify() {
  if (pure_) {
    rho_ = vec_ * vec_.adjoint();
    vec_.resize(0);
    pure_ = false;
  }
}

double QuantumState::trace() const {
  if (pure_) return vec_.squaredNorm();
  return rho_.trace().real();
}

void QuantumState::validate() const {
  if (std::abs(trace() - 1.0) > kStateTol)
    throw std::runtime_error("QuantumState invariant violated: trace != 1");
  if (!pure_) {
    if (!is_hermitian(rho_, kStateTol))
      throw std::runtime_error("QuantumState invariant violated: not Hermitian");
    if (min_eigenvalue(rho_) < -kPositivitySlack)
      throw std::runtime_error("QuantumState invariant violated: negative eigenvalue");
  }
}

std::string QuantumState::bitstring_label(int index) const {
  std::string s(num_qubits_, '0');
  for (int i = 0; i < num_qubits_; ++i)
    if ((index >> i) & 1) s[i] = '1';
  return s;
}

UnitarySpec::UnitarySpec(Matrix m, std::vector<int> t) : matrix(std::move(m)), targets(std::move(t)) {
  if (targets.empty() || targets.size() > 2)
    throw std::invalid_argument("UnitarySpec: expected 1 or 2 targets");
  const int dim = 1 << targets.size();
  if (matrix.rows() != dim || matrix.cols() != dim)
    throw std::invalid_argument("UnitarySpec: matrix dimension does not match target count");
  if (!is_unitary(matrix)) throw std::invalid_argument("UnitarySpec: matrix is not unitary");
}

KrausChannel::KrausChannel(std::vector<Matrix> ops, std::vector<int> t)
    : operators(std::move(ops)), targets(std::move(t)) {
  if (operators.empty()) throw std::invalid_argument("KrausChannel: no operators");
  if (targets.empty() || targets.size() > 2)
    throw std::invalid_argument("KrausChannel: expected 1 or 2 targets");
  const int dim = 1 << targets.size();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix& a : operators) {
    if (a.rows() != dim || a.cols() != dim)
      throw std::invalid_argument("KrausChannel: operator dimension mismatch");
    sum += a.adjoint() * a;
  }
  if (max_abs_diff(sum, Matrix::Identity(dim, dim)) > kUnitaryTol)
    throw std::invalid_argument("KrausChannel: operators are not trace preserving");
}

QuantumState apply_unitary(const QuantumState& state, const UnitarySpec& u) {
  const Matrix full = embed(u.matrix, u.targets, state.num_qubits());
  QuantumState out = state;
  if (out.pure_) {
    out.vec_ = full * out.vec_;
  } else {
    out.rho_ = full * out.rho_ * full.adjoint();
  }
  if (kValidateAfterOps) out.validate();
  return out;
}

QuantumState apply_channel(const QuantumState& state, const KrausChannel& ch) {
  QuantumState out = state;
  out.densify();
  Matrix next = Matrix::Zero(out.dim(), out.dim());
  for (const Matrix& a : ch.operators) {
    const Matrix full = embed(a, ch.targets, out.num_qubits());
    next += full * out.rho_ * full.adjoint();
  }
  out.rho_ = next;
  if (kValidateAfterOps) out.validate();
  return out;
}

QuantumState dephase_qubit(const QuantumState& state, int qubit) {
  if (qubit < 0 || qubit >= state.num_qubits())
    throw std::out_of_range("dephase_qubit: qubit out of range");
  QuantumState out = state;
  out.densify();
  const int mask = 1 << qubit;
  for (int i = 0; i < out.dim(); ++i)
    for (int j = 0; j < out.dim(); ++j)
      if ((i & mask) != (j & mask)) out.rho_(i, j) = 0.0;
  if (kValidateAfterOps) out.validate();
  return out;
}

std::vector<double> measure_probabilities(const QuantumState& state) {
  std::vector<double> probs(state.dim());
  if (state.is_pure_representation()) {
    const Vector& v = state.amplitudes();
    for (int i = 0; i < state.dim(); ++i) probs[i] = std::norm(v(i));
  } else {
    const Matrix rho = state.density_matrix();
    for (int i = 0; i < state.dim(); ++i) probs[i] = rho(i, i).real();
  }
  double sum = 0.0;
  for (double& p : probs) {
    if (p < 0.0) {
      if (p < -kPositivitySlack) throw std::runtime_error("measure_probabilities: negative probability");
      p = 0.0;
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kStateTol)
    throw std::runtime_error("measure_probabilities: probabilities do not sum to 1");
  return probs;
}

std::uint32_t sample_outcome(const std::vector<double>& probs, double u) {
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<std::uint32_t>(i);
  }
  return static_cast<std::uint32_t>(probs.size() - 1);
}

std::pair<double, QuantumState> project_qubit(const QuantumState& state, int qubit, int value) {
  if (qubit < 0 || qubit >= state.num_qubits())
    throw std::out_of_range("project_qubit: qubit out of range");
  if (value != 0 && value != 1) throw std::invalid_argument("project_qubit: value must be 0 or 1");
  const Matrix rho = state.density_matrix();
  const int dim = state.dim();
  const int mask = 1 << qubit;
  Matrix proj = Matrix::Zero(dim, dim);
  double prob = 0.0;
  for (int i = 0; i < dim; ++i) {
    if (((i & mask) != 0) != (value != 0)) continue;
    prob += rho(i, i).real();
    for (int j = 0; j < dim; ++j)
      if (((j & mask) != 0) == (value != 0)) proj(i, j) = rho(i, j);
  }
  if (prob < 1e-15) throw std::runtime_error("project_qubit: outcome has zero probability");
  return {prob, QuantumState::density(state.num_qubits(), proj / prob)};
}

QuantumState trace_out_qubit(const QuantumState& state, int qubit) {
  if (state.num_qubits() < 2) throw std::invalid_argument("trace_out_qubit: need at least 2 qubits");
  if (qubit < 0 || qubit >= state.num_qubits())
    throw std::out_of_range("trace_out_qubit: qubit out of range");
  const Matrix rho = state.density_matrix();
  const int n = state.num_qubits();
  const int small_dim = 1 << (n - 1);
  const int low_mask = (1 << qubit) - 1;
  auto expand = [&](int idx, int bit) {
    return (idx & low_mask) | (bit << qubit) | ((idx & ~low_mask) << 1);
  };
  Matrix out = Matrix::Zero(small_dim, small_dim);
  for (int i = 0; i < small_dim; ++i)
    for (int j = 0; j < small_dim; ++j)
      out(i, j) = rho(expand(i, 0), expand(j, 0)) + rho(expand(i, 1), expand(j, 1));
  return QuantumState::density(n - 1, out);
}

std::vector<std::uint32_t> sample_shots(const QuantumState& state, int shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_shots: shots must be >= 1");
  const std::vector<double> probs = measure_probabilities(state);
  const RngStream rng(seed);
  std::vector<std::uint32_t> out(static_cast<std::size_t>(shots));
  for (int i = 0; i < shots; ++i)
    out[static_cast<std::size_t>(i)] = sample_outcome(probs, rng.uniform_at(static_cast<std::uint64_t>(i)));
  return out;
}

}  // namespace ft422
