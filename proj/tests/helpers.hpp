// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ft422/state.hpp"

namespace ft422::testing {

inline constexpr double kPi = std::numbers::pi;

inline void check_states_close(const QuantumState& a, const QuantumState& b, double tol = 1e-10) {
  REQUIRE(a.num_qubits() == b.num_qubits());
  CHECK(max_abs_diff(a.density_matrix(), b.density_matrix()) < tol);
}

inline void check_tables_close(const std::vector<double>& a, const std::vector<double>& b,
                               double tol = 1e-10) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < tol);
}

// Pure-state overlap |<a|b>|^2 where b may be mixed.
inline double fidelity_to(const QuantumState& pure_target, const QuantumState& state) {
  const Vector t = pure_target.amplitudes();
  return ((t.adjoint() * state.density_matrix() * t)(0, 0)).real();
}

}  // namespace ft422::testing
