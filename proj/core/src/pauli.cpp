// SPDX-License-Identifier: Apache-2.0
#include "ft422/pauli.hpp"

#include <bit>
#include <stdexcept>

#include "ft422/gates.hpp"

namespace ft422 {

PauliString PauliString::parse(int n, const std::string& spec) {
  PauliString p = identity(n);
  std::size_t i = 0;
  while (i < spec.size()) {
    const char c = spec[i];
    if (c != 'X' && c != 'Y' && c != 'Z' && c != 'I')
      throw std::invalid_argument("PauliString::parse: bad operator letter in " + spec);
    ++i;
    if (i >= spec.size() || spec[i] < '1' || spec[i] > '9')
      throw std::invalid_argument("PauliString::parse: missing qubit number in " + spec);
    const int q = spec[i] - '1';
    ++i;
    if (q >= n) throw std::out_of_range("PauliString::parse: qubit out of range in " + spec);
    if (c == 'X' || c == 'Y') p.x_mask ^= 1u << q;
    if (c == 'Z' || c == 'Y') p.z_mask ^= 1u << q;
  }
  return p;
}

bool PauliString::commutes_with(const PauliString& other) const {
  const int overlap = std::popcount(x_mask & other.z_mask) + std::popcount(z_mask & other.x_mask);
  return overlap % 2 == 0;
}

int PauliString::weight() const { return std::popcount(x_mask | z_mask); }

PauliString PauliString::times(const PauliString& other) const {
  return {num_qubits, x_mask ^ other.x_mask, z_mask ^ other.z_mask};
}

Matrix PauliString::matrix() const {
  Matrix out = Matrix::Identity(1, 1);
  // Build most-significant qubit first so register qubit 0 is the LSB.
  for (int q = num_qubits - 1; q >= 0; --q) {
    const bool xb = (x_mask >> q) & 1;
    const bool zb = (z_mask >> q) & 1;
    Matrix f;
    if (xb && zb)
      f = gates::y();
    else if (xb)
      f = gates::x();
    else if (zb)
      f = gates::z();
    else
      f = gates::identity();
    out = kron(out, f);
  }
  return out;
}

std::string PauliString::label() const {
  std::string s;
  for (int q = 0; q < num_qubits; ++q) {
    const bool xb = (x_mask >> q) & 1;
    const bool zb = (z_mask >> q) & 1;
    if (!xb && !zb) continue;
    s += xb && zb ? 'Y' : (xb ? 'X' : 'Z');
    s += static_cast<char>('1' + q);
  }
  return s.empty() ? "I" : s;
}

}  // namespace ft422
