// Copyright 2026 The qed422 authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace qed {

constexpr int kMaxQubits = 16;

/// An n-qubit Pauli operator stored as i^k * prod_q X_q^{x_q} Z_q^{z_q}.
///
/// The phase reported to callers is relative to the I/X/Y/Z letter string,
/// so that e.g. X*Z on the same qubit reads as "-i Y".
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n_qubits);

  static PauliString identity(int n_qubits);
  /// Builds from a label such as "XXII", "-ZZ", "+iXY". Throws on bad input.
  static PauliString from_label(std::string_view label);
  /// Single-letter Pauli ('X', 'Y' or 'Z') on one qubit of an n-qubit register.
  static PauliString single(int n_qubits, int qubit, char letter);

  int n_qubits() const { return n_; }
  bool x(int q) const { return (x_bits >> q) & 1u; }
  bool z(int q) const { return (z_bits >> q) & 1u; }
  char letter(int q) const;
  /// Overwrites the letter on one qubit, preserving the letter-relative phase.
  void set_letter(int q, char letter);

  /// Phase as a power of i (0..3), relative to the letter string.
  int phase_exponent() const;
  std::complex<double> phase() const;

  int weight() const;
  int x_weight() const;
  int z_weight() const;
  bool is_identity() const;  // all letters I; phase may still be nontrivial

  PauliString operator*(const PauliString& rhs) const;
  bool commutes_with(const PauliString& other) const;

  bool operator==(const PauliString& other) const;
  bool equal_up_to_phase(const PauliString& other) const;

  std::string str() const;

  // Raw symplectic representation. phase_pow is the exponent k in
  // i^k X^x Z^z, not the letter-relative phase.
  uint32_t x_bits = 0;
  uint32_t z_bits = 0;
  uint8_t phase_pow = 0;

 private:
  int n_ = 0;
};

/// Group product with phase bookkeeping. Throws on width mismatch.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

/// True iff the symplectic inner product of the (x, z) masks vanishes.
/// Throws on width mismatch.
bool commutes(const PauliString& a, const PauliString& b);

}  // namespace qed
