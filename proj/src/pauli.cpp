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

#include "qed/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qed {

namespace {
int popcount(uint32_t v) { return std::popcount(v); }
}  // namespace

PauliString::PauliString(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("PauliString: unsupported qubit count");
  }
}

PauliString PauliString::identity(int n_qubits) { return PauliString(n_qubits); }

PauliString PauliString::from_label(std::string_view label) {
  int phase_exp = 0;
  if (!label.empty() && (label[0] == '+' || label[0] == '-')) {
    bool neg = label[0] == '-';
    label.remove_prefix(1);
    if (!label.empty() && label[0] == 'i') {
      phase_exp = neg ? 3 : 1;
      label.remove_prefix(1);
    } else {
      phase_exp = neg ? 2 : 0;
    }
  }
  PauliString p(static_cast<int>(label.size()));
  for (size_t q = 0; q < label.size(); q++) {
    p.set_letter(static_cast<int>(q), label[q]);
  }
  p.phase_pow = static_cast<uint8_t>((p.phase_pow + phase_exp) & 3);
  return p;
}

PauliString PauliString::single(int n_qubits, int qubit, char letter) {
  PauliString p(n_qubits);
  p.set_letter(qubit, letter);
  return p;
}

char PauliString::letter(int q) const {
  bool xb = x(q), zb = z(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

void PauliString::set_letter(int q, char c) {
  if (q < 0 || q >= n_) throw std::out_of_range("PauliString::set_letter");
  int phase_before = phase_exponent();
  uint32_t mask = 1u << q;
  x_bits &= ~mask;
  z_bits &= ~mask;
  switch (c) {
    case 'I':
      break;
    case 'X':
      x_bits |= mask;
      break;
    case 'Y':
      x_bits |= mask;
      z_bits |= mask;
      break;
    case 'Z':
      z_bits |= mask;
      break;
    default:
      throw std::invalid_argument("PauliString: bad letter");
  }
  // Re-anchor the raw exponent so the letter-relative phase is unchanged.
  int n_y = popcount(x_bits & z_bits);
  phase_pow = static_cast<uint8_t>((phase_before + n_y) & 3);
}

int PauliString::phase_exponent() const {
  int n_y = popcount(x_bits & z_bits);
  return (phase_pow - n_y) & 3;
}

std::complex<double> PauliString::phase() const {
  static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_exponent()];
}

int PauliString::weight() const { return popcount(x_bits | z_bits); }
int PauliString::x_weight() const { return popcount(x_bits); }
int PauliString::z_weight() const { return popcount(z_bits); }

bool PauliString::is_identity() const { return x_bits == 0 && z_bits == 0; }

PauliString PauliString::operator*(const PauliString& rhs) const {
  return pauli_mul(*this, rhs);
}

bool PauliString::commutes_with(const PauliString& other) const {
  return commutes(*this, other);
}

bool PauliString::operator==(const PauliString& other) const {
  return n_ == other.n_ && x_bits == other.x_bits && z_bits == other.z_bits &&
         phase_pow == other.phase_pow;
}

bool PauliString::equal_up_to_phase(const PauliString& other) const {
  return n_ == other.n_ && x_bits == other.x_bits && z_bits == other.z_bits;
}

std::string PauliString::str() const {
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  std::string out = prefix[phase_exponent()];
  for (int q = 0; q < n_; q++) out.push_back(letter(q));
  return out;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("pauli_mul: width mismatch");
  }
  PauliString out(a.n_qubits());
  // Reordering Z^{z_a} past X^{x_b} contributes (-1) per overlapping qubit.
  int k = a.phase_pow + b.phase_pow + 2 * std::popcount(a.z_bits & b.x_bits);
  out.x_bits = a.x_bits ^ b.x_bits;
  out.z_bits = a.z_bits ^ b.z_bits;
  out.phase_pow = static_cast<uint8_t>(k & 3);
  return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("commutes: width mismatch");
  }
  int parity = std::popcount(a.x_bits & b.z_bits) + std::popcount(a.z_bits & b.x_bits);
  return (parity & 1) == 0;
}

}  // namespace qed
