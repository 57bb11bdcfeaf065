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

#include "qed/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qed {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("StateVector: unsupported qubit count");
  }
  amps_.assign(size_t{1} << n_qubits, cdouble(0, 0));
  amps_[0] = 1.0;
}

StateVector StateVector::computational_basis(int n_qubits, uint32_t bits_msb_q0) {
  StateVector sv(n_qubits);
  sv.amps_[0] = 0.0;
  sv.amps_[bits_msb_q0] = 1.0;
  return sv;
}

void StateVector::apply_gate(const Gate& g) {
  const uint32_t m0 = qubit_mask(g.q0);
  switch (g.kind) {
    case GateKind::H:
      for (size_t i = 0; i < amps_.size(); i++) {
        if (i & m0) continue;
        cdouble a = amps_[i], b = amps_[i | m0];
        amps_[i] = (a + b) * kInvSqrt2;
        amps_[i | m0] = (a - b) * kInvSqrt2;
      }
      break;
    case GateKind::S:
      for (size_t i = 0; i < amps_.size(); i++) {
        if (i & m0) amps_[i] *= cdouble(0, 1);
      }
      break;
    case GateKind::Sdg:
      for (size_t i = 0; i < amps_.size(); i++) {
        if (i & m0) amps_[i] *= cdouble(0, -1);
      }
      break;
    case GateKind::T:
      for (size_t i = 0; i < amps_.size(); i++) {
        if (i & m0) amps_[i] *= cdouble(kInvSqrt2, kInvSqrt2);
      }
      break;
    case GateKind::Tdg:
      for (size_t i = 0; i < amps_.size(); i++) {
        if (i & m0) amps_[i] *= cdouble(kInvSqrt2, -kInvSqrt2);
      }
      break;
    case GateKind::X:
      for (size_t i = 0; i < amps_.size(); i++) {
        if (i & m0) continue;
        std::swap(amps_[i], amps_[i | m0]);
      }
      break;
    case GateKind::Y:
      for (size_t i = 0; i < amps_.size(); i++) {
        if (i & m0) continue;
        cdouble a = amps_[i], b = amps_[i | m0];
        amps_[i] = cdouble(0, -1) * b;
        amps_[i | m0] = cdouble(0, 1) * a;
      }
      break;
    case GateKind::Z:
      for (size_t i = 0; i < amps_.size(); i++) {
        if (i & m0) amps_[i] = -amps_[i];
      }
      break;
    case GateKind::CNOT: {
      const uint32_t m1 = qubit_mask(g.q1);
      for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & m0) && !(i & m1)) std::swap(amps_[i], amps_[i | m1]);
      }
      break;
    }
    case GateKind::SWAP: {
      const uint32_t m1 = qubit_mask(g.q1);
      for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & m0) && !(i & m1)) std::swap(amps_[i], amps_[(i ^ m0) | m1]);
      }
      break;
    }
    case GateKind::Prep0:
      // Qubits start in |0>; preparation is a no-op for pre-measurement runs.
      break;
    default:
      throw std::invalid_argument("StateVector::apply_gate: measurement handled by runner");
  }
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.n_qubits() != n_) throw std::invalid_argument("apply_pauli: width mismatch");
  uint32_t x_amp = 0, z_amp = 0;
  for (int q = 0; q < n_; q++) {
    if (p.x(q)) x_amp |= qubit_mask(q);
    if (p.z(q)) z_amp |= qubit_mask(q);
  }
  static const cdouble i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cdouble ph = i_pow[p.phase_pow & 3];
  std::vector<cdouble> out(amps_.size());
  for (size_t i = 0; i < amps_.size(); i++) {
    cdouble v = amps_[i] * ph;
    if (std::popcount(static_cast<uint32_t>(i) & z_amp) & 1) v = -v;
    out[i ^ x_amp] = v;
  }
  amps_ = std::move(out);
}

double StateVector::prob_one(int q) const {
  const uint32_t m = qubit_mask(q);
  double p = 0;
  for (size_t i = 0; i < amps_.size(); i++) {
    if (i & m) p += std::norm(amps_[i]);
  }
  return p;
}

double StateVector::collapse(int q, int bit) {
  const uint32_t m = qubit_mask(q);
  double p = 0;
  for (size_t i = 0; i < amps_.size(); i++) {
    bool one = (i & m) != 0;
    if (one == (bit != 0)) {
      p += std::norm(amps_[i]);
    } else {
      amps_[i] = 0;
    }
  }
  if (p > 0) {
    double s = 1.0 / std::sqrt(p);
    for (auto& a : amps_) a *= s;
  }
  return p;
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  double s = norm();
  if (s == 0) throw std::runtime_error("StateVector::normalize: zero state");
  for (auto& a : amps_) a /= s;
}

cdouble StateVector::inner(const StateVector& other) const {
  if (other.n_ != n_) throw std::invalid_argument("inner: width mismatch");
  cdouble s = 0;
  for (size_t i = 0; i < amps_.size(); i++) s += std::conj(amps_[i]) * other.amps_[i];
  return s;
}

double StateVector::fidelity(const StateVector& other) const {
  return std::abs(inner(other));
}

cdouble StateVector::expectation(const PauliString& p) const {
  StateVector moved = *this;
  moved.apply_pauli(p);
  return inner(moved);
}

}  // namespace qed
