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
#include <vector>

#include "qed/circuit.hpp"
#include "qed/pauli.hpp"

namespace qed {

using cdouble = std::complex<double>;

/// Dense state of n qubits. Amplitude index bit (n-1-q) holds qubit q, so the
/// index read in binary from the left is |q0 q1 ... q_{n-1}>.
class StateVector {
 public:
  StateVector() = default;
  /// |0...0>
  explicit StateVector(int n_qubits);

  static StateVector computational_basis(int n_qubits, uint32_t bits_msb_q0);

  int n_qubits() const { return n_; }
  size_t dim() const { return amps_.size(); }
  cdouble& amp(size_t i) { return amps_[i]; }
  const cdouble& amp(size_t i) const { return amps_[i]; }

  uint32_t qubit_mask(int q) const { return 1u << (n_ - 1 - q); }

  void apply_gate(const Gate& g);  // unitary kinds only
  void apply_pauli(const PauliString& p);

  /// Probability that measuring qubit q in the Z basis yields 1.
  double prob_one(int q) const;
  /// Projects onto outcome `bit` for qubit q and renormalizes.
  /// Returns the branch probability.
  double collapse(int q, int bit);

  double norm() const;
  void normalize();
  cdouble inner(const StateVector& other) const;
  /// |<this|other>|, i.e. fidelity amplitude up to global phase.
  double fidelity(const StateVector& other) const;
  cdouble expectation(const PauliString& p) const;

 private:
  int n_ = 0;
  std::vector<cdouble> amps_;
};

}  // namespace qed
