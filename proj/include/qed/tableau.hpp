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

#include <cstdint>
#include <optional>
#include <vector>

#include "qed/circuit.hpp"
#include "qed/pauli.hpp"

namespace qed {

/// Aaronson-Gottesman stabilizer tableau: rows 0..n-1 are destabilizers,
/// rows n..2n-1 stabilizers. Row phases are powers of i; generator rows stay
/// at 0 or 2 (sign +/-).
class StabilizerTableau {
 public:
  StabilizerTableau() = default;
  explicit StabilizerTableau(int n_qubits);  // |0...0>

  int n_qubits() const { return n_; }

  void apply_gate(const Gate& g);  // Clifford unitaries and Prep0 only
  void apply_pauli(const PauliString& p);

  struct MeasureResult {
    int bit;
    bool random;
  };
  /// Z measurement. For a random outcome, `forced` selects the branch when
  /// in [0, 1]; otherwise the caller-provided coin is used.
  MeasureResult measure_z(int q, int forced = -1, int coin = 0);
  /// True if a Z measurement of q would have a deterministic outcome.
  bool is_deterministic_z(int q) const;

  /// +1/-1 if the observable has a definite value on this state, nullopt if
  /// the measurement outcome would be random.
  std::optional<int> deterministic_sign(const PauliString& p) const;

  /// Stabilizer generator as a PauliString (index 0..n-1).
  PauliString stabilizer(int i) const;

  bool check_invariants() const;  // symplectic + commutation structure

 private:
  struct Row {
    uint32_t x = 0;
    uint32_t z = 0;
    uint8_t phase = 0;  // power of i
  };
  void rowsum(Row& h, const Row& i) const;
  static bool anticommutes(const Row& a, const Row& b);

  int n_ = 0;
  std::vector<Row> rows_;
};

}  // namespace qed
