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

#include <optional>
#include <string>
#include <vector>

#include "qed/gate.hpp"
#include "qed/layout.hpp"
#include "qed/pauli.hpp"

namespace qed {

/// Accept a shot iff the ancilla qubit (when set) read 0 and the parity of the
/// listed qubits' readout bits is even.
struct PostselectRule {
  int ancilla_qubit = -1;  // -1: no ancilla check
  std::vector<int> parity_qubits;

  bool operator==(const PostselectRule&) const = default;
};

/// Maps an accepted raw readout to logical bits: logical bit j is the XOR of
/// the readout bits of bit_sources[j]. Empty means identity (readout bits in
/// measurement order).
struct ReadoutMap {
  std::vector<std::vector<int>> bit_sources;

  bool operator==(const ReadoutMap&) const = default;
};

/// Marks a span of gate locations that together realize one SWAP, so fault
/// enumeration can also treat the block as a single two-qubit component.
struct SwapBlock {
  int first_location = 0;
  int last_location = 0;
  int a = -1;
  int b = -1;
};

/// A `barrier` statement, kept only for source fidelity.
struct BarrierMark {
  int before_location = 0;   // barrier sits before the gate with this location
  std::vector<int> qubits;   // empty: whole register

  bool operator==(const BarrierMark&) const = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }

  Gate& append(GateKind kind, int q0, int q1 = -1);
  /// Appends the three-CNOT SWAP realization and records the block.
  void append_swap_expanded(int a, int b);
  void append_barrier(std::vector<int> qubits = {});

  /// Qubits with a MeasureZ, in gate order. A qubit may be measured once.
  std::vector<int> measured_qubits() const;
  /// Position of this qubit's measurement in readout order, or -1.
  int readout_index(int qubit) const;

  int count(GateKind kind) const;

  std::optional<PostselectRule> postselect;
  ReadoutMap readout;
  std::vector<SwapBlock> swap_blocks;
  std::vector<BarrierMark> barriers;
  /// Readout bits to invert after measurement (used for fault injection).
  std::vector<int> readout_flips;

 private:
  int n_qubits_ = 0;
  std::vector<Gate> gates_;
  int next_location_ = 0;
};

/// Gate-stream equality: same register width, gates, barriers, post-selection
/// rule and readout map. Locations are implied by order; readout_flips are
/// simulation-local and ignored.
bool structurally_equal(const Circuit& a, const Circuit& b);

struct LayoutViolation {
  int location;
  int control;
  int target;
};

struct ValidationReport {
  std::vector<LayoutViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Lists every CNOT whose (control, target) is not an edge of the layout.
/// SWAPs are checked as a CNOT in the a->b direction (their expansion).
ValidationReport validate_circuit(const Circuit& c, const QubitLayout& layout);

/// cx a,b ; h a ; h b ; cx a,b ; h a ; h b ; cx a,b  == SWAP(a, b).
std::vector<Gate> decompose_swap(int a, int b);

/// h t ; cx c,t ; h t  == CZ(c, t).
std::vector<Gate> decompose_cz(int ctrl, int tgt);

/// QASM instruction count for a bare circuit: native gates + measurements + 3
/// header statements (version, qreg, creg). Physical SWAPs are flagged since a
/// bare SWAP should be a software relabeling.
int instruction_count(const Circuit& c, std::vector<std::string>* warnings = nullptr);

/// Conjugates p through a unitary Clifford gate: p -> G p G^dagger.
/// Throws on T/Tdg and non-unitary kinds.
void conjugate_through(PauliString& p, const Gate& g);

}  // namespace qed
