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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qed/circuit.hpp"
#include "qed/distribution.hpp"
#include "qed/layout.hpp"
#include "qed/pauli.hpp"
#include "qed/statevector.hpp"

namespace qed::code422 {

// The chip's q0 is the verification ancilla; data qubits carry code positions
// 1..4 as q1->1, q3->2, q4->3, q2->4.
inline constexpr int kAncilla = 0;
inline constexpr int kPositionToChip[5] = {-1, 1, 3, 4, 2};  // code position -> chip qubit
inline constexpr int kChipToPosition[5] = {0, 1, 4, 2, 3};   // chip qubit -> code position
inline constexpr int kDataQubits[4] = {1, 2, 3, 4};         // chip order

/// Code operators over the 4 data qubits in code-position order 1..4.
PauliString stabilizer_x();  // XXXX
PauliString stabilizer_z();  // ZZZZ
PauliString logical_x(int which);  // X1 on positions (1,3); X2 on (1,2)
PauliString logical_z(int which);  // Z1 on positions (1,2); Z2 on (1,3)

/// Same operators embedded on the 5-qubit chip register (identity on q0).
PauliString on_chip(const PauliString& data_op);

/// Codeword |b1 b2>_L over the 4 data qubits in code-position order.
StateVector logical_codeword(int b1, int b2);
/// Codeword embedded on the chip: ancilla bit on q0, data permuted into place.
StateVector codeword_on_chip(int b1, int b2, int ancilla_bit = 0);
/// Embeds any 4-qubit data state (code-position order) on the chip register.
StateVector embed_on_chip(const StateVector& data_state, int ancilla_bit = 0);

enum class PrepVariant {
  FTv1,
  FTv2,
  NFT,
  ZeroPlus,
  LogicalBell,
  Sparrow00,
  SparrowZeroPlus,
  SparrowBell,
};

const char* variant_name(PrepVariant v);
std::optional<PrepVariant> variant_from_name(const std::string& name);
std::vector<PrepVariant> all_variants();
/// Variants compatible with a layout name ("raven"/"sparrow").
std::vector<PrepVariant> variants_for_layout(const QubitLayout& layout);

/// The state the variant prepares, over the 4 data qubits in code-position
/// order (|00>_L, |0+>_L or (|00>_L + |11>_L)/sqrt(2)).
StateVector intended_state(PrepVariant v);

/// The variant's published gate sequence, SWAPs expanded. The returned
/// circuit preps all 5 chip qubits and measures the ancilla when the
/// variant uses one; its post-selection rule covers the ancilla only.
Circuit prep_circuit(PrepVariant v, const QubitLayout& layout);

enum class LogicalGate { X1, X2, Z1, Z2, HHSwap, CZ };

const char* logical_gate_name(LogicalGate g);

/// Transversal realization on the chip data qubits.
std::vector<Gate> logical_gate(LogicalGate g);

enum class InitialState { Zero00, ZeroPlus, Bell };

struct EncodedTask {
  int row = 0;  // 1-based catalog row
  InitialState initial;
  std::vector<LogicalGate> word;  // in application order (first applied first)
  std::string final_label;
  int bare_instructions = 0;      // catalog value, fixed by the bare synthesis
  OutcomeDistribution ideal;      // over the 2 logical bits
};

/// All 20 catalog tasks with exact ideal distributions.
const std::vector<EncodedTask>& catalog_tasks();

/// Applies the word to the 2-qubit initial state (bare reference semantics).
StateVector bare_final_state(InitialState initial, const std::vector<LogicalGate>& word);

/// True if the prep variant prepares this task's initial state.
bool prep_matches_initial(PrepVariant v, InitialState initial);
/// Default prep for an initial state on a layout (|00>_L prep selectable).
PrepVariant prep_for_initial(InitialState initial, const QubitLayout& layout,
                             PrepVariant zero_prep);

/// prep + transversal word + data measurements, with the full post-selection
/// rule (ancilla = 0 when present, even 4-bit parity) and the logical readout
/// map b1 = q1^q3, b2 = q1^q4 (code positions 1^2 and 1^3).
Circuit build_encoded_run(const EncodedTask& task, PrepVariant prep,
                          const QubitLayout& layout);

/// Odd parity rejects; else b1 = bits[p1]^bits[p2], b2 = bits[p1]^bits[p3]
/// where bits are the 4 data readout bits in code-position order.
std::optional<std::string> decode_outcome(const std::array<int, 4>& data_bits);

}  // namespace qed::code422
