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

#include <string>
#include <utility>
#include <vector>

namespace qed {

/// Directed CNOT-connectivity graph of a chip, plus the qubit labeling used
/// by the code (ancilla "A" and data "1".."4").
struct QubitLayout {
  std::string name;
  int n_qubits = 0;
  std::vector<std::pair<int, int>> cnot_edges;  // control -> target
  std::vector<std::string> labels;              // physical index -> label

  bool has_edge(int control, int target) const {
    for (const auto& [c, t] : cnot_edges) {
      if (c == control && t == target) return true;
    }
    return false;
  }

  /// Physical qubit carrying a label, or -1.
  int qubit_with_label(const std::string& label) const;

  /// All unordered connected pairs, each reported once as (control, target)
  /// per available direction.
  std::vector<std::pair<int, int>> directed_pairs() const { return cnot_edges; }
};

/// Five-qubit chip with edges 2->0, 2->1, 3->2, 2->4, 3->4, 1->0.
QubitLayout raven_layout();

/// Five-qubit chip with edges 0->2, 1->2, 3->2, 4->2, 3->4, 0->1.
QubitLayout sparrow_layout();

}  // namespace qed
