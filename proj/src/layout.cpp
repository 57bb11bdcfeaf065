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

#include "qed/layout.hpp"

namespace qed {

int QubitLayout::qubit_with_label(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); i++) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  return -1;
}

QubitLayout raven_layout() {
  QubitLayout l;
  l.name = "raven";
  l.n_qubits = 5;
  l.cnot_edges = {{2, 0}, {2, 1}, {3, 2}, {2, 4}, {3, 4}, {1, 0}};
  l.labels = {"A", "1", "4", "2", "3"};
  return l;
}

QubitLayout sparrow_layout() {
  QubitLayout l;
  l.name = "sparrow";
  l.n_qubits = 5;
  l.cnot_edges = {{0, 2}, {1, 2}, {3, 2}, {4, 2}, {3, 4}, {0, 1}};
  l.labels = {"A", "1", "4", "2", "3"};
  return l;
}

}  // namespace qed
