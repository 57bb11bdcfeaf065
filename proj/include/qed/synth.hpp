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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qed/circuit.hpp"
#include "qed/code422.hpp"
#include "qed/distribution.hpp"
#include "qed/exec.hpp"
#include "qed/layout.hpp"
#include "qed/statevector.hpp"

namespace qed::synth {

struct TargetState {
  int row = 0;
  StateVector state;           // 2-qubit target, fixed global phase
  OutcomeDistribution ideal;   // exact outcome probabilities
  std::string label;
};

/// The 20 catalog targets, obtained by applying each catalog word to its
/// initial state. Throws if the targets are not pairwise distinct up to
/// global phase.
std::vector<TargetState> enumerate_targets();

/// One directed qubit pair of a layout, e.g. control 2 -> target 0.
struct DirectedPair {
  int control = 0;
  int target = 1;
  std::string name() const {
    return std::to_string(control) + "-" + std::to_string(target);
  }
};

/// Catalog: initial-state preparation followed by bare translations of each
/// word gate (software swaps, CZ via h-cx-h), every component minimal - the
/// circuit family behind the catalog's instruction counts. Minimal: free
/// breadth-first search by total gate count, which undercuts the catalog on
/// the rows where cross-word identities exist (e.g. h-cx-h preparing CZ|++>).
enum class Strategy { Catalog, Minimal };

struct SynthOptions {
  Strategy strategy = Strategy::Catalog;
  /// Restrict the search to Clifford gates, pruning non-stabilizer
  /// intermediate states. The full native set (with t/tdg) is the default.
  bool clifford_only = false;
  /// Gates removed from the native set (ablation experiments).
  std::set<GateKind> excluded;
  int max_gates = 8;
  uint64_t node_limit = 8000000;
  ExecMode mode = ExecMode::Parallel;
};

struct SynthesisResult {
  int row = 0;
  Circuit circuit;       // preparation + both measurements, 2 qubits
  int gate_count = 0;
  int instructions = 0;  // instruction_count of the circuit
  uint64_t states_expanded = 0;
};

/// Synthesizes all 20 rows on a pair. The native set is h s sdg t tdg x y z
/// per qubit plus cx along the available direction(s); searches run by gate
/// count over states reachable from |00>, shared across targets.
std::map<int, SynthesisResult> synth_all(const QubitLayout& layout, DirectedPair pair,
                                         const SynthOptions& opts = {});

/// Minimum-gate-count circuit whose final state equals the target up to
/// global phase (free search, regardless of opts.strategy).
SynthesisResult synth_min_circuit(const TargetState& target, const QubitLayout& layout,
                                  DirectedPair pair, const SynthOptions& opts = {});

/// Number of two-qubit stabilizer states reachable with the Clifford set
/// (the dedup space of the pruned search).
size_t stabilizer_state_count(const QubitLayout& layout, DirectedPair pair);

struct CatalogCountRow {
  int row = 0;
  std::string label;
  int expected = 0;
  int found = 0;             // catalog-strategy instruction count
  int minimal = 0;           // free-search instruction count (<= found)
  bool count_match = false;
  bool distribution_match = false;
};

struct CatalogCountReport {
  std::vector<CatalogCountRow> rows;
  bool all_match = false;
  uint64_t states_expanded = 0;
};

/// Checks every catalog-strategy instruction count against the catalog
/// values and every exact output distribution against the task's ideal one;
/// also reports the free-search minimum per row.
CatalogCountReport verify_catalog_counts(const QubitLayout& layout, DirectedPair pair,
                           const SynthOptions& opts = {});

}  // namespace qed::synth
