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
#include <vector>

#include "qed/circuit.hpp"
#include "qed/distribution.hpp"
#include "qed/statevector.hpp"
#include "qed/tableau.hpp"

namespace qed {

/// One measurement branch of an exact run. `bits` are the recorded readout
/// bits in measurement order, after readout_flips.
struct StateBranch {
  StateVector state;
  double probability = 1.0;
  std::vector<uint8_t> bits;
};

/// Applies the circuit exactly; measurements branch the state into an
/// ensemble. Branch probabilities sum to 1 (up to pruning of zero branches).
std::vector<StateBranch> statevec_run(const Circuit& c, const StateVector* initial = nullptr);

struct TableauBranch {
  StabilizerTableau tableau;
  double probability = 1.0;
  std::vector<uint8_t> bits;
  std::vector<uint8_t> random_flags;  // 1 where the measurement was random
};

/// Exact branching over random measurement outcomes. Clifford circuits only.
std::vector<TableauBranch> tableau_run_branches(const Circuit& c);

struct TableauRunResult {
  StabilizerTableau tableau;
  std::vector<uint8_t> bits;
  std::vector<uint8_t> random_flags;
};

/// Single stochastic trajectory; random measurement outcomes from the seed.
TableauRunResult tableau_run(const Circuit& c, uint64_t seed);

/// Evaluates the circuit's post-selection rule on recorded bits.
bool shot_accepted(const Circuit& c, const std::vector<uint8_t>& bits);

/// Applies the circuit's readout map to recorded bits.
std::string logical_key(const Circuit& c, const std::vector<uint8_t>& bits);

enum class Backend { Statevector, Tableau };

struct ExactDistributionResult {
  OutcomeDistribution raw;      // over recorded readout bits
  double acceptance = 1.0;
  OutcomeDistribution logical;  // post-selected, readout-mapped, renormalized
  bool degenerate = false;      // acceptance ~ 0; logical is empty
};

ExactDistributionResult exact_distribution(const Circuit& c,
                                           Backend backend = Backend::Statevector);

/// TVD disagreement between the two exact backends (max over the raw and
/// post-selected logical distributions).
double cross_check(const Circuit& c);

}  // namespace qed
