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
#include <string>
#include <vector>

namespace qed {

/// Probabilities over classical bitstrings. Keys are strings of '0'/'1';
/// bit_qubits names the qubit behind each position (may be empty for logical
/// outcomes).
struct OutcomeDistribution {
  std::vector<int> bit_qubits;
  std::map<std::string, double> probabilities;

  double prob(const std::string& key) const {
    auto it = probabilities.find(key);
    return it == probabilities.end() ? 0.0 : it->second;
  }
  double total() const;
};

/// Total variation distance; keys missing on a side count as probability 0.
double tvd(const OutcomeDistribution& a, const OutcomeDistribution& b);

struct ShotCounts {
  std::map<std::string, uint64_t> counts;
  uint64_t total_shots = 0;
  uint64_t n_valid = 0;

  uint64_t count(const std::string& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
  }
};

/// Multinomial sample, reproducible for a given seed.
ShotCounts sample(const OutcomeDistribution& d, uint64_t shots, uint64_t seed);

}  // namespace qed
