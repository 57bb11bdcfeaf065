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

#include "qed/distribution.hpp"

#include <cmath>
#include <stdexcept>

#include "qed/rng.hpp"

namespace qed {

double OutcomeDistribution::total() const {
  double s = 0;
  for (const auto& [k, p] : probabilities) s += p;
  return s;
}

double tvd(const OutcomeDistribution& a, const OutcomeDistribution& b) {
  double s = 0;
  for (const auto& [k, p] : a.probabilities) s += std::abs(p - b.prob(k));
  for (const auto& [k, p] : b.probabilities) {
    if (!a.probabilities.count(k)) s += p;
  }
  return 0.5 * s;
}

ShotCounts sample(const OutcomeDistribution& d, uint64_t shots, uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  // Cumulative walk over the sorted outcome keys.
  std::vector<std::pair<std::string, double>> cdf;
  cdf.reserve(d.probabilities.size());
  double acc = 0;
  for (const auto& [k, p] : d.probabilities) {
    acc += p;
    cdf.emplace_back(k, acc);
  }
  std::mt19937_64 rng(seed);
  ShotCounts out;
  out.total_shots = shots;
  out.n_valid = shots;
  for (uint64_t i = 0; i < shots; i++) {
    double u = next_double(rng) * acc;
    const std::string* key = &cdf.back().first;
    for (const auto& [k, c] : cdf) {
      if (u < c) {
        key = &k;
        break;
      }
    }
    out.counts[*key]++;
  }
  return out;
}

}  // namespace qed
