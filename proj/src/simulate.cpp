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

#include "qed/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qed/rng.hpp"

namespace qed {

namespace {
constexpr double kBranchTol = 1e-12;

bool readout_flipped(const Circuit& c, int qubit) {
  return std::find(c.readout_flips.begin(), c.readout_flips.end(), qubit) !=
         c.readout_flips.end();
}

int bit_of_qubit(const Circuit& c, const std::vector<uint8_t>& bits, int qubit) {
  int idx = c.readout_index(qubit);
  if (idx < 0) throw std::logic_error("readout refers to unmeasured qubit");
  return bits[idx];
}

std::string bits_key(const std::vector<uint8_t>& bits) {
  std::string key(bits.size(), '0');
  for (size_t i = 0; i < bits.size(); i++) key[i] = bits[i] ? '1' : '0';
  return key;
}
}  // namespace

std::vector<StateBranch> statevec_run(const Circuit& c, const StateVector* initial) {
  StateBranch root;
  if (initial) {
    if (initial->n_qubits() != c.n_qubits()) {
      throw std::invalid_argument("statevec_run: width mismatch");
    }
    root.state = *initial;
  } else {
    root.state = StateVector(c.n_qubits());
  }
  std::vector<StateBranch> branches{std::move(root)};
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::MeasureZ) {
      bool flip = readout_flipped(c, g.q0);
      std::vector<StateBranch> next;
      next.reserve(branches.size() * 2);
      for (StateBranch& br : branches) {
        double p1 = br.state.prob_one(g.q0);
        for (int bit = 0; bit <= 1; bit++) {
          double p = bit ? p1 : 1.0 - p1;
          if (p < kBranchTol) continue;
          StateBranch child;
          child.state = br.state;
          child.state.collapse(g.q0, bit);
          child.probability = br.probability * p;
          child.bits = br.bits;
          child.bits.push_back(static_cast<uint8_t>(bit ^ (flip ? 1 : 0)));
          next.push_back(std::move(child));
        }
      }
      branches = std::move(next);
    } else {
      for (StateBranch& br : branches) br.state.apply_gate(g);
    }
  }
  return branches;
}

std::vector<TableauBranch> tableau_run_branches(const Circuit& c) {
  std::vector<TableauBranch> branches;
  branches.push_back(TableauBranch{StabilizerTableau(c.n_qubits()), 1.0, {}, {}});
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::MeasureZ) {
      bool flip = readout_flipped(c, g.q0);
      std::vector<TableauBranch> next;
      next.reserve(branches.size() * 2);
      for (TableauBranch& br : branches) {
        if (br.tableau.is_deterministic_z(g.q0)) {
          auto r = br.tableau.measure_z(g.q0);
          br.bits.push_back(static_cast<uint8_t>(r.bit ^ (flip ? 1 : 0)));
          br.random_flags.push_back(0);
          next.push_back(std::move(br));
        } else {
          for (int bit = 0; bit <= 1; bit++) {
            TableauBranch child = br;
            child.tableau.measure_z(g.q0, bit);
            child.probability *= 0.5;
            child.bits.push_back(static_cast<uint8_t>(bit ^ (flip ? 1 : 0)));
            child.random_flags.push_back(1);
            next.push_back(std::move(child));
          }
        }
      }
      branches = std::move(next);
    } else {
      for (TableauBranch& br : branches) br.tableau.apply_gate(g);
    }
  }
  return branches;
}

TableauRunResult tableau_run(const Circuit& c, uint64_t seed) {
  std::mt19937_64 rng(seed);
  TableauRunResult out{StabilizerTableau(c.n_qubits()), {}, {}};
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::MeasureZ) {
      bool flip = readout_flipped(c, g.q0);
      auto r = out.tableau.measure_z(g.q0, -1, next_bit(rng));
      out.bits.push_back(static_cast<uint8_t>(r.bit ^ (flip ? 1 : 0)));
      out.random_flags.push_back(r.random ? 1 : 0);
    } else {
      out.tableau.apply_gate(g);
    }
  }
  return out;
}

bool shot_accepted(const Circuit& c, const std::vector<uint8_t>& bits) {
  if (!c.postselect) return true;
  const PostselectRule& rule = *c.postselect;
  if (rule.ancilla_qubit >= 0 && bit_of_qubit(c, bits, rule.ancilla_qubit) != 0) {
    return false;
  }
  int parity = 0;
  for (int q : rule.parity_qubits) parity ^= bit_of_qubit(c, bits, q);
  return parity == 0;
}

std::string logical_key(const Circuit& c, const std::vector<uint8_t>& bits) {
  if (c.readout.bit_sources.empty()) return bits_key(bits);
  std::string key(c.readout.bit_sources.size(), '0');
  for (size_t j = 0; j < c.readout.bit_sources.size(); j++) {
    int b = 0;
    for (int q : c.readout.bit_sources[j]) b ^= bit_of_qubit(c, bits, q);
    key[j] = b ? '1' : '0';
  }
  return key;
}

namespace {
ExactDistributionResult distribution_from_branches(
    const Circuit& c, const std::vector<std::pair<double, std::vector<uint8_t>>>& branches) {
  ExactDistributionResult out;
  out.raw.bit_qubits = c.measured_qubits();
  double accept = 0;
  std::map<std::string, double> logical;
  for (const auto& [p, bits] : branches) {
    out.raw.probabilities[bits_key(bits)] += p;
    if (shot_accepted(c, bits)) {
      accept += p;
      logical[logical_key(c, bits)] += p;
    }
  }
  out.acceptance = accept;
  if (accept < kBranchTol) {
    out.degenerate = true;
    return out;
  }
  for (auto& [k, p] : logical) out.logical.probabilities[k] = p / accept;
  return out;
}
}  // namespace

ExactDistributionResult exact_distribution(const Circuit& c, Backend backend) {
  std::vector<std::pair<double, std::vector<uint8_t>>> flat;
  if (backend == Backend::Statevector) {
    for (auto& br : statevec_run(c)) flat.emplace_back(br.probability, br.bits);
  } else {
    for (auto& br : tableau_run_branches(c)) flat.emplace_back(br.probability, br.bits);
  }
  return distribution_from_branches(c, flat);
}

double cross_check(const Circuit& c) {
  auto sv = exact_distribution(c, Backend::Statevector);
  auto tab = exact_distribution(c, Backend::Tableau);
  double d = tvd(sv.raw, tab.raw);
  if (!sv.degenerate && !tab.degenerate) d = std::max(d, tvd(sv.logical, tab.logical));
  return d;
}

}  // namespace qed
