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

#include "qed/tableau.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace qed {

StabilizerTableau::StabilizerTableau(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("StabilizerTableau: unsupported qubit count");
  }
  rows_.assign(2 * n_, Row{});
  for (int q = 0; q < n_; q++) {
    rows_[q].x = 1u << q;           // destabilizer X_q
    rows_[n_ + q].z = 1u << q;      // stabilizer Z_q
  }
}

void StabilizerTableau::rowsum(Row& h, const Row& i) const {
  // h := h * i with exact phase tracking (value = i^phase X^x Z^z).
  h.phase = static_cast<uint8_t>((h.phase + i.phase + 2 * std::popcount(h.z & i.x)) & 3);
  h.x ^= i.x;
  h.z ^= i.z;
}

bool StabilizerTableau::anticommutes(const Row& a, const Row& b) {
  return ((std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1) != 0;
}

void StabilizerTableau::apply_gate(const Gate& g) {
  if (g.kind == GateKind::Prep0) return;
  if (!is_clifford(g.kind)) {
    throw std::invalid_argument(std::string("StabilizerTableau: non-Clifford gate ") +
                                gate_name(g.kind) + " at location " +
                                std::to_string(g.location));
  }
  const uint32_t m0 = 1u << g.q0;
  const uint32_t m1 = g.q1 >= 0 ? (1u << g.q1) : 0;
  for (Row& r : rows_) {
    bool x0 = r.x & m0, z0 = r.z & m0;
    switch (g.kind) {
      case GateKind::H:
        if (x0 && z0) r.phase = (r.phase + 2) & 3;
        if (x0 != z0) {
          r.x ^= m0;
          r.z ^= m0;
        }
        break;
      case GateKind::S:
        if (x0) {
          r.z ^= m0;
          r.phase = (r.phase + 1) & 3;
        }
        break;
      case GateKind::Sdg:
        if (x0) {
          r.z ^= m0;
          r.phase = (r.phase + 3) & 3;
        }
        break;
      case GateKind::X:
        if (z0) r.phase = (r.phase + 2) & 3;
        break;
      case GateKind::Y:
        if (x0 != z0) r.phase = (r.phase + 2) & 3;
        break;
      case GateKind::Z:
        if (x0) r.phase = (r.phase + 2) & 3;
        break;
      case GateKind::CNOT: {
        // No phase term in the i^k X^x Z^z representation.
        bool z1 = r.z & m1;
        if (x0) r.x ^= m1;
        if (z1) r.z ^= m0;
        break;
      }
      case GateKind::SWAP: {
        bool x1 = r.x & m1, z1 = r.z & m1;
        if (x0 != x1) r.x ^= m0 | m1;
        if (z0 != z1) r.z ^= m0 | m1;
        break;
      }
      default:
        break;
    }
  }
  assert(check_invariants());
}

void StabilizerTableau::apply_pauli(const PauliString& p) {
  Row pr{p.x_bits, p.z_bits, 0};
  for (Row& r : rows_) {
    if (anticommutes(r, pr)) r.phase = (r.phase + 2) & 3;
  }
}

bool StabilizerTableau::is_deterministic_z(int q) const {
  const uint32_t m = 1u << q;
  for (int i = n_; i < 2 * n_; i++) {
    if (rows_[i].x & m) return false;
  }
  return true;
}

StabilizerTableau::MeasureResult StabilizerTableau::measure_z(int q, int forced, int coin) {
  const uint32_t m = 1u << q;
  int p = -1;
  for (int i = n_; i < 2 * n_; i++) {
    if (rows_[i].x & m) {
      p = i;
      break;
    }
  }
  if (p < 0) {
    // Deterministic: Z_q is a product of stabilizers, found via destabilizers.
    Row scratch{};
    for (int i = 0; i < n_; i++) {
      if (rows_[i].x & m) rowsum(scratch, rows_[i + n_]);
    }
    assert(scratch.x == 0 && scratch.z == m);
    assert((scratch.phase & 1) == 0);
    return {scratch.phase == 2 ? 1 : 0, false};
  }
  int bit = forced >= 0 ? forced : coin;
  Row old_p = rows_[p];
  for (int i = 0; i < 2 * n_; i++) {
    if (i != p && (rows_[i].x & m)) rowsum(rows_[i], old_p);
  }
  rows_[p - n_] = old_p;
  rows_[p] = Row{0, m, static_cast<uint8_t>(bit ? 2 : 0)};
  assert(check_invariants());
  return {bit, true};
}

std::optional<int> StabilizerTableau::deterministic_sign(const PauliString& p) const {
  if (p.n_qubits() != n_) throw std::invalid_argument("deterministic_sign: width mismatch");
  Row pr{p.x_bits, p.z_bits, p.phase_pow};
  for (int i = n_; i < 2 * n_; i++) {
    if (anticommutes(rows_[i], pr)) return std::nullopt;
  }
  // p commutes with the whole stabilizer group. Expand it over the generators:
  // the coefficient of s_i is 1 iff p anticommutes with destabilizer d_i.
  Row scratch{};
  for (int i = 0; i < n_; i++) {
    if (anticommutes(rows_[i], pr)) rowsum(scratch, rows_[i + n_]);
  }
  if (scratch.x != pr.x || scratch.z != pr.z) return std::nullopt;  // in N(S) \ +-S
  int d = (pr.phase - scratch.phase) & 3;
  assert((d & 1) == 0);
  return d == 0 ? 1 : -1;
}

PauliString StabilizerTableau::stabilizer(int i) const {
  PauliString p(n_);
  p.x_bits = rows_[n_ + i].x;
  p.z_bits = rows_[n_ + i].z;
  p.phase_pow = rows_[n_ + i].phase;
  return p;
}

bool StabilizerTableau::check_invariants() const {
  for (int i = 0; i < n_; i++) {
    for (int j = 0; j < n_; j++) {
      if (anticommutes(rows_[n_ + i], rows_[n_ + j])) return false;
      if (anticommutes(rows_[i], rows_[j])) return false;
      bool want = i == j;
      if (anticommutes(rows_[i], rows_[n_ + j]) != want) return false;
    }
    if ((rows_[n_ + i].phase ^ std::popcount(rows_[n_ + i].x & rows_[n_ + i].z)) & 1) {
      return false;  // stabilizer generators must be Hermitian (+/- letters)
    }
  }
  return true;
}

}  // namespace qed
