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

#include "qed/circuit.hpp"

#include <stdexcept>

namespace qed {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("Circuit: unsupported qubit count");
  }
}

Gate& Circuit::append(GateKind kind, int q0, int q1) {
  int arity = (kind == GateKind::CNOT || kind == GateKind::SWAP) ? 2 : 1;
  if (q0 < 0 || q0 >= n_qubits_) throw std::out_of_range("Circuit::append: q0");
  if (arity == 2) {
    if (q1 < 0 || q1 >= n_qubits_) throw std::out_of_range("Circuit::append: q1");
    if (q1 == q0) throw std::invalid_argument("Circuit::append: operands must differ");
  } else if (q1 != -1) {
    throw std::invalid_argument("Circuit::append: single-qubit gate got two operands");
  }
  if (kind == GateKind::MeasureZ && readout_index(q0) >= 0) {
    throw std::invalid_argument("Circuit::append: qubit measured twice");
  }
  gates_.push_back(Gate{kind, q0, arity == 2 ? q1 : -1, next_location_++});
  return gates_.back();
}

void Circuit::append_swap_expanded(int a, int b) {
  SwapBlock block;
  block.a = a;
  block.b = b;
  block.first_location = next_location_;
  for (const Gate& g : decompose_swap(a, b)) append(g.kind, g.q0, g.q1);
  block.last_location = next_location_ - 1;
  swap_blocks.push_back(block);
}

void Circuit::append_barrier(std::vector<int> qubits) {
  barriers.push_back(BarrierMark{next_location_, std::move(qubits)});
}

std::vector<int> Circuit::measured_qubits() const {
  std::vector<int> out;
  for (const Gate& g : gates_) {
    if (g.kind == GateKind::MeasureZ) out.push_back(g.q0);
  }
  return out;
}

int Circuit::readout_index(int qubit) const {
  int idx = 0;
  for (const Gate& g : gates_) {
    if (g.kind != GateKind::MeasureZ) continue;
    if (g.q0 == qubit) return idx;
    idx++;
  }
  return -1;
}

int Circuit::count(GateKind kind) const {
  int n = 0;
  for (const Gate& g : gates_) n += g.kind == kind;
  return n;
}

bool structurally_equal(const Circuit& a, const Circuit& b) {
  if (a.n_qubits() != b.n_qubits()) return false;
  if (a.gates().size() != b.gates().size()) return false;
  for (size_t i = 0; i < a.gates().size(); i++) {
    const Gate& ga = a.gates()[i];
    const Gate& gb = b.gates()[i];
    if (ga.kind != gb.kind || ga.q0 != gb.q0 || ga.q1 != gb.q1) return false;
  }
  return a.barriers == b.barriers && a.postselect == b.postselect && a.readout == b.readout;
}

ValidationReport validate_circuit(const Circuit& c, const QubitLayout& layout) {
  ValidationReport report;
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::CNOT && !layout.has_edge(g.q0, g.q1)) {
      report.violations.push_back({g.location, g.q0, g.q1});
    }
    if (g.kind == GateKind::SWAP && !layout.has_edge(g.q0, g.q1)) {
      report.violations.push_back({g.location, g.q0, g.q1});
    }
  }
  return report;
}

std::vector<Gate> decompose_swap(int a, int b) {
  if (a == b) throw std::invalid_argument("decompose_swap: operands must differ");
  return {
      {GateKind::CNOT, a, b}, {GateKind::H, a}, {GateKind::H, b},
      {GateKind::CNOT, a, b}, {GateKind::H, a}, {GateKind::H, b},
      {GateKind::CNOT, a, b},
  };
}

std::vector<Gate> decompose_cz(int ctrl, int tgt) {
  if (ctrl == tgt) throw std::invalid_argument("decompose_cz: operands must differ");
  return {{GateKind::H, tgt}, {GateKind::CNOT, ctrl, tgt}, {GateKind::H, tgt}};
}

int instruction_count(const Circuit& c, std::vector<std::string>* warnings) {
  int gates = 0;
  int measures = 0;
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::MeasureZ:
        measures++;
        break;
      case GateKind::Prep0:
        break;
      case GateKind::SWAP:
        if (warnings) {
          warnings->push_back("physical swap at location " + std::to_string(g.location) +
                              "; bare circuits relabel in software");
        }
        gates++;
        break;
      default:
        gates++;
    }
  }
  return gates + measures + 3;
}

void conjugate_through(PauliString& p, const Gate& g) {
  auto xb = [&](int q) -> bool { return (p.x_bits >> q) & 1u; };
  auto zb = [&](int q) -> bool { return (p.z_bits >> q) & 1u; };
  auto flip_x = [&](int q) { p.x_bits ^= 1u << q; };
  auto flip_z = [&](int q) { p.z_bits ^= 1u << q; };
  auto add_phase = [&](int k) { p.phase_pow = static_cast<uint8_t>((p.phase_pow + k) & 3); };

  switch (g.kind) {
    case GateKind::H:
      if (xb(g.q0) && zb(g.q0)) add_phase(2);
      if (xb(g.q0) != zb(g.q0)) {
        flip_x(g.q0);
        flip_z(g.q0);
      }
      break;
    case GateKind::S:
      if (xb(g.q0)) {
        flip_z(g.q0);
        add_phase(1);
      }
      break;
    case GateKind::Sdg:
      if (xb(g.q0)) {
        flip_z(g.q0);
        add_phase(3);
      }
      break;
    case GateKind::X:
      if (zb(g.q0)) add_phase(2);
      break;
    case GateKind::Y:
      if (xb(g.q0) != zb(g.q0)) add_phase(2);
      break;
    case GateKind::Z:
      if (xb(g.q0)) add_phase(2);
      break;
    case GateKind::CNOT: {
      // In the i^k X^x Z^z representation the CNOT expansion never reorders
      // Z past X, so no phase correction arises.
      bool xc = xb(g.q0), zt = zb(g.q1);
      if (xc) flip_x(g.q1);
      if (zt) flip_z(g.q0);
      break;
    }
    case GateKind::SWAP: {
      bool xa = xb(g.q0), za = zb(g.q0), xb1 = xb(g.q1), zb1 = zb(g.q1);
      if (xa != xb1) {
        flip_x(g.q0);
        flip_x(g.q1);
      }
      if (za != zb1) {
        flip_z(g.q0);
        flip_z(g.q1);
      }
      break;
    }
    default:
      throw std::invalid_argument("conjugate_through: gate is not unitary Clifford");
  }
}

}  // namespace qed
