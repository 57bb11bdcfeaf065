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

#include "qed/code422.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace qed::code422 {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;

PauliString data_op(const char* letters) { return PauliString::from_label(letters); }
}  // namespace

PauliString stabilizer_x() { return data_op("XXXX"); }
PauliString stabilizer_z() { return data_op("ZZZZ"); }

PauliString logical_x(int which) {
  if (which == 1) return data_op("XIXI");  // positions 1,3
  if (which == 2) return data_op("XXII");  // positions 1,2
  throw std::invalid_argument("logical_x: which must be 1 or 2");
}

PauliString logical_z(int which) {
  if (which == 1) return data_op("ZZII");  // positions 1,2
  if (which == 2) return data_op("ZIZI");  // positions 1,3
  throw std::invalid_argument("logical_z: which must be 1 or 2");
}

PauliString on_chip(const PauliString& op) {
  if (op.n_qubits() != 4) throw std::invalid_argument("on_chip: expected 4-qubit operator");
  PauliString out(5);
  for (int pos = 1; pos <= 4; pos++) {
    out.set_letter(kPositionToChip[pos], op.letter(pos - 1));
  }
  out.phase_pow = static_cast<uint8_t>((out.phase_pow + op.phase_exponent()) & 3);
  return out;
}

StateVector logical_codeword(int b1, int b2) {
  // Index bits left-to-right are code positions 1..4.
  static constexpr uint32_t kets[4][2] = {
      {0b0000, 0b1111},  // |00>_L
      {0b1100, 0b0011},  // |01>_L
      {0b1010, 0b0101},  // |10>_L
      {0b1001, 0b0110},  // |11>_L
  };
  const auto& pair = kets[(b1 << 1) | b2];
  StateVector sv(4);
  sv.amp(0) = 0;
  sv.amp(pair[0]) = kInvSqrt2;
  sv.amp(pair[1]) = kInvSqrt2;
  return sv;
}

StateVector embed_on_chip(const StateVector& data_state, int ancilla_bit) {
  if (data_state.n_qubits() != 4) {
    throw std::invalid_argument("embed_on_chip: expected 4-qubit state");
  }
  StateVector out(5);
  out.amp(0) = 0;
  for (uint32_t idx = 0; idx < 16; idx++) {
    cdouble a = data_state.amp(idx);
    if (a == cdouble(0, 0)) continue;
    uint32_t chip = 0;
    if (ancilla_bit) chip |= out.qubit_mask(kAncilla);
    for (int pos = 1; pos <= 4; pos++) {
      if ((idx >> (4 - pos)) & 1u) chip |= out.qubit_mask(kPositionToChip[pos]);
    }
    out.amp(chip) = a;
  }
  return out;
}

StateVector codeword_on_chip(int b1, int b2, int ancilla_bit) {
  return embed_on_chip(logical_codeword(b1, b2), ancilla_bit);
}

const char* variant_name(PrepVariant v) {
  switch (v) {
    case PrepVariant::FTv1: return "FTv1";
    case PrepVariant::FTv2: return "FTv2";
    case PrepVariant::NFT: return "NFT";
    case PrepVariant::ZeroPlus: return "ZeroPlus";
    case PrepVariant::LogicalBell: return "LogicalBell";
    case PrepVariant::Sparrow00: return "Sparrow00";
    case PrepVariant::SparrowZeroPlus: return "SparrowZeroPlus";
    case PrepVariant::SparrowBell: return "SparrowBell";
  }
  return "?";
}

std::optional<PrepVariant> variant_from_name(const std::string& name) {
  for (PrepVariant v : all_variants()) {
    if (name == variant_name(v)) return v;
  }
  return std::nullopt;
}

std::vector<PrepVariant> all_variants() {
  return {PrepVariant::FTv1,        PrepVariant::FTv2,
          PrepVariant::NFT,         PrepVariant::ZeroPlus,
          PrepVariant::LogicalBell, PrepVariant::Sparrow00,
          PrepVariant::SparrowZeroPlus, PrepVariant::SparrowBell};
}

std::vector<PrepVariant> variants_for_layout(const QubitLayout& layout) {
  std::vector<PrepVariant> out;
  for (PrepVariant v : all_variants()) {
    try {
      (void)prep_circuit(v, layout);
      out.push_back(v);
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

StateVector intended_state(PrepVariant v) {
  switch (v) {
    case PrepVariant::FTv1:
    case PrepVariant::FTv2:
    case PrepVariant::NFT:
    case PrepVariant::Sparrow00:
      return logical_codeword(0, 0);
    case PrepVariant::ZeroPlus:
    case PrepVariant::SparrowZeroPlus: {
      StateVector sv(4);
      auto a = logical_codeword(0, 0), b = logical_codeword(0, 1);
      for (uint32_t i = 0; i < 16; i++) sv.amp(i) = (a.amp(i) + b.amp(i)) * kInvSqrt2;
      return sv;
    }
    case PrepVariant::LogicalBell:
    case PrepVariant::SparrowBell: {
      StateVector sv(4);
      auto a = logical_codeword(0, 0), b = logical_codeword(1, 1);
      for (uint32_t i = 0; i < 16; i++) sv.amp(i) = (a.amp(i) + b.amp(i)) * kInvSqrt2;
      return sv;
    }
  }
  throw std::logic_error("intended_state: bad variant");
}

Circuit prep_circuit(PrepVariant v, const QubitLayout& layout) {
  Circuit c(5);
  for (int q = 0; q < 5; q++) c.append(GateKind::Prep0, q);
  auto cx = [&](int a, int b) { c.append(GateKind::CNOT, a, b); };
  auto h = [&](int q) { c.append(GateKind::H, q); };
  bool ancilla_measured = false;

  switch (v) {
    case PrepVariant::FTv1:
      h(2);
      cx(2, 0);
      cx(2, 1);
      h(2);
      h(3);
      cx(3, 2);
      h(2);
      h(3);
      cx(2, 4);
      cx(2, 0);
      ancilla_measured = true;
      break;
    case PrepVariant::FTv2:
      h(3);
      cx(3, 2);
      h(2);
      h(3);
      cx(2, 1);
      cx(3, 4);
      c.append_swap_expanded(2, 4);
      cx(2, 0);
      cx(1, 0);
      ancilla_measured = true;
      break;
    case PrepVariant::NFT:
      h(3);
      cx(3, 4);
      cx(3, 2);
      cx(2, 1);
      break;
    case PrepVariant::ZeroPlus:
      h(1);
      h(3);
      cx(3, 2);
      c.append_swap_expanded(2, 1);
      cx(2, 4);
      break;
    case PrepVariant::LogicalBell:
      h(2);
      h(3);
      cx(2, 1);
      cx(3, 4);
      break;
    case PrepVariant::Sparrow00:
      h(3);
      cx(3, 4);
      cx(4, 2);
      c.append_swap_expanded(1, 2);
      cx(3, 2);
      h(0);
      h(1);
      h(2);
      cx(0, 2);
      cx(0, 1);
      h(0);
      h(1);
      h(2);
      ancilla_measured = true;
      break;
    case PrepVariant::SparrowZeroPlus:
      h(3);
      h(4);
      cx(3, 2);
      c.append_swap_expanded(1, 2);
      cx(4, 2);
      break;
    case PrepVariant::SparrowBell:
      h(1);
      h(3);
      cx(1, 2);
      cx(3, 4);
      break;
  }

  if (ancilla_measured) {
    c.append(GateKind::MeasureZ, kAncilla);
    c.postselect = PostselectRule{kAncilla, {}};
  }

  auto report = validate_circuit(c, layout);
  if (!report.ok()) {
    throw std::invalid_argument(std::string(variant_name(v)) +
                                " is not implementable on layout " + layout.name);
  }
  return c;
}

const char* logical_gate_name(LogicalGate g) {
  switch (g) {
    case LogicalGate::X1: return "X1";
    case LogicalGate::X2: return "X2";
    case LogicalGate::Z1: return "Z1";
    case LogicalGate::Z2: return "Z2";
    case LogicalGate::HHSwap: return "HHSwap";
    case LogicalGate::CZ: return "CZ";
  }
  return "?";
}

std::vector<Gate> logical_gate(LogicalGate g) {
  auto paulis = [](GateKind k, int pos_a, int pos_b) {
    return std::vector<Gate>{{k, kPositionToChip[pos_a]}, {k, kPositionToChip[pos_b]}};
  };
  switch (g) {
    case LogicalGate::X1: return paulis(GateKind::X, 1, 3);
    case LogicalGate::X2: return paulis(GateKind::X, 1, 2);
    case LogicalGate::Z1: return paulis(GateKind::Z, 1, 2);
    case LogicalGate::Z2: return paulis(GateKind::Z, 1, 3);
    case LogicalGate::HHSwap:
      return {{GateKind::H, 1}, {GateKind::H, 2}, {GateKind::H, 3}, {GateKind::H, 4}};
    case LogicalGate::CZ:
      return {{GateKind::S, 1}, {GateKind::S, 2}, {GateKind::S, 3}, {GateKind::S, 4}};
  }
  throw std::invalid_argument("logical_gate: unsupported gate");
}

StateVector bare_final_state(InitialState initial, const std::vector<LogicalGate>& word) {
  StateVector sv(2);
  switch (initial) {
    case InitialState::Zero00:
      break;
    case InitialState::ZeroPlus:
      sv.apply_gate(Gate{GateKind::H, 1});
      break;
    case InitialState::Bell:
      sv.apply_gate(Gate{GateKind::H, 0});
      sv.apply_gate(Gate{GateKind::CNOT, 0, 1});
      break;
  }
  for (LogicalGate g : word) {
    switch (g) {
      case LogicalGate::X1: sv.apply_gate(Gate{GateKind::X, 0}); break;
      case LogicalGate::X2: sv.apply_gate(Gate{GateKind::X, 1}); break;
      case LogicalGate::Z1: sv.apply_gate(Gate{GateKind::Z, 0}); break;
      case LogicalGate::Z2: sv.apply_gate(Gate{GateKind::Z, 1}); break;
      case LogicalGate::HHSwap:
        sv.apply_gate(Gate{GateKind::SWAP, 0, 1});
        sv.apply_gate(Gate{GateKind::H, 0});
        sv.apply_gate(Gate{GateKind::H, 1});
        break;
      case LogicalGate::CZ:
        for (const Gate& gg : decompose_cz(0, 1)) sv.apply_gate(gg);
        break;
    }
  }
  return sv;
}

namespace {
OutcomeDistribution distribution_of(const StateVector& sv2) {
  OutcomeDistribution d;
  for (uint32_t i = 0; i < 4; i++) {
    double p = std::norm(sv2.amp(i));
    if (p < 1e-14) continue;
    std::string key = {static_cast<char>('0' + ((i >> 1) & 1)),
                       static_cast<char>('0' + (i & 1))};
    d.probabilities[key] = p;
  }
  return d;
}

EncodedTask make_task(int row, InitialState init, std::vector<LogicalGate> word,
                      const char* label, int instructions) {
  EncodedTask t;
  t.row = row;
  t.initial = init;
  t.word = std::move(word);
  t.final_label = label;
  t.bare_instructions = instructions;
  t.ideal = distribution_of(bare_final_state(init, t.word));
  return t;
}
}  // namespace

const std::vector<EncodedTask>& catalog_tasks() {
  using LG = LogicalGate;
  using IS = InitialState;
  static const std::vector<EncodedTask> tasks = [] {
    std::vector<EncodedTask> v;
    v.push_back(make_task(1, IS::Zero00, {}, "|00>", 5));
    v.push_back(make_task(2, IS::ZeroPlus, {}, "(|00>+|01>)/sqrt(2)", 6));
    v.push_back(make_task(3, IS::Zero00, {LG::X2}, "|01>", 6));
    v.push_back(make_task(4, IS::Zero00, {LG::X1}, "|10>", 6));
    v.push_back(make_task(5, IS::Bell, {}, "(|00>+|11>)/sqrt(2)", 7));
    v.push_back(make_task(6, IS::ZeroPlus, {LG::Z2}, "(|00>-|01>)/sqrt(2)", 7));
    v.push_back(make_task(7, IS::Zero00, {LG::HHSwap}, "(|00>+|01>+|10>+|11>)/2", 7));
    v.push_back(make_task(8, IS::ZeroPlus, {LG::X1}, "(|10>+|11>)/sqrt(2)", 7));
    v.push_back(make_task(9, IS::Zero00, {LG::X1, LG::X2}, "|11>", 7));
    v.push_back(make_task(10, IS::Bell, {LG::Z2}, "(|00>-|11>)/sqrt(2)", 8));
    v.push_back(make_task(11, IS::Bell, {LG::X1}, "(|10>+|01>)/sqrt(2)", 8));
    v.push_back(make_task(12, IS::Zero00, {LG::HHSwap, LG::Z2},
                          "(|00>-|01>+|10>-|11>)/2", 8));
    v.push_back(make_task(13, IS::Zero00, {LG::HHSwap, LG::Z1},
                          "(|00>+|01>-|10>-|11>)/2", 8));
    v.push_back(make_task(14, IS::ZeroPlus, {LG::X1, LG::Z2}, "(|10>-|11>)/sqrt(2)", 8));
    v.push_back(make_task(15, IS::Bell, {LG::X2, LG::Z2}, "(|10>-|01>)/sqrt(2)", 9));
    v.push_back(make_task(16, IS::Zero00, {LG::HHSwap, LG::Z1, LG::Z2},
                          "(|00>-|01>-|10>+|11>)/2", 9));
    v.push_back(make_task(17, IS::Zero00, {LG::HHSwap, LG::CZ},
                          "(|00>+|01>+|10>-|11>)/2", 10));
    v.push_back(make_task(18, IS::Zero00, {LG::HHSwap, LG::Z2, LG::CZ},
                          "(|00>-|01>+|10>+|11>)/2", 11));
    v.push_back(make_task(19, IS::Zero00, {LG::HHSwap, LG::Z1, LG::CZ},
                          "(|00>+|01>-|10>+|11>)/2", 11));
    v.push_back(make_task(20, IS::Zero00, {LG::X1, LG::HHSwap, LG::CZ, LG::X2},
                          "(|00>-|01>-|10>-|11>)/2", 12));
    return v;
  }();
  return tasks;
}

bool prep_matches_initial(PrepVariant v, InitialState initial) {
  switch (initial) {
    case InitialState::Zero00:
      return v == PrepVariant::FTv1 || v == PrepVariant::FTv2 || v == PrepVariant::NFT ||
             v == PrepVariant::Sparrow00;
    case InitialState::ZeroPlus:
      return v == PrepVariant::ZeroPlus || v == PrepVariant::SparrowZeroPlus;
    case InitialState::Bell:
      return v == PrepVariant::LogicalBell || v == PrepVariant::SparrowBell;
  }
  return false;
}

PrepVariant prep_for_initial(InitialState initial, const QubitLayout& layout,
                             PrepVariant zero_prep) {
  bool sparrow = layout.name == "sparrow";
  switch (initial) {
    case InitialState::Zero00:
      return zero_prep;
    case InitialState::ZeroPlus:
      return sparrow ? PrepVariant::SparrowZeroPlus : PrepVariant::ZeroPlus;
    case InitialState::Bell:
      return sparrow ? PrepVariant::SparrowBell : PrepVariant::LogicalBell;
  }
  throw std::logic_error("prep_for_initial: bad initial");
}

Circuit build_encoded_run(const EncodedTask& task, PrepVariant prep,
                          const QubitLayout& layout) {
  if (!prep_matches_initial(prep, task.initial)) {
    throw std::invalid_argument(std::string("prep ") + variant_name(prep) +
                                " does not prepare the initial state of row " +
                                std::to_string(task.row));
  }
  Circuit c = prep_circuit(prep, layout);
  for (LogicalGate g : task.word) {
    for (const Gate& gg : logical_gate(g)) c.append(gg.kind, gg.q0, gg.q1);
  }
  for (int q : kDataQubits) c.append(GateKind::MeasureZ, q);

  PostselectRule rule;
  rule.ancilla_qubit = c.postselect ? c.postselect->ancilla_qubit : -1;
  rule.parity_qubits = {kDataQubits[0], kDataQubits[1], kDataQubits[2], kDataQubits[3]};
  c.postselect = rule;

  c.readout.bit_sources = {
      {kPositionToChip[1], kPositionToChip[2]},  // b1 over the Z1 support
      {kPositionToChip[1], kPositionToChip[3]},  // b2 over the Z2 support
  };
  return c;
}

std::optional<std::string> decode_outcome(const std::array<int, 4>& data_bits) {
  int parity = data_bits[0] ^ data_bits[1] ^ data_bits[2] ^ data_bits[3];
  if (parity) return std::nullopt;
  std::string out(2, '0');
  out[0] = static_cast<char>('0' + (data_bits[0] ^ data_bits[1]));
  out[1] = static_cast<char>('0' + (data_bits[0] ^ data_bits[2]));
  return out;
}

}  // namespace qed::code422
