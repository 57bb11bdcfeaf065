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

#include "qed/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qed/simulate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qed::verify {

namespace {

constexpr double kTol = 1e-9;

const char* kLetters = "IXYZ";

std::string pauli_label(const PauliString& p, const Circuit& c) {
  std::string out;
  for (int q = 0; q < c.n_qubits(); q++) {
    char l = p.letter(q);
    if (l == 'I') continue;
    if (!out.empty()) out += ".";
    out += l;
    out += std::to_string(q);
  }
  return out.empty() ? "I" : out;
}

void push_gate_paulis(const Circuit& c, const Gate& g, int location, FaultKind kind,
                      std::vector<Fault>& out) {
  if (g.arity() == 1) {
    for (char l : {'X', 'Y', 'Z'}) {
      Fault f;
      f.kind = kind;
      f.location = location;
      f.pauli = PauliString::single(c.n_qubits(), g.q0, l);
      f.label = pauli_label(f.pauli, c) + "@" + gate_name(g.kind) + std::to_string(location);
      out.push_back(std::move(f));
    }
  } else {
    for (int a = 0; a < 4; a++) {
      for (int b = 0; b < 4; b++) {
        if (a == 0 && b == 0) continue;
        Fault f;
        f.kind = kind;
        f.location = location;
        f.pauli = PauliString(c.n_qubits());
        f.pauli.set_letter(g.q0, kLetters[a]);
        f.pauli.set_letter(g.q1, kLetters[b]);
        f.label = pauli_label(f.pauli, c) + "@" + gate_name(g.kind) + std::to_string(location);
        out.push_back(std::move(f));
      }
    }
  }
}

std::vector<int> circuit_support(const Circuit& c) {
  std::vector<int> used;
  for (int q = 0; q < c.n_qubits(); q++) {
    for (const Gate& g : c.gates()) {
      if (g.kind != GateKind::Prep0 && g.touches(q)) {
        used.push_back(q);
        break;
      }
    }
  }
  return used;
}

}  // namespace

std::vector<Fault> enumerate_faults(const Circuit& c, const FaultOptions& opts) {
  std::vector<Fault> out;
  std::vector<int> support = opts.idle_faults ? circuit_support(c) : std::vector<int>{};
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Prep0: {
        Fault f;
        f.kind = FaultKind::PrepFlip;
        f.location = g.location;
        f.pauli = PauliString::single(c.n_qubits(), g.q0, 'X');
        f.label = "flip@prep" + std::to_string(g.location);
        out.push_back(std::move(f));
        break;
      }
      case GateKind::MeasureZ: {
        Fault f;
        f.kind = FaultKind::MeasFlip;
        f.location = g.location;
        f.pauli = PauliString::identity(c.n_qubits());
        f.label = "bitflip@measure" + std::to_string(g.location);
        out.push_back(std::move(f));
        break;
      }
      default:
        push_gate_paulis(c, g, g.location, FaultKind::GatePauli, out);
    }
    if (opts.idle_faults && is_unitary(g.kind)) {
      for (int q : support) {
        if (g.touches(q)) continue;
        for (char l : {'X', 'Y', 'Z'}) {
          Fault f;
          f.kind = FaultKind::IdlePauli;
          f.location = g.location;
          f.pauli = PauliString::single(c.n_qubits(), q, l);
          f.label = pauli_label(f.pauli, c) + "@idle" + std::to_string(g.location);
          out.push_back(std::move(f));
        }
      }
    }
  }
  if (opts.abstract_swap_faults) {
    for (const SwapBlock& block : c.swap_blocks) {
      Gate pseudo{GateKind::SWAP, block.a, block.b, block.last_location};
      push_gate_paulis(c, pseudo, block.last_location, FaultKind::SwapBlockPauli, out);
    }
  }
  return out;
}

size_t expected_fault_count(const Circuit& c, const FaultOptions& opts) {
  size_t n = 0;
  size_t idle_targets = opts.idle_faults ? circuit_support(c).size() : 0;
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Prep0:
      case GateKind::MeasureZ:
        n += 1;
        break;
      default:
        n += g.arity() == 1 ? 3 : 15;
    }
    if (opts.idle_faults && is_unitary(g.kind)) {
      n += 3 * (idle_targets - g.arity());
    }
  }
  if (opts.abstract_swap_faults) n += 15 * c.swap_blocks.size();
  return n;
}

Circuit inject_fault(const Circuit& c, const Fault& f, const FaultOptions& opts) {
  bool found = false;
  for (const Gate& g : c.gates()) found |= g.location == f.location;
  if (!found) throw std::invalid_argument("inject_fault: stale fault location");

  Circuit out(c.n_qubits());
  out.postselect = c.postselect;
  out.readout = c.readout;
  out.readout_flips = c.readout_flips;

  auto insert_paulis = [&]() {
    for (int q = 0; q < c.n_qubits(); q++) {
      switch (f.pauli.letter(q)) {
        case 'X': out.append(GateKind::X, q); break;
        case 'Y': out.append(GateKind::Y, q); break;
        case 'Z': out.append(GateKind::Z, q); break;
        default: break;
      }
    }
  };

  // Abstract SWAP faults placed "before" go in front of the whole block.
  int anchor = f.location;
  if (f.kind == FaultKind::SwapBlockPauli && opts.placement == FaultPlacement::Before) {
    for (const SwapBlock& block : c.swap_blocks) {
      if (block.last_location == f.location) anchor = block.first_location;
    }
  }

  for (const Gate& g : c.gates()) {
    bool before = g.location == anchor && opts.placement == FaultPlacement::Before &&
                  f.kind != FaultKind::PrepFlip && f.kind != FaultKind::MeasFlip;
    if (before) insert_paulis();
    if (g.kind == GateKind::MeasureZ && g.location == f.location &&
        f.kind == FaultKind::MeasFlip) {
      out.readout_flips.push_back(g.q0);
    }
    out.append(g.kind, g.q0, g.arity() == 2 ? g.q1 : -1);
    bool after = g.location == anchor &&
                 (opts.placement == FaultPlacement::After || f.kind == FaultKind::PrepFlip) &&
                 f.kind != FaultKind::MeasFlip;
    if (after) insert_paulis();
  }
  return out;
}

const char* fault_class_name(FaultClass c) {
  switch (c) {
    case FaultClass::Detected: return "detected";
    case FaultClass::Benign: return "benign";
    case FaultClass::Logical: return "logical";
  }
  return "?";
}

std::vector<PauliString> ideal_generators(code422::PrepVariant v) {
  using code422::PrepVariant;
  std::vector<PauliString> gens = {code422::stabilizer_x(), code422::stabilizer_z()};
  switch (v) {
    case PrepVariant::FTv1:
    case PrepVariant::FTv2:
    case PrepVariant::NFT:
    case PrepVariant::Sparrow00:
      gens.push_back(code422::logical_z(1));
      gens.push_back(code422::logical_z(2));
      break;
    case PrepVariant::ZeroPlus:
    case PrepVariant::SparrowZeroPlus:
      gens.push_back(code422::logical_z(1));
      gens.push_back(code422::logical_x(2));
      break;
    case PrepVariant::LogicalBell:
    case PrepVariant::SparrowBell:
      gens.push_back(pauli_mul(code422::logical_x(1), code422::logical_x(2)));
      gens.push_back(pauli_mul(code422::logical_z(1), code422::logical_z(2)));
      break;
  }
  std::vector<PauliString> chip;
  chip.reserve(gens.size());
  for (const auto& g : gens) chip.push_back(code422::on_chip(g));
  return chip;
}

namespace {

// Sign pattern of the four ideal generators on one accepted branch:
// +1 -> 0 bit, -1 -> 1 bit, in generator order (S_X, S_Z, L1, L2).
struct BranchSigns {
  int syndrome = 0;  // bits 0/1: S_X, S_Z flipped
  int logical = 0;   // bits 0/1: L1, L2 flipped
};

FaultClass class_from_branches(const std::vector<BranchSigns>& accepted, double acceptance) {
  bool any_logical = false;
  bool all_clean = true;
  for (const BranchSigns& b : accepted) {
    if (b.syndrome == 0 && b.logical != 0) any_logical = true;
    if (b.syndrome != 0 || b.logical != 0) all_clean = false;
  }
  if (any_logical) return FaultClass::Logical;
  if (accepted.empty()) return FaultClass::Detected;  // rejected with certainty
  if (all_clean && acceptance > 1.0 - kTol) return FaultClass::Benign;
  return FaultClass::Detected;
}

FaultClass classify_statevector(const Circuit& faulty, const std::vector<PauliString>& gens,
                                double* acceptance_out) {
  auto branches = statevec_run(faulty);
  std::vector<BranchSigns> accepted;
  double acceptance = 0;
  for (const auto& br : branches) {
    if (!shot_accepted(faulty, br.bits)) continue;
    acceptance += br.probability;
    BranchSigns signs;
    for (size_t i = 0; i < gens.size(); i++) {
      cdouble e = br.state.expectation(gens[i]);
      if (std::abs(std::abs(e.real()) - 1.0) > kTol || std::abs(e.imag()) > kTol) {
        throw std::logic_error("classify: generator expectation not +-1");
      }
      if (e.real() < 0) {
        if (i < 2) signs.syndrome |= 1 << i;
        else signs.logical |= 1 << (i - 2);
      }
    }
    accepted.push_back(signs);
  }
  if (acceptance_out) *acceptance_out = acceptance;
  return class_from_branches(accepted, acceptance);
}

FaultClass classify_tableau(const Circuit& faulty, const std::vector<PauliString>& gens) {
  auto branches = tableau_run_branches(faulty);
  std::vector<BranchSigns> accepted;
  double acceptance = 0;
  for (const auto& br : branches) {
    if (!shot_accepted(faulty, br.bits)) continue;
    acceptance += br.probability;
    BranchSigns signs;
    for (size_t i = 0; i < gens.size(); i++) {
      auto sign = br.tableau.deterministic_sign(gens[i]);
      if (!sign) throw std::logic_error("classify: generator has random value");
      if (*sign < 0) {
        if (i < 2) signs.syndrome |= 1 << i;
        else signs.logical |= 1 << (i - 2);
      }
    }
    accepted.push_back(signs);
  }
  return class_from_branches(accepted, acceptance);
}

// Pauli propagation through the remainder of the circuit. Returns the
// residual on the data block (code-position order) and whether a measured
// bit was flipped by the fault's X component.
struct Propagated {
  PauliString residual_data{4};
  PauliString residual_chip;
  bool flips_measurement = false;
};

Propagated propagate(const Circuit& c, const Fault& f, const FaultOptions& opts) {
  Propagated out;
  if (f.kind == FaultKind::MeasFlip) {
    out.residual_chip = PauliString::identity(c.n_qubits());
    out.flips_measurement = true;
    return out;
  }
  PauliString e = f.pauli;
  int anchor = f.location;
  if (f.kind == FaultKind::SwapBlockPauli && opts.placement == FaultPlacement::Before) {
    for (const SwapBlock& block : c.swap_blocks) {
      if (block.last_location == f.location) anchor = block.first_location;
    }
  }
  bool before = opts.placement == FaultPlacement::Before && f.kind != FaultKind::PrepFlip;
  for (const Gate& g : c.gates()) {
    if (before ? g.location < anchor : g.location <= anchor) continue;
    if (g.kind == GateKind::Prep0) continue;
    if (g.kind == GateKind::MeasureZ) {
      if (e.x(g.q0)) out.flips_measurement = true;
      e.set_letter(g.q0, 'I');
      continue;
    }
    conjugate_through(e, g);
  }
  out.residual_chip = e;
  for (int pos = 1; pos <= 4; pos++) {
    out.residual_data.set_letter(pos - 1, e.letter(code422::kPositionToChip[pos]));
  }
  return out;
}

std::vector<PauliString> data_generators(code422::PrepVariant v) {
  using code422::PrepVariant;
  std::vector<PauliString> gens = {code422::stabilizer_x(), code422::stabilizer_z()};
  switch (v) {
    case PrepVariant::FTv1:
    case PrepVariant::FTv2:
    case PrepVariant::NFT:
    case PrepVariant::Sparrow00:
      gens.push_back(code422::logical_z(1));
      gens.push_back(code422::logical_z(2));
      break;
    case PrepVariant::ZeroPlus:
    case PrepVariant::SparrowZeroPlus:
      gens.push_back(code422::logical_z(1));
      gens.push_back(code422::logical_x(2));
      break;
    case PrepVariant::LogicalBell:
    case PrepVariant::SparrowBell:
      gens.push_back(pauli_mul(code422::logical_x(1), code422::logical_x(2)));
      gens.push_back(pauli_mul(code422::logical_z(1), code422::logical_z(2)));
      break;
  }
  return gens;
}

// Logical class bits of a data-block Pauli: (X on logical 1, Z on logical 1,
// X on logical 2, Z on logical 2), each from anticommutation with the
// conjugate logical operator. Invariant under multiplication by S_X/S_Z.
int witness_bits(const PauliString& residual_data) {
  int bits = 0;
  if (!commutes(residual_data, code422::logical_z(1))) bits |= 1;
  if (!commutes(residual_data, code422::logical_x(1))) bits |= 2;
  if (!commutes(residual_data, code422::logical_z(2))) bits |= 4;
  if (!commutes(residual_data, code422::logical_x(2))) bits |= 8;
  return bits;
}

std::string witness_bits_label(int bits) {
  auto letter = [](int a, int b) -> char {
    if (a && b) return 'Y';
    if (a) return 'X';
    if (b) return 'Z';
    return 'I';
  };
  std::string out;
  if (char l = letter(bits & 1, (bits >> 1) & 1); l != 'I') {
    out += l;
    out += '1';
  }
  if (char l = letter((bits >> 2) & 1, (bits >> 3) & 1); l != 'I') {
    out += l;
    out += '2';
  }
  return out.empty() ? "I" : out;
}

// Two residuals whose classes differ by a logical operator that fixes the
// prepared state act identically on it, so witnesses are reported modulo the
// state's stabilizer group. The coset representative avoids Y letters and
// keeps the fullest support, which names the SWAP-failure classes the
// conventional way (Z1Z2, X1X2).
std::string witness_label(const PauliString& residual_data, code422::PrepVariant v) {
  int g1 = 0, g2 = 0;
  std::vector<PauliString> gens = data_generators(v);
  g1 = witness_bits(gens[2]);
  g2 = witness_bits(gens[3]);
  int w = witness_bits(residual_data);
  int best = -1;
  auto better = [](int a, int b) {  // true if a beats b
    auto has_y = [](int bits) {
      return ((bits & 1) && (bits & 2)) || ((bits & 4) && (bits & 8));
    };
    auto letters = [](int bits) {
      return (((bits & 3) != 0) ? 1 : 0) + (((bits >> 2) & 3) != 0 ? 1 : 0);
    };
    if (has_y(a) != has_y(b)) return !has_y(a);
    if (letters(a) != letters(b)) return letters(a) > letters(b);
    return witness_bits_label(a) < witness_bits_label(b);
  };
  for (int s : {0, g1, g2, g1 ^ g2}) {
    int cand = w ^ s;
    if (best < 0 || better(cand, best)) best = cand;
  }
  return witness_bits_label(best);
}

FaultClass class_from_propagation(const Propagated& prop,
                                  const std::vector<PauliString>& data_gens) {
  if (prop.flips_measurement) return FaultClass::Detected;  // ancilla reads 1 for sure
  const PauliString& e = prop.residual_data;
  if (!commutes(e, data_gens[0]) || !commutes(e, data_gens[1])) return FaultClass::Detected;
  if (!commutes(e, data_gens[2]) || !commutes(e, data_gens[3])) return FaultClass::Logical;
  return FaultClass::Benign;
}

}  // namespace

FaultOutcome classify_fault(const Circuit& prep, code422::PrepVariant v, const Fault& f,
                            const FaultOptions& opts) {
  Circuit faulty = inject_fault(prep, f, opts);
  std::vector<PauliString> chip_gens = ideal_generators(v);

  double acceptance = 0;
  FaultClass by_sv = classify_statevector(faulty, chip_gens, &acceptance);
  FaultClass by_tab = classify_tableau(faulty, chip_gens);
  if (by_sv != by_tab) {
    throw std::logic_error("classify: statevector and tableau disagree on " + f.label);
  }

  Propagated prop = propagate(prep, f, opts);
  FaultClass by_prop = class_from_propagation(prop, data_generators(v));
  // Propagation sees a false rejection (flipped ancilla on a good state) as
  // detected; the branch classifications agree by construction. Any other
  // disagreement is a bug.
  if (by_prop != by_sv) {
    throw std::logic_error("classify: propagation route disagrees on " + f.label);
  }

  FaultOutcome out;
  out.fault = f;
  out.cls = by_sv;
  out.rejected_with_certainty = acceptance < kTol;
  out.residual = prop.residual_chip;
  if (out.cls == FaultClass::Logical) out.witness = witness_label(prop.residual_data, v);
  return out;
}

FaultReport verify_prep(code422::PrepVariant v, const QubitLayout& layout,
                        const FaultOptions& opts, ExecMode mode) {
  Circuit prep = code422::prep_circuit(v, layout);
  std::vector<Fault> faults = enumerate_faults(prep, opts);

  FaultReport report;
  report.variant = v;
  report.outcomes.resize(faults.size());

  const long long n = static_cast<long long>(faults.size());
  if (mode == ExecMode::Parallel) {
    std::string error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < n; i++) {
      try {
        report.outcomes[i] = classify_fault(prep, v, faults[i], opts);
      } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
        error = e.what();
      }
    }
    if (!error.empty()) throw std::logic_error(error);
  } else {
    for (long long i = 0; i < n; i++) {
      report.outcomes[i] = classify_fault(prep, v, faults[i], opts);
    }
  }

  for (const FaultOutcome& o : report.outcomes) {
    switch (o.cls) {
      case FaultClass::Detected: report.n_detected++; break;
      case FaultClass::Benign: report.n_benign++; break;
      case FaultClass::Logical:
        report.n_logical++;
        report.logical_witnesses.insert(o.witness);
        break;
    }
  }
  return report;
}

VariantClaim claim_for(code422::PrepVariant v) {
  using code422::PrepVariant;
  switch (v) {
    case PrepVariant::FTv1:
    case PrepVariant::FTv2:
    case PrepVariant::LogicalBell:
    case PrepVariant::SparrowBell:
      return {true, {}};
    case PrepVariant::NFT:
      return {false, {}};
    case PrepVariant::ZeroPlus:
      return {false, {"Z1Z2"}};
    case PrepVariant::Sparrow00:
    case PrepVariant::SparrowZeroPlus:
      return {false, {"X1X2"}};
  }
  return {};
}

bool claim_satisfied(const FaultReport& report) {
  VariantClaim claim = claim_for(report.variant);
  if (claim.fault_tolerant) return report.n_logical == 0;
  if (report.n_logical == 0) return false;
  if (!claim.witnesses.empty() && report.logical_witnesses != claim.witnesses) return false;
  return true;
}

void write_report(const FaultReport& report, std::ostream& out) {
  out << "location,fault,class,witness\n";
  for (const FaultOutcome& o : report.outcomes) {
    out << o.fault.location << "," << o.fault.label << "," << fault_class_name(o.cls) << ","
        << o.witness << "\n";
  }
  out << "# " << code422::variant_name(report.variant) << ": " << report.total()
      << " faults, " << report.n_detected << " detected, " << report.n_benign << " benign, "
      << report.n_logical << " logical";
  if (!report.logical_witnesses.empty()) {
    out << ", witnesses:";
    for (const auto& w : report.logical_witnesses) out << " " << w;
  }
  out << "\n";
}

}  // namespace qed::verify
