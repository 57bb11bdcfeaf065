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

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "qed/circuit.hpp"
#include "qed/exec.hpp"
#include "qed/code422.hpp"
#include "qed/pauli.hpp"

namespace qed::verify {

enum class FaultKind {
  GatePauli,       // nontrivial Pauli on a gate's support
  SwapBlockPauli,  // two-qubit Pauli on a whole SWAP realization
  PrepFlip,        // X after a preparation
  MeasFlip,        // classical flip of a recorded measurement bit
  IdlePauli,       // opt-in: Pauli on a qubit idle at this location
};

struct Fault {
  FaultKind kind = FaultKind::GatePauli;
  int location = -1;       // gate location the fault attaches to
  PauliString pauli;       // circuit-width operator; identity for MeasFlip
  std::string label;
};

enum class FaultPlacement { After, Before };

struct FaultOptions {
  FaultPlacement placement = FaultPlacement::After;
  /// Fault each SWAP realization additionally as one abstract two-qubit
  /// component (after the block).
  bool abstract_swap_faults = true;
  /// Opt-in: X/Y/Z on every idle circuit qubit after every gate.
  bool idle_faults = false;
};

/// Every single-fault injection point of the circuit: all nontrivial Paulis
/// per gate support, an X flip per preparation, a bit flip per measurement.
std::vector<Fault> enumerate_faults(const Circuit& c, const FaultOptions& opts = {});

/// Closed-form fault count from the gate inventory, for completeness checks.
size_t expected_fault_count(const Circuit& c, const FaultOptions& opts = {});

/// Returns c with the fault inserted; the original is unchanged.
/// Throws if the fault does not refer to a location of c.
Circuit inject_fault(const Circuit& c, const Fault& f, const FaultOptions& opts = {});

enum class FaultClass { Detected, Benign, Logical };

const char* fault_class_name(FaultClass c);

struct FaultOutcome {
  Fault fault;
  FaultClass cls = FaultClass::Detected;
  bool rejected_with_certainty = false;
  /// Residual data-block error at the end of the circuit, in code-position
  /// order (identity when the fault is rejected or flips only readout bits).
  PauliString residual;
  /// Logical class of the residual ("X1X2", "Z1Z2", ...), empty unless the
  /// class is Logical.
  std::string witness;
};

/// Ideal-state stabilizer generators (S_X, S_Z and the two logical
/// generators fixing the target) for a preparation variant, on the chip.
std::vector<PauliString> ideal_generators(code422::PrepVariant v);

/// Classifies one fault against the intended state, using the statevector
/// ensemble, the tableau backend and Pauli propagation; the three routes must
/// agree or this throws.
FaultOutcome classify_fault(const Circuit& prep, code422::PrepVariant v, const Fault& f,
                            const FaultOptions& opts = {});

struct FaultReport {
  code422::PrepVariant variant;
  std::vector<FaultOutcome> outcomes;  // in enumeration order
  size_t n_detected = 0;
  size_t n_benign = 0;
  size_t n_logical = 0;
  std::set<std::string> logical_witnesses;

  size_t total() const { return outcomes.size(); }
};

/// Exhaustive enumeration + classification for a preparation variant.
FaultReport verify_prep(code422::PrepVariant v, const QubitLayout& layout,
                        const FaultOptions& opts = {}, ExecMode mode = ExecMode::Parallel);

/// The documented behavior of each variant.
struct VariantClaim {
  bool fault_tolerant = false;
  /// Expected witness set for non-FT variants; empty means unconstrained.
  std::set<std::string> witnesses;
};

VariantClaim claim_for(code422::PrepVariant v);
bool claim_satisfied(const FaultReport& report);

/// One record per fault plus a summary line.
void write_report(const FaultReport& report, std::ostream& out);

}  // namespace qed::verify
