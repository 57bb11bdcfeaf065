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

#include <string>

namespace qed {

enum class GateKind {
  H,
  S,
  Sdg,
  X,
  Y,
  Z,
  T,
  Tdg,
  CNOT,
  SWAP,
  MeasureZ,
  Prep0,
};

struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;  // second operand for CNOT/SWAP, else -1
  int location = -1;

  int arity() const { return (kind == GateKind::CNOT || kind == GateKind::SWAP) ? 2 : 1; }
  bool touches(int q) const { return q0 == q || q1 == q; }
};

inline bool is_unitary(GateKind k) {
  return k != GateKind::MeasureZ && k != GateKind::Prep0;
}

inline bool is_clifford(GateKind k) {
  return is_unitary(k) && k != GateKind::T && k != GateKind::Tdg;
}

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::CNOT: return "cx";
    case GateKind::SWAP: return "swap";
    case GateKind::MeasureZ: return "measure";
    case GateKind::Prep0: return "prep";
  }
  return "?";
}

}  // namespace qed
