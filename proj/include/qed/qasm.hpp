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

#include <optional>
#include <string>
#include <vector>

#include "qed/circuit.hpp"
#include "qed/layout.hpp"

namespace qed {

struct SourceSpan {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  int length = 0;
};

enum class ParseErrorKind {
  Syntax,
  UnknownGate,
  Arity,
  UndeclaredRegister,
  Width,
};

struct ParseError {
  SourceSpan span;
  std::string message;
  ParseErrorKind kind = ParseErrorKind::Syntax;
};

std::string format_error(const ParseError& e);

/// Result of parsing; `circuit` is present when no errors occurred.
struct QasmParseResult {
  std::optional<Circuit> circuit;
  std::vector<ParseError> errors;
  bool ok() const { return errors.empty(); }
};

/// Parses the OpenQASM 2.0 subset: version header, one qreg/creg pair, gates
/// h s sdg t tdg x y z cx swap, measure, barrier. Parsing continues past
/// malformed statements and reports every error with a source span.
///
/// Post-selection and logical-readout metadata travel in `//@` directive
/// comments:
///   //@ ancilla q[0]
///   //@ parity q[1] q[2] q[3] q[4]
///   //@ logical q[1] q[3]
QasmParseResult parse_qasm(const std::string& text);

struct SerializeOptions {
  bool expand_swaps = false;  // rewrite swap via its three-CNOT realization
};

/// Inverse of parse_qasm on its outputs: parse(serialize(c)) is structurally
/// equal to c for any circuit that preps its whole register up front.
std::string serialize_qasm(const Circuit& c, const SerializeOptions& opts = {});

struct LayoutParseResult {
  std::optional<QubitLayout> layout;
  std::vector<ParseError> errors;
  bool ok() const { return errors.empty(); }
};

/// Line-oriented layout config: `name=`, `qubits=`, repeated `edge=c,t`,
/// repeated `label=qubit,name`. Rejects duplicate edges, self-loops and
/// out-of-range indices.
LayoutParseResult parse_layout(const std::string& text);

std::string serialize_layout(const QubitLayout& layout);

}  // namespace qed
