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

#include "qed/qasm.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "qed/code422.hpp"

using namespace qed;

namespace {
std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("parse the short non-fault-tolerant preparation") {
  const char* text =
      "OPENQASM 2.0;\n"
      "qreg q[5];\n"
      "creg c[5];\n"
      "h q[3];\n"
      "cx q[3],q[4];\n"
      "cx q[3],q[2];\n"
      "cx q[2],q[1];\n";
  auto result = parse_qasm(text);
  REQUIRE(result.ok());
  const Circuit& c = *result.circuit;
  CHECK(c.n_qubits() == 5);
  CHECK(c.count(GateKind::H) == 1);
  CHECK(c.count(GateKind::CNOT) == 3);
  CHECK(c.count(GateKind::Prep0) == 5);
  CHECK(c.gates()[5].kind == GateKind::H);
  CHECK(c.gates()[5].q0 == 3);
}

TEST_CASE("empty body parses to an empty circuit") {
  auto result = parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncreg c[2];\n");
  REQUIRE(result.ok());
  CHECK(result.circuit->gates().size() == 2);  // the two preparations
  CHECK(result.circuit->count(GateKind::Prep0) == 2);
}

TEST_CASE("malformed constructs each yield one located error") {
  const char* text =
      "OPENQASM 2.0;\n"
      "qreg q[2];\n"
      "creg c[2];\n"
      "cx q[0];\n"        // arity
      "frobnicate q[0];\n"  // unknown gate
      "h q[7];\n"         // width
      "h r[0];\n";        // undeclared register
  auto result = parse_qasm(text);
  CHECK(!result.ok());
  REQUIRE(result.errors.size() == 4);
  CHECK(result.errors[0].kind == ParseErrorKind::Arity);
  CHECK(result.errors[0].span.line == 4);
  CHECK(result.errors[1].kind == ParseErrorKind::UnknownGate);
  CHECK(result.errors[1].span.line == 5);
  CHECK(result.errors[2].kind == ParseErrorKind::Width);
  CHECK(result.errors[2].span.line == 6);
  CHECK(result.errors[3].kind == ParseErrorKind::UndeclaredRegister);
  CHECK(result.errors[3].span.line == 7);
}

TEST_CASE("round trip: catalog circuits survive serialize/parse") {
  auto raven = raven_layout();
  auto sparrow = sparrow_layout();
  for (auto v : code422::all_variants()) {
    const QubitLayout& layout =
        (v == code422::PrepVariant::Sparrow00 || v == code422::PrepVariant::SparrowZeroPlus ||
         v == code422::PrepVariant::SparrowBell)
            ? sparrow
            : raven;
    Circuit prep = code422::prep_circuit(v, layout);
    auto parsed = parse_qasm(serialize_qasm(prep));
    REQUIRE(parsed.ok());
    CHECK(structurally_equal(prep, *parsed.circuit));
  }

  // Full encoded runs carry post-selection and readout directives.
  const auto& tasks = code422::catalog_tasks();
  Circuit bell = code422::build_encoded_run(tasks[4], code422::PrepVariant::LogicalBell, raven);
  auto parsed = parse_qasm(serialize_qasm(bell));
  REQUIRE(parsed.ok());
  CHECK(structurally_equal(bell, *parsed.circuit));
  REQUIRE(parsed.circuit->postselect.has_value());
  CHECK(parsed.circuit->postselect->parity_qubits == std::vector<int>{1, 2, 3, 4});
  CHECK(parsed.circuit->readout.bit_sources == bell.readout.bit_sources);
}

TEST_CASE("round trip: empty circuit and barriers") {
  auto r1 = parse_qasm("OPENQASM 2.0;\nqreg q[1];\ncreg c[1];\n");
  REQUIRE(r1.ok());
  auto r2 = parse_qasm(serialize_qasm(*r1.circuit));
  REQUIRE(r2.ok());
  CHECK(structurally_equal(*r1.circuit, *r2.circuit));

  auto b1 = parse_qasm(
      "OPENQASM 2.0;\nqreg q[3];\ncreg c[3];\n"
      "h q[0];\nbarrier q;\ncx q[0],q[1];\nbarrier q[1],q[2];\n");
  REQUIRE(b1.ok());
  CHECK(b1.circuit->barriers.size() == 2);
  auto b2 = parse_qasm(serialize_qasm(*b1.circuit));
  REQUIRE(b2.ok());
  CHECK(structurally_equal(*b1.circuit, *b2.circuit));
}

TEST_CASE("serializer can expand swaps for layout-legal output") {
  auto r = parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncreg c[2];\nswap q[0],q[1];\n");
  REQUIRE(r.ok());
  SerializeOptions opts;
  opts.expand_swaps = true;
  std::string text = serialize_qasm(*r.circuit, opts);
  CHECK(text.find("swap") == std::string::npos);
  auto expanded = parse_qasm(text);
  REQUIRE(expanded.ok());
  CHECK(expanded.circuit->count(GateKind::CNOT) == 3);
  CHECK(expanded.circuit->count(GateKind::H) == 4);
}

TEST_CASE("parsed gate count equals statement count minus declarations and barriers") {
  const char* text =
      "OPENQASM 2.0;\n"
      "qreg q[3];\n"
      "creg c[3];\n"
      "h q[0];\n"
      "barrier q;\n"
      "cx q[0],q[1];\n"
      "s q[2]; sdg q[2];\n"
      "measure q[0] -> c[0];\n";
  auto result = parse_qasm(text);
  REQUIRE(result.ok());
  int non_prep = 0;
  for (const Gate& g : result.circuit->gates()) non_prep += g.kind != GateKind::Prep0;
  CHECK(non_prep == 5);  // 9 statements - version - qreg - creg - barrier
}

TEST_CASE("fuzz: parser never crashes on arbitrary bytes") {
  std::mt19937_64 rng(424242);
  const std::string alphabet = "qcxhstdgmeasurebarrier[](),;->0123456789 \n\t/@OPENQASM2.\"\\%";
  for (int trial = 0; trial < 500; trial++) {
    size_t len = rng() % 200;
    std::string text;
    for (size_t i = 0; i < len; i++) {
      if (rng() % 8 == 0) {
        text.push_back(static_cast<char>(rng() & 0xff));
      } else {
        text.push_back(alphabet[rng() % alphabet.size()]);
      }
    }
    auto result = parse_qasm(text);  // must return, not crash
    if (result.circuit) CHECK(result.errors.empty());
  }
}

TEST_CASE("layout config files ship the two chips") {
  auto raven = parse_layout(read_file(std::string(QED_DATA_DIR) + "/raven.layout"));
  REQUIRE(raven.ok());
  CHECK(raven.layout->name == "raven");
  CHECK(raven.layout->n_qubits == 5);
  REQUIRE(raven.layout->cnot_edges.size() == 6);
  CHECK(raven.layout->has_edge(2, 0));
  CHECK(raven.layout->has_edge(2, 1));
  CHECK(raven.layout->has_edge(3, 2));
  CHECK(raven.layout->has_edge(2, 4));
  CHECK(raven.layout->has_edge(3, 4));
  CHECK(raven.layout->has_edge(1, 0));
  CHECK(raven.layout->qubit_with_label("A") == 0);
  CHECK(raven.layout->qubit_with_label("2") == 3);

  auto sparrow = parse_layout(read_file(std::string(QED_DATA_DIR) + "/sparrow.layout"));
  REQUIRE(sparrow.ok());
  CHECK(sparrow.layout->cnot_edges.size() == 6);
  CHECK(sparrow.layout->has_edge(0, 2));
  CHECK(sparrow.layout->has_edge(0, 1));

  // Shipped configs agree with the built-in layouts.
  CHECK(raven.layout->cnot_edges == raven_layout().cnot_edges);
  CHECK(sparrow.layout->cnot_edges == sparrow_layout().cnot_edges);
}

TEST_CASE("layout config rejects self-loops, duplicates, bad indices") {
  auto self_loop = parse_layout("name=x\nqubits=3\nedge=2,2\n");
  CHECK(!self_loop.ok());

  auto dup = parse_layout("name=x\nqubits=3\nedge=0,1\nedge=0,1\n");
  CHECK(!dup.ok());

  auto range = parse_layout("name=x\nqubits=3\nedge=0,7\n");
  CHECK(!range.ok());

  auto ok = parse_layout("name=x\nqubits=3\nedge=0,1\nedge=1,0\nlabel=0,A\n");
  CHECK(ok.ok());
  auto round = parse_layout(serialize_layout(*ok.layout));
  REQUIRE(round.ok());
  CHECK(round.layout->cnot_edges == ok.layout->cnot_edges);
  CHECK(round.layout->labels == ok.layout->labels);
}
