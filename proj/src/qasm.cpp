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

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace qed {

namespace {

struct Token {
  enum Kind { Ident, Number, LBracket, RBracket, Comma, Semi, Arrow, End } kind;
  std::string text;
  SourceSpan span;
};

struct Directive {
  int line;
  std::string text;  // content after "//@"
};

class Lexer {
 public:
  Lexer(const std::string& text, std::vector<Directive>* directives)
      : text_(text), directives_(directives) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.span = {line_, col_, 1};
    if (pos_ >= text_.size()) {
      t.kind = Token::End;
      return t;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        advance();
      }
      t.kind = Token::Ident;
      t.text = text_.substr(start, pos_ - start);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        advance();
      }
      t.kind = Token::Number;
      t.text = text_.substr(start, pos_ - start);
    } else if (c == '[') {
      t.kind = Token::LBracket;
      advance();
    } else if (c == ']') {
      t.kind = Token::RBracket;
      advance();
    } else if (c == ',') {
      t.kind = Token::Comma;
      advance();
    } else if (c == ';') {
      t.kind = Token::Semi;
      advance();
    } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      t.kind = Token::Arrow;
      advance();
      advance();
    } else {
      // Unknown byte: return it as a zero-class token the parser will reject.
      t.kind = Token::Ident;
      t.text = std::string(1, c);
      advance();
    }
    t.span.length = static_cast<int>(t.text.empty() ? 1 : t.text.size());
    return t;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      line_++;
      col_ = 1;
    } else {
      col_++;
    }
    pos_++;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        bool directive = pos_ + 2 < text_.size() && text_[pos_ + 2] == '@';
        int dir_line = line_;
        size_t start = pos_ + (directive ? 3 : 2);
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        if (directive && directives_) {
          directives_->push_back({dir_line, text_.substr(start, pos_ - start)});
        }
      } else {
        return;
      }
    }
  }

  const std::string& text_;
  std::vector<Directive>* directives_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct PendingGate {
  GateKind kind;
  std::vector<int> qubits;
};

struct PendingBarrier {
  bool whole_register;
  std::vector<int> qubits;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text, &directives_) { advance(); }

  QasmParseResult run() {
    parse_header();
    while (cur_.kind != Token::End) parse_statement();
    build();
    QasmParseResult out;
    out.errors = errors_;
    if (errors_.empty()) out.circuit = std::move(circuit_);
    return out;
  }

 private:
  static const std::map<std::string, GateKind>& gate_table() {
    static const std::map<std::string, GateKind> table = {
        {"h", GateKind::H},     {"s", GateKind::S},     {"sdg", GateKind::Sdg},
        {"t", GateKind::T},     {"tdg", GateKind::Tdg}, {"x", GateKind::X},
        {"y", GateKind::Y},     {"z", GateKind::Z},     {"cx", GateKind::CNOT},
        {"swap", GateKind::SWAP},
    };
    return table;
  }

  void advance() { cur_ = lexer_.next(); }

  void error(ParseErrorKind kind, const std::string& message, const SourceSpan* at = nullptr) {
    errors_.push_back({at ? *at : cur_.span, message, kind});
  }

  void sync_to_semi() {
    while (cur_.kind != Token::Semi && cur_.kind != Token::End) advance();
    if (cur_.kind == Token::Semi) advance();
  }

  bool expect_semi() {
    if (cur_.kind != Token::Semi) {
      error(ParseErrorKind::Syntax, "expected ';'");
      sync_to_semi();
      return false;
    }
    advance();
    return true;
  }

  void parse_header() {
    if (cur_.kind == Token::Ident && cur_.text == "OPENQASM") {
      advance();
      if (cur_.kind != Token::Number || cur_.text != "2.0") {
        error(ParseErrorKind::Syntax, "expected version 2.0");
        sync_to_semi();
        return;
      }
      advance();
      expect_semi();
    } else {
      error(ParseErrorKind::Syntax, "expected OPENQASM 2.0 header");
    }
  }

  // Parses `name[index]`; returns index or -1 on failure.
  int parse_ref(const std::string& want_reg, int declared_size, ParseErrorKind range_kind) {
    if (cur_.kind != Token::Ident) {
      error(ParseErrorKind::Syntax, "expected register reference");
      return -1;
    }
    SourceSpan name_span = cur_.span;
    std::string name = cur_.text;
    advance();
    if (cur_.kind != Token::LBracket) {
      error(ParseErrorKind::Syntax, "expected '['");
      return -1;
    }
    advance();
    if (cur_.kind != Token::Number) {
      error(ParseErrorKind::Syntax, "expected index");
      return -1;
    }
    int idx = std::atoi(cur_.text.c_str());
    SourceSpan idx_span = cur_.span;
    advance();
    if (cur_.kind != Token::RBracket) {
      error(ParseErrorKind::Syntax, "expected ']'");
      return -1;
    }
    advance();
    if (name != want_reg) {
      error(ParseErrorKind::UndeclaredRegister, "undeclared register '" + name + "'",
            &name_span);
      return -1;
    }
    if (declared_size >= 0 && idx >= declared_size) {
      error(range_kind, "index " + std::to_string(idx) + " out of range", &idx_span);
      return -1;
    }
    return idx;
  }

  void parse_statement() {
    if (cur_.kind != Token::Ident) {
      error(ParseErrorKind::Syntax, "expected statement");
      sync_to_semi();
      return;
    }
    std::string head = cur_.text;
    SourceSpan head_span = cur_.span;

    if (head == "qreg" || head == "creg") {
      advance();
      if (cur_.kind != Token::Ident) {
        error(ParseErrorKind::Syntax, "expected register name");
        sync_to_semi();
        return;
      }
      std::string name = cur_.text;
      advance();
      if (cur_.kind != Token::LBracket) {
        error(ParseErrorKind::Syntax, "expected '['");
        sync_to_semi();
        return;
      }
      advance();
      if (cur_.kind != Token::Number) {
        error(ParseErrorKind::Syntax, "expected register size");
        sync_to_semi();
        return;
      }
      int size = std::atoi(cur_.text.c_str());
      advance();
      if (cur_.kind != Token::RBracket) {
        error(ParseErrorKind::Syntax, "expected ']'");
        sync_to_semi();
        return;
      }
      advance();
      if (head == "qreg") {
        if (qreg_size_ >= 0) {
          error(ParseErrorKind::Syntax, "duplicate qreg", &head_span);
        } else if (size < 1 || size > kMaxQubits) {
          error(ParseErrorKind::Width, "unsupported register size", &head_span);
        } else {
          qreg_size_ = size;
          qreg_name_ = name;
        }
      } else {
        creg_size_ = size;
        creg_name_ = name;
      }
      expect_semi();
      return;
    }

    if (head == "measure") {
      advance();
      int q = parse_ref(qreg_name_, qreg_size_, ParseErrorKind::Width);
      if (q < 0) {
        sync_to_semi();
        return;
      }
      if (cur_.kind != Token::Arrow) {
        error(ParseErrorKind::Syntax, "expected '->'");
        sync_to_semi();
        return;
      }
      advance();
      int cbit = parse_ref(creg_name_, creg_size_, ParseErrorKind::Width);
      if (cbit < 0) {
        sync_to_semi();
        return;
      }
      if (measured_.count(q)) {
        error(ParseErrorKind::Arity, "qubit measured twice", &head_span);
        sync_to_semi();
        return;
      }
      measured_.insert(q);
      gates_.push_back({GateKind::MeasureZ, {q}});
      expect_semi();
      return;
    }

    if (head == "barrier") {
      advance();
      PendingBarrier b{false, {}};
      if (cur_.kind == Token::Ident && cur_.text == qreg_name_) {
        // Either `barrier q;` or `barrier q[i], ...;`
        Token save = cur_;
        advance();
        if (cur_.kind == Token::Semi) {
          b.whole_register = true;
          barriers_.emplace_back(static_cast<int>(gates_.size()), b);
          advance();
          return;
        }
        // Re-parse as a reference list; we already consumed the name.
        if (cur_.kind != Token::LBracket) {
          error(ParseErrorKind::Syntax, "expected '[' or ';'", &save.span);
          sync_to_semi();
          return;
        }
        advance();
        if (cur_.kind != Token::Number) {
          error(ParseErrorKind::Syntax, "expected index");
          sync_to_semi();
          return;
        }
        int idx = std::atoi(cur_.text.c_str());
        advance();
        if (cur_.kind != Token::RBracket) {
          error(ParseErrorKind::Syntax, "expected ']'");
          sync_to_semi();
          return;
        }
        advance();
        if (qreg_size_ >= 0 && idx >= qreg_size_) {
          error(ParseErrorKind::Width, "index out of range");
          sync_to_semi();
          return;
        }
        b.qubits.push_back(idx);
        while (cur_.kind == Token::Comma) {
          advance();
          int q = parse_ref(qreg_name_, qreg_size_, ParseErrorKind::Width);
          if (q < 0) {
            sync_to_semi();
            return;
          }
          b.qubits.push_back(q);
        }
        barriers_.emplace_back(static_cast<int>(gates_.size()), b);
        expect_semi();
        return;
      }
      error(ParseErrorKind::Syntax, "expected register after barrier");
      sync_to_semi();
      return;
    }

    auto it = gate_table().find(head);
    if (it == gate_table().end()) {
      error(ParseErrorKind::UnknownGate, "unknown gate '" + head + "'", &head_span);
      sync_to_semi();
      return;
    }
    advance();
    PendingGate g{it->second, {}};
    int q = parse_ref(qreg_name_, qreg_size_, ParseErrorKind::Width);
    if (q < 0) {
      sync_to_semi();
      return;
    }
    g.qubits.push_back(q);
    while (cur_.kind == Token::Comma) {
      advance();
      q = parse_ref(qreg_name_, qreg_size_, ParseErrorKind::Width);
      if (q < 0) {
        sync_to_semi();
        return;
      }
      g.qubits.push_back(q);
    }
    int want = (g.kind == GateKind::CNOT || g.kind == GateKind::SWAP) ? 2 : 1;
    if (static_cast<int>(g.qubits.size()) != want) {
      error(ParseErrorKind::Arity,
            std::string(gate_name(g.kind)) + " expects " + std::to_string(want) +
                " operand(s), got " + std::to_string(g.qubits.size()),
            &head_span);
      sync_to_semi();
      return;
    }
    if (want == 2 && g.qubits[0] == g.qubits[1]) {
      error(ParseErrorKind::Arity, "operands must be distinct", &head_span);
      sync_to_semi();
      return;
    }
    gates_.push_back(std::move(g));
    expect_semi();
  }

  void parse_directives() {
    for (const Directive& d : directives_) {
      std::istringstream in(d.text);
      std::string word;
      in >> word;
      SourceSpan span{d.line, 1, static_cast<int>(d.text.size())};
      auto read_qubits = [&](std::vector<int>& out) {
        std::string ref;
        while (in >> ref) {
          int q = -1;
          if (std::sscanf(ref.c_str(), (qreg_name_ + "[%d]").c_str(), &q) != 1 || q < 0 ||
              q >= qreg_size_) {
            errors_.push_back({span, "bad qubit reference '" + ref + "' in directive",
                               ParseErrorKind::Syntax});
            return false;
          }
          out.push_back(q);
        }
        return true;
      };
      if (word == "ancilla") {
        std::vector<int> qs;
        if (!read_qubits(qs) || qs.size() != 1) {
          errors_.push_back({span, "ancilla directive expects one qubit",
                             ParseErrorKind::Syntax});
          continue;
        }
        if (!circuit_.postselect) circuit_.postselect = PostselectRule{};
        circuit_.postselect->ancilla_qubit = qs[0];
      } else if (word == "parity") {
        std::vector<int> qs;
        if (!read_qubits(qs)) continue;
        if (!circuit_.postselect) circuit_.postselect = PostselectRule{};
        circuit_.postselect->parity_qubits = qs;
      } else if (word == "logical") {
        std::vector<int> qs;
        if (!read_qubits(qs)) continue;
        circuit_.readout.bit_sources.push_back(qs);
      } else {
        errors_.push_back({span, "unknown directive '" + word + "'", ParseErrorKind::Syntax});
      }
    }
  }

  void build() {
    if (qreg_size_ < 0) {
      errors_.push_back({{1, 1, 1}, "missing qreg declaration", ParseErrorKind::Syntax});
      return;
    }
    circuit_ = Circuit(qreg_size_);
    for (int q = 0; q < qreg_size_; q++) circuit_.append(GateKind::Prep0, q);
    size_t barrier_idx = 0;
    for (size_t i = 0; i <= gates_.size(); i++) {
      while (barrier_idx < barriers_.size() &&
             barriers_[barrier_idx].first == static_cast<int>(i)) {
        const PendingBarrier& b = barriers_[barrier_idx].second;
        circuit_.append_barrier(b.whole_register ? std::vector<int>{} : b.qubits);
        barrier_idx++;
      }
      if (i == gates_.size()) break;
      const PendingGate& g = gates_[i];
      circuit_.append(g.kind, g.qubits[0], g.qubits.size() > 1 ? g.qubits[1] : -1);
    }
    parse_directives();
  }

  Lexer lexer_;
  Token cur_;
  std::vector<Directive> directives_;
  std::vector<ParseError> errors_;
  std::vector<PendingGate> gates_;
  std::vector<std::pair<int, PendingBarrier>> barriers_;  // (gate index, barrier)
  std::set<int> measured_;
  int qreg_size_ = -1;
  int creg_size_ = -1;
  std::string qreg_name_ = "q";
  std::string creg_name_ = "c";
  Circuit circuit_;
};

}  // namespace

std::string format_error(const ParseError& e) {
  static const char* kind_names[] = {"syntax", "unknown-gate", "arity",
                                     "undeclared-register", "width"};
  std::ostringstream out;
  out << e.span.line << ":" << e.span.column << ": "
      << kind_names[static_cast<int>(e.kind)] << ": " << e.message;
  return out.str();
}

QasmParseResult parse_qasm(const std::string& text) { return Parser(text).run(); }

std::string serialize_qasm(const Circuit& c, const SerializeOptions& opts) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "qreg q[" << c.n_qubits() << "];\n";
  int n_meas = static_cast<int>(c.measured_qubits().size());
  out << "creg c[" << std::max(1, n_meas) << "];\n";

  auto emit_barriers_before = [&](int location) {
    for (const BarrierMark& b : c.barriers) {
      if (b.before_location != location) continue;
      out << "barrier";
      if (b.qubits.empty()) {
        out << " q";
      } else {
        for (size_t i = 0; i < b.qubits.size(); i++) {
          out << (i ? "," : " ") << "q[" << b.qubits[i] << "]";
        }
      }
      out << ";\n";
    }
  };

  int cbit = 0;
  int end_location = 0;
  for (const Gate& g : c.gates()) {
    emit_barriers_before(g.location);
    end_location = g.location + 1;
    switch (g.kind) {
      case GateKind::Prep0:
        break;  // implicit: QASM registers start in |0>
      case GateKind::MeasureZ:
        out << "measure q[" << g.q0 << "] -> c[" << cbit++ << "];\n";
        break;
      case GateKind::SWAP:
        if (opts.expand_swaps) {
          for (const Gate& e : decompose_swap(g.q0, g.q1)) {
            out << gate_name(e.kind) << " q[" << e.q0 << "]";
            if (e.kind == GateKind::CNOT) out << ",q[" << e.q1 << "]";
            out << ";\n";
          }
          break;
        }
        [[fallthrough]];
      default:
        out << gate_name(g.kind) << " q[" << g.q0 << "]";
        if (g.q1 >= 0) out << ",q[" << g.q1 << "]";
        out << ";\n";
    }
  }
  emit_barriers_before(end_location);

  if (c.postselect) {
    if (c.postselect->ancilla_qubit >= 0) {
      out << "//@ ancilla q[" << c.postselect->ancilla_qubit << "]\n";
    }
    if (!c.postselect->parity_qubits.empty()) {
      out << "//@ parity";
      for (int q : c.postselect->parity_qubits) out << " q[" << q << "]";
      out << "\n";
    }
  }
  for (const auto& sources : c.readout.bit_sources) {
    out << "//@ logical";
    for (int q : sources) out << " q[" << q << "]";
    out << "\n";
  }
  return out.str();
}

LayoutParseResult parse_layout(const std::string& text) {
  LayoutParseResult out;
  QubitLayout layout;
  bool have_name = false, have_qubits = false;
  std::set<std::pair<int, int>> seen_edges;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto err = [&](const std::string& msg, ParseErrorKind kind) {
    out.errors.push_back({{line_no, 1, static_cast<int>(line.size())}, msg, kind});
  };
  while (std::getline(in, line)) {
    line_no++;
    size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    if (line[begin] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      err("expected key=value", ParseErrorKind::Syntax);
      continue;
    }
    std::string key = line.substr(begin, eq - begin);
    std::string value = line.substr(eq + 1);
    while (!value.empty() && (value.back() == '\r' || value.back() == ' ')) value.pop_back();
    if (key == "name") {
      layout.name = value;
      have_name = true;
    } else if (key == "qubits") {
      layout.n_qubits = std::atoi(value.c_str());
      have_qubits = true;
      if (layout.n_qubits < 1 || layout.n_qubits > kMaxQubits) {
        err("unsupported qubit count", ParseErrorKind::Width);
      }
    } else if (key == "edge") {
      int a = -1, b = -1;
      if (std::sscanf(value.c_str(), "%d,%d", &a, &b) != 2) {
        err("edge expects 'control,target'", ParseErrorKind::Syntax);
        continue;
      }
      if (a == b) {
        err("self-loop edge", ParseErrorKind::Syntax);
        continue;
      }
      if (!have_qubits || a < 0 || b < 0 || a >= layout.n_qubits || b >= layout.n_qubits) {
        err("edge index out of range", ParseErrorKind::Width);
        continue;
      }
      if (!seen_edges.insert({a, b}).second) {
        err("duplicate edge", ParseErrorKind::Syntax);
        continue;
      }
      layout.cnot_edges.emplace_back(a, b);
    } else if (key == "label") {
      int q = -1;
      char label[16] = {0};
      if (std::sscanf(value.c_str(), "%d,%15s", &q, label) != 2) {
        err("label expects 'qubit,name'", ParseErrorKind::Syntax);
        continue;
      }
      if (!have_qubits || q < 0 || q >= layout.n_qubits) {
        err("label index out of range", ParseErrorKind::Width);
        continue;
      }
      if (layout.labels.size() < static_cast<size_t>(layout.n_qubits)) {
        layout.labels.resize(layout.n_qubits);
      }
      layout.labels[q] = label;
    } else {
      err("unknown key '" + key + "'", ParseErrorKind::Syntax);
    }
  }
  if (!have_name) {
    line_no = 1;
    line.clear();
    err("missing name", ParseErrorKind::Syntax);
  }
  if (!have_qubits) {
    line_no = 1;
    line.clear();
    err("missing qubit count", ParseErrorKind::Syntax);
  }
  if (out.errors.empty()) out.layout = std::move(layout);
  return out;
}

std::string serialize_layout(const QubitLayout& layout) {
  std::ostringstream out;
  out << "name=" << layout.name << "\n";
  out << "qubits=" << layout.n_qubits << "\n";
  for (const auto& [c, t] : layout.cnot_edges) out << "edge=" << c << "," << t << "\n";
  for (size_t q = 0; q < layout.labels.size(); q++) {
    if (!layout.labels[q].empty()) out << "label=" << q << "," << layout.labels[q] << "\n";
  }
  return out.str();
}

}  // namespace qed
