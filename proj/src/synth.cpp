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

#include "qed/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <unordered_map>

#include "qed/simulate.hpp"

namespace qed::synth {

namespace {

// ----- exact amplitudes over Z[zeta_8], zeta = exp(i pi/4) -----------------
//
// Every native gate maps amplitudes within this ring up to powers of
// 1/sqrt(2), so states are held exactly and dedup needs no float rounding.

struct RingAmp {
  int32_t a = 0, b = 0, c = 0, d = 0;  // a + b z + c z^2 + d z^3

  bool zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  // x is divisible by sqrt(2) = z - z^3 iff a+c and b+d are both even.
  bool divisible_sqrt2() const { return !(((a + c) | (b + d)) & 1); }
  RingAmp div_sqrt2() const {
    return {(b - d) / 2, (a + c) / 2, (b + d) / 2, (c - a) / 2};
  }
  RingAmp neg() const { return {-a, -b, -c, -d}; }
  RingAmp operator+(const RingAmp& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  RingAmp operator-(const RingAmp& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  RingAmp mul_zeta() const { return {-d, a, b, c}; }
  RingAmp mul_zeta_pow(int k) const {
    RingAmp r = *this;
    for (int i = 0; i < (k & 7); i++) r = r.mul_zeta();
    return r;
  }
  bool operator==(const RingAmp&) const = default;
  auto operator<=>(const RingAmp&) const = default;

  std::complex<double> value() const {
    constexpr double s = 0.70710678118654752440;
    return {a + s * (b - d), c + s * (b + d)};
  }
};

struct ExactState {
  std::array<RingAmp, 4> amp;
  int sqrt2_exp = 0;  // state = amp / sqrt(2)^sqrt2_exp

  static ExactState zero_zero() {
    ExactState s;
    s.amp[0] = {1, 0, 0, 0};
    return s;
  }

  void reduce() {
    while (sqrt2_exp >= 1 && amp[0].divisible_sqrt2() && amp[1].divisible_sqrt2() &&
           amp[2].divisible_sqrt2() && amp[3].divisible_sqrt2()) {
      for (auto& a : amp) a = a.div_sqrt2();
      sqrt2_exp -= 1;
    }
  }

  // Canonical up to global phase: reduce, then pick the zeta^k rotation with
  // the lexicographically least coefficient tuple.
  void canonicalize() {
    reduce();
    std::array<RingAmp, 4> best = amp;
    std::array<RingAmp, 4> cur = amp;
    for (int k = 1; k < 8; k++) {
      for (auto& a : cur) a = a.mul_zeta();
      if (cur < best) best = cur;
    }
    amp = best;
  }

  StateVector to_statevector() const {
    StateVector sv(2);
    double scale = std::pow(0.70710678118654752440, sqrt2_exp);
    for (uint32_t i = 0; i < 4; i++) sv.amp(i) = amp[i].value() * scale;
    return sv;
  }
};

struct Key {
  std::array<int32_t, 16> c;
  int32_t exp;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  size_t operator()(const Key& k) const {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&](uint64_t v) {
      h ^= v;
      h *= 1099511628211ULL;
    };
    for (int32_t v : k.c) mix(static_cast<uint64_t>(static_cast<uint32_t>(v)));
    mix(static_cast<uint64_t>(static_cast<uint32_t>(k.exp)));
    return static_cast<size_t>(h);
  }
};

Key key_of(ExactState s) {
  s.canonicalize();
  Key k;
  for (int i = 0; i < 4; i++) {
    k.c[4 * i + 0] = s.amp[i].a;
    k.c[4 * i + 1] = s.amp[i].b;
    k.c[4 * i + 2] = s.amp[i].c;
    k.c[4 * i + 3] = s.amp[i].d;
  }
  k.exp = s.sqrt2_exp;
  return k;
}

// Basis index: bit 1 = first qubit, bit 0 = second qubit.
ExactState apply_exact(const ExactState& in, GateKind kind, int q0, int q1 = -1) {
  ExactState out = in;
  uint32_t m0 = q0 == 0 ? 2 : 1;
  switch (kind) {
    case GateKind::H:
      for (uint32_t i = 0; i < 4; i++) {
        if (i & m0) continue;
        RingAmp lo = in.amp[i], hi = in.amp[i | m0];
        out.amp[i] = lo + hi;
        out.amp[i | m0] = lo - hi;
      }
      out.sqrt2_exp++;
      break;
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Z:
    case GateKind::T:
    case GateKind::Tdg: {
      int pow = kind == GateKind::S     ? 2
                : kind == GateKind::Sdg ? 6
                : kind == GateKind::Z   ? 4
                : kind == GateKind::T   ? 1
                                        : 7;
      for (uint32_t i = 0; i < 4; i++) {
        if (i & m0) out.amp[i] = in.amp[i].mul_zeta_pow(pow);
      }
      break;
    }
    case GateKind::X:
      for (uint32_t i = 0; i < 4; i++) {
        if (!(i & m0)) out.amp[i] = in.amp[i | m0];
        else out.amp[i] = in.amp[i & ~m0];
      }
      break;
    case GateKind::Y:
      for (uint32_t i = 0; i < 4; i++) {
        if (!(i & m0)) out.amp[i] = in.amp[i | m0].mul_zeta_pow(6);  // -i
        else out.amp[i] = in.amp[i & ~m0].mul_zeta_pow(2);           // +i
      }
      break;
    case GateKind::CNOT: {
      uint32_t mc = q0 == 0 ? 2 : 1;
      uint32_t mt = q1 == 0 ? 2 : 1;
      for (uint32_t i = 0; i < 4; i++) {
        uint32_t j = (i & mc) ? (i ^ mt) : i;
        out.amp[j] = in.amp[i];
      }
      break;
    }
    case GateKind::SWAP: {
      out.amp[1] = in.amp[2];
      out.amp[2] = in.amp[1];
      break;
    }
    default:
      throw std::invalid_argument("apply_exact: unsupported gate");
  }
  return out;
}

struct SearchGate {
  GateKind kind;
  int q0;
  int q1;
};

// Native set sorted by (gate label, operands): the deterministic tie-break.
std::vector<SearchGate> native_gates(const QubitLayout& layout, DirectedPair pair,
                                     const SynthOptions& opts) {
  std::vector<SearchGate> gates;
  auto want = [&](GateKind k) {
    if (opts.excluded.count(k)) return false;
    if (opts.clifford_only && (k == GateKind::T || k == GateKind::Tdg)) return false;
    return true;
  };
  if (want(GateKind::CNOT)) {
    if (layout.has_edge(pair.control, pair.target)) gates.push_back({GateKind::CNOT, 0, 1});
    if (layout.has_edge(pair.target, pair.control)) gates.push_back({GateKind::CNOT, 1, 0});
  }
  for (GateKind k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::T, GateKind::Tdg,
                     GateKind::X, GateKind::Y, GateKind::Z}) {
    if (!want(k)) continue;
    gates.push_back({k, 0, -1});
    gates.push_back({k, 1, -1});
  }
  return gates;
}

struct Node {
  Key key;
  int32_t parent;
  int16_t gate;
  int16_t depth;
};

struct Search {
  std::vector<Node> nodes;
  std::unordered_map<Key, int32_t, KeyHash> index;
  std::vector<SearchGate> gates;
  uint64_t expanded = 0;

  std::vector<SearchGate> path(int32_t node) const {
    std::vector<SearchGate> out;
    for (int32_t i = node; nodes[i].parent >= 0; i = nodes[i].parent) {
      out.push_back(gates[nodes[i].gate]);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }
};

// Level-synchronous BFS with an ordered merge, so parallel expansion
// discovers exactly the serial tree.
Search run_bfs(const QubitLayout& layout, DirectedPair pair, const SynthOptions& opts,
               const std::vector<Key>& targets) {
  Search s;
  s.gates = native_gates(layout, pair, opts);

  std::vector<ExactState> frontier_states{ExactState::zero_zero()};
  std::vector<int32_t> frontier_ids;
  ExactState root = ExactState::zero_zero();
  s.nodes.push_back({key_of(root), -1, -1, 0});
  s.index.emplace(s.nodes[0].key, 0);
  frontier_ids.push_back(0);

  auto all_targets_found = [&] {
    for (const Key& t : targets) {
      if (!s.index.count(t)) return false;
    }
    return !targets.empty();
  };

  const size_t chunk = 8192;
  for (int depth = 1; depth <= opts.max_gates; depth++) {
    if (all_targets_found()) break;
    const size_t fsize = frontier_states.size();
    const size_t gsize = s.gates.size();
    std::vector<ExactState> next_states;
    std::vector<int32_t> next_ids;

    std::vector<ExactState> child_states;
    std::vector<Key> child_keys;
    for (size_t base = 0; base < fsize; base += chunk) {
      const size_t count = std::min(chunk, fsize - base);
      child_states.assign(count * gsize, ExactState{});
      child_keys.assign(count * gsize, Key{});

      const long long total = static_cast<long long>(count);
      const bool parallel = opts.mode == ExecMode::Parallel && count >= 512;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
      for (long long ci = 0; ci < total; ci++) {
        for (size_t gi = 0; gi < gsize; gi++) {
          const SearchGate& g = s.gates[gi];
          ExactState child = apply_exact(frontier_states[base + ci], g.kind, g.q0, g.q1);
          child_keys[ci * gsize + gi] = key_of(child);
          child_states[ci * gsize + gi] = child;
        }
      }

      // Serial in-order merge keeps discovery identical to the serial run.
      for (size_t ci = 0; ci < count; ci++) {
        for (size_t gi = 0; gi < gsize; gi++) {
          s.expanded++;
          Key& k = child_keys[ci * gsize + gi];
          auto [it, inserted] = s.index.emplace(k, static_cast<int32_t>(s.nodes.size()));
          if (!inserted) continue;
          s.nodes.push_back({k, frontier_ids[base + ci], static_cast<int16_t>(gi),
                             static_cast<int16_t>(depth)});
          next_states.push_back(child_states[ci * gsize + gi]);
          next_ids.push_back(static_cast<int32_t>(s.nodes.size()) - 1);
          if (s.nodes.size() > opts.node_limit) {
            throw std::runtime_error("synthesis: node limit exceeded");
          }
        }
      }
    }
    frontier_states = std::move(next_states);
    frontier_ids = std::move(next_ids);
    if (frontier_states.empty()) break;
  }
  return s;
}

ExactState exact_initial(code422::InitialState init) {
  ExactState s = ExactState::zero_zero();
  switch (init) {
    case code422::InitialState::Zero00:
      break;
    case code422::InitialState::ZeroPlus:
      s = apply_exact(s, GateKind::H, 1);
      break;
    case code422::InitialState::Bell:
      s = apply_exact(s, GateKind::H, 0);
      s = apply_exact(s, GateKind::CNOT, 0, 1);
      break;
  }
  return s;
}

ExactState exact_target(const code422::EncodedTask& task) {
  ExactState s = exact_initial(task.initial);
  for (code422::LogicalGate g : task.word) {
    switch (g) {
      case code422::LogicalGate::X1: s = apply_exact(s, GateKind::X, 0); break;
      case code422::LogicalGate::X2: s = apply_exact(s, GateKind::X, 1); break;
      case code422::LogicalGate::Z1: s = apply_exact(s, GateKind::Z, 0); break;
      case code422::LogicalGate::Z2: s = apply_exact(s, GateKind::Z, 1); break;
      case code422::LogicalGate::HHSwap:
        s = apply_exact(s, GateKind::SWAP, 0, 1);
        s = apply_exact(s, GateKind::H, 0);
        s = apply_exact(s, GateKind::H, 1);
        break;
      case code422::LogicalGate::CZ:
        s = apply_exact(s, GateKind::H, 1);
        s = apply_exact(s, GateKind::CNOT, 0, 1);
        s = apply_exact(s, GateKind::H, 1);
        break;
    }
  }
  return s;
}

Circuit circuit_from_path(const std::vector<SearchGate>& gates) {
  Circuit c(2);
  c.append(GateKind::Prep0, 0);
  c.append(GateKind::Prep0, 1);
  for (const SearchGate& g : gates) c.append(g.kind, g.q0, g.q1);
  c.append(GateKind::MeasureZ, 0);
  c.append(GateKind::MeasureZ, 1);
  return c;
}

// Free minimal search for all rows (shared BFS).
std::map<int, SynthesisResult> synth_all_minimal(const QubitLayout& layout,
                                                 DirectedPair pair,
                                                 const SynthOptions& opts) {
  const auto& tasks = code422::catalog_tasks();
  std::vector<Key> target_keys;
  target_keys.reserve(tasks.size());
  for (const auto& task : tasks) target_keys.push_back(key_of(exact_target(task)));

  Search search = run_bfs(layout, pair, opts, target_keys);

  std::map<int, SynthesisResult> out;
  for (size_t i = 0; i < tasks.size(); i++) {
    auto it = search.index.find(target_keys[i]);
    if (it == search.index.end()) {
      throw std::runtime_error("synth_all: target of row " +
                               std::to_string(tasks[i].row) + " not reached within " +
                               std::to_string(opts.max_gates) + " gates");
    }
    SynthesisResult r;
    r.row = tasks[i].row;
    auto path = search.path(it->second);
    r.circuit = circuit_from_path(path);
    r.gate_count = static_cast<int>(path.size());
    r.instructions = instruction_count(r.circuit);
    r.states_expanded = search.expanded;
    out.emplace(r.row, std::move(r));
  }
  return out;
}

// The catalog circuit family: minimal preparation of the initial state, then
// each word gate translated on its own (SWAP in software, CZ as h-cx-h).
std::map<int, SynthesisResult> synth_all_catalog(const QubitLayout& layout,
                                                 DirectedPair pair,
                                                 const SynthOptions& opts) {
  const auto& tasks = code422::catalog_tasks();

  // Minimal circuits for the three initial states via the shared search.
  std::vector<Key> initial_keys = {
      key_of(exact_initial(code422::InitialState::Zero00)),
      key_of(exact_initial(code422::InitialState::ZeroPlus)),
      key_of(exact_initial(code422::InitialState::Bell)),
  };
  Search search = run_bfs(layout, pair, opts, initial_keys);
  auto initial_path = [&](code422::InitialState init) {
    const Key& k = initial_keys[static_cast<int>(init)];
    auto it = search.index.find(k);
    if (it == search.index.end()) {
      throw std::runtime_error("synth_all: initial state unreachable");
    }
    return search.path(it->second);
  };

  const bool fwd = layout.has_edge(pair.control, pair.target);
  const bool rev = layout.has_edge(pair.target, pair.control);
  // CZ is symmetric; use whichever direction exists.
  const int cz_ctrl = fwd ? 0 : 1;
  const int cz_tgt = fwd ? 1 : 0;
  if (!fwd && !rev) throw std::invalid_argument("synth_all: disconnected pair");

  std::map<int, SynthesisResult> out;
  for (const auto& task : tasks) {
    Circuit c(2);
    c.append(GateKind::Prep0, 0);
    c.append(GateKind::Prep0, 1);
    int gates = 0;
    for (const SearchGate& g : initial_path(task.initial)) {
      c.append(g.kind, g.q0, g.q1);
      gates++;
    }
    int wire[2] = {0, 1};  // wire[i] = physical wire of logical qubit i+1
    for (code422::LogicalGate lg : task.word) {
      switch (lg) {
        case code422::LogicalGate::X1: c.append(GateKind::X, wire[0]); gates++; break;
        case code422::LogicalGate::X2: c.append(GateKind::X, wire[1]); gates++; break;
        case code422::LogicalGate::Z1: c.append(GateKind::Z, wire[0]); gates++; break;
        case code422::LogicalGate::Z2: c.append(GateKind::Z, wire[1]); gates++; break;
        case code422::LogicalGate::HHSwap:
          std::swap(wire[0], wire[1]);  // software relabeling, no gate
          c.append(GateKind::H, 0);
          c.append(GateKind::H, 1);
          gates += 2;
          break;
        case code422::LogicalGate::CZ:
          for (const Gate& g : decompose_cz(cz_ctrl, cz_tgt)) {
            c.append(g.kind, g.q0, g.q1);
            gates++;
          }
          break;
      }
    }
    c.append(GateKind::MeasureZ, wire[0]);
    c.append(GateKind::MeasureZ, wire[1]);

    SynthesisResult r;
    r.row = task.row;
    r.circuit = std::move(c);
    r.gate_count = gates;
    r.instructions = instruction_count(r.circuit);
    r.states_expanded = search.expanded;
    out.emplace(r.row, std::move(r));
  }
  return out;
}

}  // namespace

std::vector<TargetState> enumerate_targets() {
  std::vector<TargetState> out;
  std::vector<Key> seen;
  for (const auto& task : code422::catalog_tasks()) {
    TargetState t;
    t.row = task.row;
    t.state = code422::bare_final_state(task.initial, task.word);
    t.ideal = task.ideal;
    t.label = task.final_label;
    Key k = key_of(exact_target(task));
    for (const Key& other : seen) {
      if (other == k) throw std::logic_error("enumerate_targets: duplicate target state");
    }
    seen.push_back(k);
    out.push_back(std::move(t));
  }
  if (out.size() != 20) throw std::logic_error("enumerate_targets: expected 20 targets");
  return out;
}

std::map<int, SynthesisResult> synth_all(const QubitLayout& layout, DirectedPair pair,
                                         const SynthOptions& opts) {
  if (!layout.has_edge(pair.control, pair.target) &&
      !layout.has_edge(pair.target, pair.control)) {
    throw std::invalid_argument("synth_all: pair " + pair.name() +
                                " is not connected on " + layout.name);
  }
  return opts.strategy == Strategy::Catalog ? synth_all_catalog(layout, pair, opts)
                                            : synth_all_minimal(layout, pair, opts);
}

SynthesisResult synth_min_circuit(const TargetState& target, const QubitLayout& layout,
                                  DirectedPair pair, const SynthOptions& opts) {
  SynthOptions minimal = opts;
  minimal.strategy = Strategy::Minimal;
  auto all = synth_all(layout, pair, minimal);
  auto it = all.find(target.row);
  if (it == all.end()) throw std::invalid_argument("synth_min_circuit: unknown target row");
  return it->second;
}

size_t stabilizer_state_count(const QubitLayout& layout, DirectedPair pair) {
  SynthOptions opts;
  opts.clifford_only = true;
  opts.max_gates = 16;  // enough to close the orbit
  Search s = run_bfs(layout, pair, opts, {});
  return s.nodes.size();
}

CatalogCountReport verify_catalog_counts(const QubitLayout& layout, DirectedPair pair,
                           const SynthOptions& opts) {
  CatalogCountReport report;
  SynthOptions catalog_opts = opts;
  catalog_opts.strategy = Strategy::Catalog;
  SynthOptions minimal_opts = opts;
  minimal_opts.strategy = Strategy::Minimal;
  auto results = synth_all(layout, pair, catalog_opts);
  auto minimal = synth_all(layout, pair, minimal_opts);
  const auto& tasks = code422::catalog_tasks();
  report.all_match = true;
  for (const auto& task : tasks) {
    const SynthesisResult& r = results.at(task.row);
    CatalogCountRow row;
    row.row = task.row;
    row.label = task.final_label;
    row.expected = task.bare_instructions;
    row.found = r.instructions;
    row.minimal = minimal.at(task.row).instructions;
    row.count_match = row.expected == row.found;
    auto dist = exact_distribution(r.circuit);
    row.distribution_match = tvd(dist.logical, task.ideal) < 1e-12;
    report.all_match = report.all_match && row.count_match && row.distribution_match;
    report.states_expanded = minimal.at(task.row).states_expanded;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace qed::synth
