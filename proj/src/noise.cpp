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

#include "qed/noise.hpp"

#include <algorithm>
#include <sstream>

#include "qed/rng.hpp"
#include "qed/simulate.hpp"
#include "qed/tableau.hpp"

namespace qed {

std::optional<NoiseConfig> parse_noise_config(const std::string& text, std::string* error) {
  NoiseConfig nc;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    if (error) *error = "line " + std::to_string(line_no) + ": " + msg;
    return std::nullopt;
  };
  while (std::getline(in, line)) {
    line_no++;
    size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) return fail("expected key=value");
    std::string key = line.substr(begin, eq - begin);
    std::string value = line.substr(eq + 1);
    char* end = nullptr;
    double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str()) return fail("bad number for " + key);
    if (key == "p1") nc.p1 = v;
    else if (key == "p2") nc.p2 = v;
    else if (key == "r") nc.r = v;
    else if (key == "prep_flip") nc.prep_flip = v;
    else if (key == "idle") nc.idle = v;
    else if (key == "drift") nc.drift = v;
    else if (key == "seed") nc.seed = static_cast<uint64_t>(std::strtoull(value.c_str(), nullptr, 10));
    else return fail("unknown key '" + key + "'");
  }
  for (double p : {nc.p1, nc.p2, nc.r, nc.prep_flip, nc.idle}) {
    if (p < 0 || p > 1) {
      line_no = 0;
      return fail("probabilities must be in [0,1]");
    }
  }
  return nc;
}

std::string serialize_noise_config(const NoiseConfig& nc) {
  std::ostringstream out;
  out << "p1=" << nc.p1 << "\n";
  out << "p2=" << nc.p2 << "\n";
  out << "r=" << nc.r << "\n";
  out << "prep_flip=" << nc.prep_flip << "\n";
  out << "idle=" << nc.idle << "\n";
  out << "drift=" << nc.drift << "\n";
  out << "seed=" << nc.seed << "\n";
  return out.str();
}

NoiseConfig jittered(const NoiseConfig& nc, uint64_t run_seed) {
  if (nc.drift == 0) return nc;
  std::mt19937_64 rng(run_seed);
  NoiseConfig out = nc;
  auto scale = [&](double p) {
    double u = 2.0 * next_double(rng) - 1.0;
    return std::clamp(p * (1.0 + nc.drift * u), 0.0, 1.0);
  };
  out.p1 = scale(nc.p1);
  out.p2 = scale(nc.p2);
  out.r = scale(nc.r);
  out.prep_flip = scale(nc.prep_flip);
  out.idle = scale(nc.idle);
  return out;
}

std::optional<CalibrationRecord> parse_calibration(const std::string& text,
                                                   std::string* error) {
  CalibrationRecord rec;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    if (error) *error = "line " + std::to_string(line_no) + ": " + msg;
    return std::nullopt;
  };
  while (std::getline(in, line)) {
    line_no++;
    size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) return fail("expected key=value");
    std::string key = line.substr(begin, eq - begin);
    std::string value = line.substr(eq + 1);
    auto parse_list = [&](std::vector<double>& out) {
      std::istringstream vs(value);
      std::string item;
      while (std::getline(vs, item, ',')) {
        char* end = nullptr;
        double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || v < 0) return false;
        out.push_back(v);
      }
      return true;
    };
    bool ok = true;
    if (key == "t1_us") ok = parse_list(rec.t1_us);
    else if (key == "t2_us") ok = parse_list(rec.t2_us);
    else if (key == "gate_error") ok = parse_list(rec.gate_error);
    else if (key == "readout_error") ok = parse_list(rec.readout_error);
    else if (key == "fridge_mk") {
      rec.fridge_temperature_mk = std::strtod(value.c_str(), nullptr);
      ok = rec.fridge_temperature_mk >= 0;
    } else if (key == "timestamp") {
      rec.timestamp = value;
    } else if (key.rfind("cnot_error_", 0) == 0) {
      double v = std::strtod(value.c_str(), nullptr);
      ok = v >= 0;
      rec.cnot_error.emplace_back(key.substr(11), v);
    } else {
      return fail("unknown key '" + key + "'");
    }
    if (!ok) return fail("bad value for " + key);
  }
  return rec;
}

ShotCounts noisy_run(const Circuit& c, const NoiseConfig& nc, uint64_t shots,
                     uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("noisy_run: shots must be >= 1");
  std::mt19937_64 rng(seed);
  const std::vector<int> measured = c.measured_qubits();

  // Idle noise targets: qubits the circuit acts on, per gate, minus the
  // gate's own support.
  std::vector<int> active;
  for (int q = 0; q < c.n_qubits(); q++) {
    for (const Gate& g : c.gates()) {
      if (g.kind != GateKind::Prep0 && g.touches(q)) {
        active.push_back(q);
        break;
      }
    }
  }

  ShotCounts out;
  out.total_shots = shots;

  static const char kLetters[] = "IXYZ";
  std::vector<uint8_t> bits(measured.size());

  for (uint64_t shot = 0; shot < shots; shot++) {
    StabilizerTableau tab(c.n_qubits());
    size_t bit_idx = 0;
    for (const Gate& g : c.gates()) {
      switch (g.kind) {
        case GateKind::Prep0:
          if (nc.prep_flip > 0 && next_double(rng) < nc.prep_flip) {
            tab.apply_gate(Gate{GateKind::X, g.q0});
          }
          break;
        case GateKind::MeasureZ: {
          auto m = tab.measure_z(g.q0, -1, next_bit(rng));
          int bit = m.bit;
          if (nc.r > 0 && next_double(rng) < nc.r) bit ^= 1;
          bits[bit_idx++] = static_cast<uint8_t>(bit);
          break;
        }
        case GateKind::CNOT:
        case GateKind::SWAP: {
          tab.apply_gate(g);
          if (nc.p2 > 0 && next_double(rng) < nc.p2) {
            int pick = 1 + static_cast<int>(rng() % 15);
            char l0 = kLetters[pick >> 2];
            char l1 = kLetters[pick & 3];
            PauliString p(c.n_qubits());
            if (l0 != 'I') p.set_letter(g.q0, l0);
            if (l1 != 'I') p.set_letter(g.q1, l1);
            tab.apply_pauli(p);
          }
          break;
        }
        default: {
          tab.apply_gate(g);
          if (nc.p1 > 0 && next_double(rng) < nc.p1) {
            char l = kLetters[1 + rng() % 3];
            tab.apply_pauli(PauliString::single(c.n_qubits(), g.q0, l));
          }
        }
      }
      if (nc.idle > 0 && is_unitary(g.kind) && g.kind != GateKind::Prep0) {
        for (int q : active) {
          if (g.touches(q)) continue;
          if (next_double(rng) < nc.idle) {
            char l = kLetters[1 + rng() % 3];
            tab.apply_pauli(PauliString::single(c.n_qubits(), q, l));
          }
        }
      }
    }
    if (shot_accepted(c, bits)) {
      out.n_valid++;
      out.counts[logical_key(c, bits)]++;
    }
  }
  return out;
}

}  // namespace qed
