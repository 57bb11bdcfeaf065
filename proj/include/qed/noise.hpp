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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qed/circuit.hpp"
#include "qed/distribution.hpp"

namespace qed {

/// Pauli-twirled gate noise, optional idle depolarizing, classical readout
/// flips.
struct NoiseConfig {
  double p1 = 0.002;        // depolarizing probability per 1-qubit gate
  double p2 = 0.025;        // depolarizing probability per CNOT (15 Paulis)
  double r = 0.03;          // readout flip probability per measured bit
  double prep_flip = 0.002; // X probability per preparation
  double idle = 0.0;        // depolarizing probability per idle qubit per gate
  double drift = 0.0;       // relative run-to-run spread on the rates
  uint64_t seed = 1;
};

/// `key=value` config: p1=, p2=, r=, prep_flip=, idle=, drift=, seed=.
/// Returns nullopt and fills `error` on malformed input.
std::optional<NoiseConfig> parse_noise_config(const std::string& text, std::string* error);
std::string serialize_noise_config(const NoiseConfig& nc);

/// Per-run jitter: each rate scaled by (1 + drift * u), u uniform in [-1, 1],
/// clamped to [0, 1]. Identity when drift is 0.
NoiseConfig jittered(const NoiseConfig& nc, uint64_t run_seed);

/// Device metadata as published with each run; carried along, never used by
/// the noise channel.
struct CalibrationRecord {
  std::vector<double> t1_us;
  std::vector<double> t2_us;
  std::vector<double> gate_error;
  std::vector<double> readout_error;
  std::vector<std::pair<std::string, double>> cnot_error;  // "c-t" -> rate
  double fridge_temperature_mk = 0;
  std::string timestamp;
};

std::optional<CalibrationRecord> parse_calibration(const std::string& text,
                                                   std::string* error);

/// Monte Carlo trajectories: after each gate a Pauli is drawn from the
/// depolarizing channel of the gate's arity, each readout bit flips with
/// probability r, then post-selection and the readout map are applied.
/// Reproducible from the seed. Clifford circuits only.
ShotCounts noisy_run(const Circuit& c, const NoiseConfig& nc, uint64_t shots,
                     uint64_t seed);

}  // namespace qed
