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
#include <string>

#include "qed/layout.hpp"
#include "qed/noise.hpp"

namespace qed::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kClaimFailure = 1;
inline constexpr int kUsageError = 2;

struct Options {
  std::string layout_path;  // empty: built-in raven (verify: both chips)
  std::string noise_path;   // empty: built-in defaults
  std::string out_dir;      // empty: QED422_OUT env var, else "."
  uint64_t seed = 0;        // 0: use the noise config's seed
  int shots = 8192;
  int runs = 100;
  double confidence = 0.99;
  double drift = -1;        // >= 0 overrides the noise config's drift
  bool plot_data = false;
  bool serial = false;
};

/// Resolved output directory: --out flag, then QED422_OUT, then cwd.
std::string resolve_out_dir(const Options& opts);

/// Exhaustive single-fault verification. Writes one report per variant and
/// returns kOk iff every verified variant matches its documented claim.
/// `variant_filter` selects one variant by name; empty verifies all.
int cmd_verify(const Options& opts, const std::string& variant_filter, std::ostream& log);

/// The noisy sampling experiment; writes runs.csv, summary.csv and
/// suite_summary.csv (plus the plot series when requested).
int cmd_suite(const Options& opts, std::ostream& log);

/// Bare synthesis on one pair ("c-t"); writes the 20 QASM files and
/// catalog_counts.csv, and returns kOk iff the catalog counts are reproduced.
int cmd_synth(const Options& opts, const std::string& pair, std::ostream& log);

/// Exports the encoded circuit catalog (preparations and encoded runs) with
/// an index file mapping catalog rows to tasks.
int cmd_catalog(const Options& opts, std::ostream& log);

}  // namespace qed::cli
