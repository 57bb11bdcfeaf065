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
#include <map>
#include <string>
#include <vector>

#include "qed/code422.hpp"
#include "qed/distribution.hpp"
#include "qed/exec.hpp"
#include "qed/layout.hpp"
#include "qed/noise.hpp"
#include "qed/stats.hpp"

namespace qed::experiment {

/// D-hat = 1/2 sum_ij |p_ij - n_ij / n_valid| over the four logical outcomes.
/// Throws if no shots survived post-selection.
double stat_distance_hat(const ShotCounts& counts, const OutcomeDistribution& ideal);

struct RunRecord {
  int row = 0;
  std::string implementation;
  int run_index = 0;
  ShotCounts counts;
  double d_hat = 0;
  double ratio = 0;  // n_valid / total_shots
  uint64_t seed = 0;
};

struct RunAggregate {
  stats::ConfidenceInterval d_hat;
  double mean_ratio = 0;
  int n_runs = 0;
};

/// Mean, sample sd and two-sided t interval over the records' D-hat values.
RunAggregate aggregate_runs(const std::vector<RunRecord>& records, double confidence);

struct SuiteConfig {
  QubitLayout layout;
  NoiseConfig noise;
  int runs = 100;
  int shots = 8192;
  double confidence = 0.99;
  uint64_t seed = 1;
  ExecMode mode = ExecMode::Parallel;
};

struct ImplementationSummary {
  std::string name;
  bool encoded = false;
  double suite_average = 0;     // mean over rows of the per-row mean D-hat
  stats::ConfidenceInterval suite_ci;  // from per-run suite averages
  double mean_ratio = 0;
};

struct SuiteReport {
  std::vector<std::string> implementations;  // bare pairs then encoded variants
  std::vector<RunRecord> records;            // sorted by (row, implementation, run)
  std::map<std::pair<int, std::string>, RunAggregate> per_row;
  std::vector<ImplementationSummary> summary;
  std::string best_bare;
  double confidence = 0.99;

  const ImplementationSummary& summary_for(const std::string& name) const;
};

/// The experiment: every catalog row under every bare pair of the layout and
/// every encoded implementation (|00>_L preparation variants; |0+>_L and the
/// Bell state use their fixed preparations), `runs` independent runs of
/// `shots` shots each. Deterministic for a given seed in both exec modes.
SuiteReport run_suite(const SuiteConfig& cfg);

/// Per-run CSV: circuit_id, implementation, run, n_valid, n00, n01, n10, n11,
/// d_hat, ratio, seed.
void write_runs_csv(const SuiteReport& report, std::ostream& out);
/// Summary CSV: circuit_id, implementation, mean_d_hat, ci_low, ci_high,
/// mean_ratio.
void write_summary_csv(const SuiteReport& report, std::ostream& out);
/// Table-style suite summary: implementation, post_selection_ratio, avg_perf.
void write_table_summary(const SuiteReport& report, std::ostream& out);
/// Per-circuit bare-pair comparison series (with instruction counts).
void write_bare_comparison_csv(const SuiteReport& report,
                               const std::map<int, int>& instructions, std::ostream& out);
/// Encoded-minus-best-bare differences with confidence intervals.
void write_encoded_difference_csv(const SuiteReport& report, std::ostream& out);

}  // namespace qed::experiment
