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

#include "qed/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "qed/rng.hpp"
#include "qed/synth.hpp"

namespace qed::experiment {

double stat_distance_hat(const ShotCounts& counts, const OutcomeDistribution& ideal) {
  if (counts.n_valid == 0) {
    throw std::invalid_argument("stat_distance_hat: every shot was rejected");
  }
  double sum = 0;
  const double n = static_cast<double>(counts.n_valid);
  for (const char* key : {"00", "01", "10", "11"}) {
    double p = ideal.prob(key);
    double f = static_cast<double>(counts.count(key)) / n;
    sum += std::abs(p - f);
  }
  return 0.5 * sum;
}

RunAggregate aggregate_runs(const std::vector<RunRecord>& records, double confidence) {
  RunAggregate agg;
  std::vector<double> d_hats, ratios;
  d_hats.reserve(records.size());
  for (const RunRecord& r : records) {
    d_hats.push_back(r.d_hat);
    ratios.push_back(r.ratio);
  }
  agg.d_hat = stats::t_interval(d_hats, confidence);
  agg.mean_ratio = stats::mean(ratios);
  agg.n_runs = static_cast<int>(records.size());
  return agg;
}

namespace {

struct Implementation {
  std::string name;
  bool encoded = false;
  std::vector<Circuit> circuits;  // one per catalog row, in row order
};

std::vector<Implementation> build_implementations(const SuiteConfig& cfg) {
  const auto& tasks = code422::catalog_tasks();
  std::vector<Implementation> impls;

  for (const auto& [c, t] : cfg.layout.directed_pairs()) {
    synth::SynthOptions opts;
    opts.clifford_only = true;  // the minimal bare circuits are Clifford
    opts.mode = cfg.mode;
    auto results = synth::synth_all(cfg.layout, synth::DirectedPair{c, t}, opts);
    Implementation impl;
    impl.name = "bare[" + std::to_string(c) + "-" + std::to_string(t) + "]";
    for (const auto& task : tasks) impl.circuits.push_back(results.at(task.row).circuit);
    impls.push_back(std::move(impl));
  }

  for (auto v : code422::variants_for_layout(cfg.layout)) {
    if (!code422::prep_matches_initial(v, code422::InitialState::Zero00)) continue;
    Implementation impl;
    impl.name = code422::variant_name(v);
    impl.encoded = true;
    for (const auto& task : tasks) {
      auto prep = code422::prep_for_initial(task.initial, cfg.layout, v);
      impl.circuits.push_back(code422::build_encoded_run(task, prep, cfg.layout));
    }
    impls.push_back(std::move(impl));
  }
  return impls;
}

}  // namespace

const ImplementationSummary& SuiteReport::summary_for(const std::string& name) const {
  for (const auto& s : summary) {
    if (s.name == name) return s;
  }
  throw std::out_of_range("SuiteReport: no implementation " + name);
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  const auto& tasks = code422::catalog_tasks();
  std::vector<Implementation> impls = build_implementations(cfg);

  SuiteReport report;
  report.confidence = cfg.confidence;
  for (const auto& impl : impls) report.implementations.push_back(impl.name);

  const size_t n_impl = impls.size();
  const size_t n_rows = tasks.size();
  const size_t n_runs = static_cast<size_t>(cfg.runs);
  report.records.resize(n_impl * n_rows * n_runs);

  // Work seed derivation: mix(master, implementation index, row, run index).
  const long long total = static_cast<long long>(report.records.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) if (cfg.mode == ExecMode::Parallel)
#endif
  for (long long w = 0; w < total; w++) {
    size_t run = w % n_runs;
    size_t row = (w / n_runs) % n_rows;
    size_t ii = w / (n_runs * n_rows);
    uint64_t run_seed = derive_seed(cfg.seed, ii, row, run);
    NoiseConfig nc = jittered(cfg.noise, splitmix64(run_seed));

    RunRecord rec;
    rec.row = tasks[row].row;
    rec.implementation = impls[ii].name;
    rec.run_index = static_cast<int>(run);
    rec.seed = run_seed;
    rec.counts = noisy_run(impls[ii].circuits[row], nc, cfg.shots, run_seed);
    rec.ratio = static_cast<double>(rec.counts.n_valid) /
                static_cast<double>(rec.counts.total_shots);
    rec.d_hat = stat_distance_hat(rec.counts, tasks[row].ideal);
    report.records[w] = std::move(rec);
  }

  // Records land sorted by (implementation index, row, run); re-sort into the
  // report order (row, implementation name, run).
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const RunRecord& a, const RunRecord& b) {
                     if (a.row != b.row) return a.row < b.row;
                     if (a.implementation != b.implementation) {
                       return a.implementation < b.implementation;
                     }
                     return a.run_index < b.run_index;
                   });

  // Per-(row, implementation) aggregates.
  for (const auto& impl : impls) {
    for (const auto& task : tasks) {
      std::vector<RunRecord> slice;
      for (const RunRecord& r : report.records) {
        if (r.row == task.row && r.implementation == impl.name) slice.push_back(r);
      }
      report.per_row[{task.row, impl.name}] = aggregate_runs(slice, cfg.confidence);
    }
  }

  // Suite averages and their intervals from per-run suite means.
  for (const auto& impl : impls) {
    ImplementationSummary s;
    s.name = impl.name;
    s.encoded = impl.encoded;
    std::vector<double> row_means, ratios;
    for (const auto& task : tasks) {
      const RunAggregate& agg = report.per_row[{task.row, impl.name}];
      row_means.push_back(agg.d_hat.mean);
      ratios.push_back(agg.mean_ratio);
    }
    s.suite_average = stats::mean(row_means);
    s.mean_ratio = stats::mean(ratios);

    std::vector<double> per_run_means(n_runs, 0.0);
    for (const RunRecord& r : report.records) {
      if (r.implementation == impl.name) {
        per_run_means[r.run_index] += r.d_hat / static_cast<double>(n_rows);
      }
    }
    s.suite_ci = stats::t_interval(per_run_means, cfg.confidence);
    report.summary.push_back(std::move(s));
  }

  report.best_bare = "";
  for (const auto& s : report.summary) {
    if (s.encoded) continue;
    if (report.best_bare.empty() ||
        s.suite_average < report.summary_for(report.best_bare).suite_average) {
      report.best_bare = s.name;
    }
  }
  return report;
}

namespace {
std::string fmt(double v, const char* spec = "%.8f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}
}  // namespace

void write_runs_csv(const SuiteReport& report, std::ostream& out) {
  out << "circuit_id,implementation,run,n_valid,n00,n01,n10,n11,d_hat,ratio,seed\n";
  for (const RunRecord& r : report.records) {
    out << r.row << "," << r.implementation << "," << r.run_index << "," << r.counts.n_valid
        << "," << r.counts.count("00") << "," << r.counts.count("01") << ","
        << r.counts.count("10") << "," << r.counts.count("11") << "," << fmt(r.d_hat) << ","
        << fmt(r.ratio, "%.6f") << "," << r.seed << "\n";
  }
}

void write_summary_csv(const SuiteReport& report, std::ostream& out) {
  out << "circuit_id,implementation,mean_d_hat,ci_low,ci_high,mean_ratio\n";
  for (const auto& [key, agg] : report.per_row) {
    out << key.first << "," << key.second << "," << fmt(agg.d_hat.mean) << ","
        << fmt(agg.d_hat.low) << "," << fmt(agg.d_hat.high) << ","
        << fmt(agg.mean_ratio, "%.6f") << "\n";
  }
}

void write_table_summary(const SuiteReport& report, std::ostream& out) {
  out << "implementation,post_selection_ratio,avg_perf\n";
  for (const auto& s : report.summary) {
    out << s.name << "," << fmt(s.mean_ratio, "%.2f") << "," << fmt(s.suite_average) << "\n";
  }
}

void write_bare_comparison_csv(const SuiteReport& report,
                               const std::map<int, int>& instructions, std::ostream& out) {
  out << "circuit_id,instructions,implementation,mean_d_hat,ci_low,ci_high\n";
  for (const auto& [key, agg] : report.per_row) {
    const auto& name = key.second;
    if (name.rfind("bare[", 0) != 0) continue;
    int instr = instructions.count(key.first) ? instructions.at(key.first) : 0;
    out << key.first << "," << instr << "," << name << "," << fmt(agg.d_hat.mean) << ","
        << fmt(agg.d_hat.low) << "," << fmt(agg.d_hat.high) << "\n";
  }
}

void write_encoded_difference_csv(const SuiteReport& report, std::ostream& out) {
  out << "circuit_id,implementation,diff_mean,diff_ci_low,diff_ci_high\n";
  if (report.best_bare.empty()) return;
  // Paired per-run differences; runs are independent samples on both sides.
  std::map<std::pair<int, std::string>, std::vector<double>> enc, bare;
  for (const RunRecord& r : report.records) {
    if (r.implementation == report.best_bare) {
      bare[{r.row, r.implementation}].push_back(r.d_hat);
    } else if (r.implementation.rfind("bare[", 0) != 0) {
      enc[{r.row, r.implementation}].push_back(r.d_hat);
    }
  }
  for (const auto& [key, values] : enc) {
    const auto& base = bare.at({key.first, report.best_bare});
    std::vector<double> diffs(values.size());
    for (size_t i = 0; i < values.size(); i++) diffs[i] = values[i] - base[i];
    auto ci = stats::t_interval(diffs, report.confidence);
    out << key.first << "," << key.second << "," << fmt(ci.mean) << "," << fmt(ci.low) << ","
        << fmt(ci.high) << "\n";
  }
}

}  // namespace qed::experiment
