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

#include "qed/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qed/experiment.hpp"
#include "qed/qasm.hpp"
#include "qed/synth.hpp"
#include "qed/verify.hpp"

namespace qed::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path, std::string* error) {
  std::ifstream in(path);
  if (!in.good()) {
    *error = "cannot open " + path;
    return {};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool write_file(const std::string& path, const std::string& content, std::ostream& log) {
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) {
    log << "error: cannot write " << path << "\n";
    return false;
  }
  out << content;
  return out.good();
}

bool load_layout(const Options& opts, QubitLayout* layout, std::ostream& log) {
  if (opts.layout_path.empty()) {
    *layout = raven_layout();
    return true;
  }
  std::string error;
  std::string text = read_file(opts.layout_path, &error);
  if (!error.empty()) {
    log << "error: " << error << "\n";
    return false;
  }
  auto parsed = parse_layout(text);
  if (!parsed.ok()) {
    for (const auto& e : parsed.errors) {
      log << opts.layout_path << ":" << format_error(e) << "\n";
    }
    return false;
  }
  *layout = *parsed.layout;
  return true;
}

bool load_noise(const Options& opts, NoiseConfig* nc, std::ostream& log) {
  if (opts.noise_path.empty()) {
    *nc = NoiseConfig{};
    return true;
  }
  std::string error;
  std::string text = read_file(opts.noise_path, &error);
  if (!error.empty()) {
    log << "error: " << error << "\n";
    return false;
  }
  auto parsed = parse_noise_config(text, &error);
  if (!parsed) {
    log << opts.noise_path << ": " << error << "\n";
    return false;
  }
  *nc = *parsed;
  return true;
}

bool ensure_out_dir(const std::string& dir, std::ostream& log) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    log << "error: cannot create " << dir << ": " << ec.message() << "\n";
    return false;
  }
  return true;
}

}  // namespace

std::string resolve_out_dir(const Options& opts) {
  if (!opts.out_dir.empty()) return opts.out_dir;
  if (const char* env = std::getenv("QED422_OUT"); env && *env) return env;
  return ".";
}

int cmd_verify(const Options& opts, const std::string& variant_filter, std::ostream& log) {
  std::string out_dir = resolve_out_dir(opts);
  if (!ensure_out_dir(out_dir, log)) return kClaimFailure;

  struct Job {
    code422::PrepVariant variant;
    QubitLayout layout;
  };
  std::vector<Job> jobs;
  if (opts.layout_path.empty()) {
    for (const QubitLayout& layout : {raven_layout(), sparrow_layout()}) {
      for (auto v : code422::variants_for_layout(layout)) jobs.push_back({v, layout});
    }
  } else {
    QubitLayout layout;
    if (!load_layout(opts, &layout, log)) return kUsageError;
    for (auto v : code422::variants_for_layout(layout)) jobs.push_back({v, layout});
  }
  if (!variant_filter.empty()) {
    auto wanted = code422::variant_from_name(variant_filter);
    if (!wanted) {
      log << "error: unknown variant '" << variant_filter << "'\n";
      return kUsageError;
    }
    std::erase_if(jobs, [&](const Job& j) { return j.variant != *wanted; });
    if (jobs.empty()) {
      log << "error: variant " << variant_filter << " not available on this layout\n";
      return kUsageError;
    }
  }

  verify::FaultOptions fopts;
  auto mode = opts.serial ? ExecMode::Serial : ExecMode::Parallel;
  bool all_ok = true;
  for (const Job& job : jobs) {
    auto report = verify::verify_prep(job.variant, job.layout, fopts, mode);
    bool ok = verify::claim_satisfied(report);
    all_ok = all_ok && ok;

    std::ostringstream file;
    verify::write_report(report, file);
    std::string path = out_dir + "/verify_" +
                       std::string(code422::variant_name(job.variant)) + ".csv";
    if (!write_file(path, file.str(), log)) return kClaimFailure;

    log << code422::variant_name(job.variant) << ": " << report.total() << " faults, "
        << report.n_detected << " detected, " << report.n_benign << " benign, "
        << report.n_logical << " logical";
    if (!report.logical_witnesses.empty()) {
      log << " (witnesses:";
      for (const auto& w : report.logical_witnesses) log << " " << w;
      log << ")";
    }
    log << " -> " << (ok ? "claim holds" : "CLAIM VIOLATED") << "\n";
  }
  return all_ok ? kOk : kClaimFailure;
}

int cmd_suite(const Options& opts, std::ostream& log) {
  std::string out_dir = resolve_out_dir(opts);
  if (!ensure_out_dir(out_dir, log)) return kClaimFailure;

  experiment::SuiteConfig cfg;
  if (!load_layout(opts, &cfg.layout, log)) return kUsageError;
  if (!load_noise(opts, &cfg.noise, log)) return kUsageError;
  if (opts.drift >= 0) cfg.noise.drift = opts.drift;
  cfg.runs = opts.runs;
  cfg.shots = opts.shots;
  cfg.confidence = opts.confidence;
  cfg.seed = opts.seed ? opts.seed : cfg.noise.seed;
  cfg.mode = opts.serial ? ExecMode::Serial : ExecMode::Parallel;

  auto report = experiment::run_suite(cfg);

  std::ostringstream runs, summary, table;
  experiment::write_runs_csv(report, runs);
  experiment::write_summary_csv(report, summary);
  experiment::write_table_summary(report, table);
  if (!write_file(out_dir + "/runs.csv", runs.str(), log)) return kClaimFailure;
  if (!write_file(out_dir + "/summary.csv", summary.str(), log)) return kClaimFailure;
  if (!write_file(out_dir + "/suite_summary.csv", table.str(), log)) return kClaimFailure;

  if (opts.plot_data) {
    std::map<int, int> instructions;
    for (const auto& task : code422::catalog_tasks()) {
      instructions[task.row] = task.bare_instructions;
    }
    std::ostringstream fig7, fig8;
    experiment::write_bare_comparison_csv(report, instructions, fig7);
    experiment::write_encoded_difference_csv(report, fig8);
    if (!write_file(out_dir + "/bare_comparison.csv", fig7.str(), log)) return kClaimFailure;
    if (!write_file(out_dir + "/encoded_difference.csv", fig8.str(), log)) {
      return kClaimFailure;
    }
  }

  log << "suite: " << report.records.size() << " runs into " << out_dir << "\n";
  log << table.str();
  log << "best bare pair: " << report.best_bare << "\n";
  return kOk;
}

int cmd_synth(const Options& opts, const std::string& pair_name, std::ostream& log) {
  std::string out_dir = resolve_out_dir(opts);
  if (!ensure_out_dir(out_dir, log)) return kClaimFailure;

  QubitLayout layout;
  if (!load_layout(opts, &layout, log)) return kUsageError;

  synth::DirectedPair pair{2, 0};
  if (!pair_name.empty()) {
    if (std::sscanf(pair_name.c_str(), "%d-%d", &pair.control, &pair.target) != 2) {
      log << "error: pair must look like '2-0'\n";
      return kUsageError;
    }
  }
  if (!layout.has_edge(pair.control, pair.target) &&
      !layout.has_edge(pair.target, pair.control)) {
    log << "error: pair " << pair.name() << " is not connected on " << layout.name << "\n";
    return kUsageError;
  }

  synth::SynthOptions sopts;
  sopts.mode = opts.serial ? ExecMode::Serial : ExecMode::Parallel;
  auto report = synth::verify_catalog_counts(layout, pair, sopts);
  auto circuits = synth::synth_all(layout, pair, sopts);

  std::ostringstream csv;
  csv << "row,final_state,expected,found,minimal,count_match,distribution_match\n";
  for (const auto& r : report.rows) {
    csv << r.row << "," << r.label << "," << r.expected << "," << r.found << "," << r.minimal
        << "," << (r.count_match ? 1 : 0) << "," << (r.distribution_match ? 1 : 0) << "\n";
  }
  if (!write_file(out_dir + "/catalog_counts.csv", csv.str(), log)) return kClaimFailure;

  for (const auto& [row, result] : circuits) {
    char name[32];
    std::snprintf(name, sizeof name, "/bare_row%02d.qasm", row);
    if (!write_file(out_dir + name, serialize_qasm(result.circuit), log)) {
      return kClaimFailure;
    }
  }

  for (const auto& r : report.rows) {
    log << "row " << r.row << ": expected " << r.expected << ", found " << r.found
        << " (minimal " << r.minimal << ") "
        << (r.count_match && r.distribution_match ? "ok" : "MISMATCH") << "\n";
  }
  log << "pair " << pair.name() << ": " << (report.all_match ? "20/20 rows match" : "MISMATCH")
      << "\n";
  return report.all_match ? kOk : kClaimFailure;
}

int cmd_catalog(const Options& opts, std::ostream& log) {
  std::string out_dir = resolve_out_dir(opts);
  if (!ensure_out_dir(out_dir, log)) return kClaimFailure;

  QubitLayout layout;
  if (!load_layout(opts, &layout, log)) return kUsageError;

  for (auto v : code422::variants_for_layout(layout)) {
    Circuit prep = code422::prep_circuit(v, layout);
    std::string path = out_dir + "/prep_" + code422::variant_name(v) + ".qasm";
    if (!write_file(path, serialize_qasm(prep), log)) return kClaimFailure;
  }

  std::ostringstream index;
  index << "row,initial,word,final_state,bare_instructions,files\n";
  for (const auto& task : code422::catalog_tasks()) {
    std::string word;
    for (auto g : task.word) {
      if (!word.empty()) word += ".";
      word += code422::logical_gate_name(g);
    }
    if (word.empty()) word = "Id";
    std::string initial = task.initial == code422::InitialState::Zero00     ? "|00>"
                          : task.initial == code422::InitialState::ZeroPlus ? "|0+>"
                                                                            : "Bell";
    std::string files;
    for (auto v : code422::variants_for_layout(layout)) {
      if (!code422::prep_matches_initial(v, task.initial)) continue;
      Circuit run = code422::build_encoded_run(task, v, layout);
      char name[48];
      std::snprintf(name, sizeof name, "encoded_row%02d_%s.qasm", task.row,
                    code422::variant_name(v));
      if (!write_file(out_dir + "/" + name, serialize_qasm(run), log)) return kClaimFailure;
      if (!files.empty()) files += ";";
      files += name;
    }
    index << task.row << "," << initial << "," << word << "," << task.final_label << ","
          << task.bare_instructions << "," << files << "\n";
  }
  if (!write_file(out_dir + "/index.csv", index.str(), log)) return kClaimFailure;
  log << "catalog written to " << out_dir << "\n";
  return kOk;
}

}  // namespace qed::cli
