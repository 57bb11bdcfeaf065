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

#include <iostream>

#include "CLI11.hpp"
#include "qed/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Error detection with the [[4,2,2]] code on five-qubit layouts"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  qed::cli::Options opts;
  app.add_option("--layout", opts.layout_path, "Layout config file (default: built-in raven)");
  app.add_option("--noise", opts.noise_path, "Noise config file (default: built-in)");
  app.add_option("--out", opts.out_dir, "Output directory (default: $QED422_OUT or .)");
  app.add_option("--seed", opts.seed, "Master seed (default: the noise config's seed)");
  app.add_option("--shots", opts.shots, "Shots per run")->check(CLI::PositiveNumber);
  app.add_option("--runs", opts.runs, "Runs per circuit")->check(CLI::PositiveNumber);
  app.add_option("--confidence", opts.confidence, "Confidence level for intervals")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--drift", opts.drift, "Run-to-run relative jitter of the noise rates")
      ->check(CLI::Range(0.0, 1.0));
  app.add_flag("--plot-data", opts.plot_data, "Also emit pre-binned plot series");
  app.add_flag("--serial", opts.serial, "Disable the OpenMP kernels");

  std::string variant_filter;
  auto* verify = app.add_subcommand(
      "verify", "Exhaustive single-fault verification of the preparation circuits");
  verify->add_option("variant", variant_filter,
                     "Verify one preparation variant (default: all)");
  bool verify_all = false;
  verify->add_flag("--all", verify_all, "Verify every variant (the default)");

  auto* suite =
      app.add_subcommand("suite", "Noisy sampling experiment over the circuit catalog");

  std::string pair = "2-0";
  auto* synth = app.add_subcommand("synth", "Bare-circuit synthesis on a qubit pair");
  synth->add_option("pair", pair, "Directed pair, e.g. 2-0");

  auto* catalog = app.add_subcommand("catalog", "Export the encoded circuit catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qed::cli::kUsageError;
  }

  try {
    if (verify->parsed()) {
      return qed::cli::cmd_verify(opts, variant_filter, std::cout);
    }
    if (suite->parsed()) {
      return qed::cli::cmd_suite(opts, std::cout);
    }
    if (synth->parsed()) {
      return qed::cli::cmd_synth(opts, pair, std::cout);
    }
    if (catalog->parsed()) {
      return qed::cli::cmd_catalog(opts, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qed::cli::kClaimFailure;
  }
  return qed::cli::kUsageError;
}
