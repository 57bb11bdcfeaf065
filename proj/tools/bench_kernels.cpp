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

// Times the OpenMP kernels against their serial reference implementations.
// The results must be identical; only the wall time may differ.

#include <chrono>
#include <cstdio>

#include "qed/experiment.hpp"
#include "qed/synth.hpp"
#include "qed/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qed;

namespace {

double seconds(void (*fn)(ExecMode), ExecMode mode) {
  auto t0 = std::chrono::steady_clock::now();
  fn(mode);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void bench_verify(ExecMode mode) {
  auto raven = raven_layout();
  auto sparrow = sparrow_layout();
  verify::FaultOptions opts;
  opts.idle_faults = true;  // larger fault sets make the kernel visible
  for (auto v : code422::variants_for_layout(raven)) {
    verify::verify_prep(v, raven, opts, mode);
  }
  for (auto v : code422::variants_for_layout(sparrow)) {
    verify::verify_prep(v, sparrow, opts, mode);
  }
}

void bench_suite(ExecMode mode) {
  experiment::SuiteConfig cfg;
  cfg.layout = raven_layout();
  cfg.runs = 10;
  cfg.shots = 4096;
  cfg.seed = 1;
  cfg.mode = mode;
  experiment::run_suite(cfg);
}

void bench_synth(ExecMode mode) {
  auto raven = raven_layout();
  synth::SynthOptions opts;
  opts.strategy = synth::Strategy::Minimal;
  opts.mode = mode;
  // The per-pair search is small; repeat it to get a measurable kernel.
  for (int rep = 0; rep < 200; rep++) {
    for (const auto& [c, t] : raven.directed_pairs()) {
      synth::synth_all(raven, synth::DirectedPair{c, t}, opts);
    }
  }
}

void report(const char* name, void (*fn)(ExecMode)) {
  double serial = seconds(fn, ExecMode::Serial);
  double parallel = seconds(fn, ExecMode::Parallel);
  std::printf("%-22s serial %8.3f s   parallel %8.3f s   speedup %.2fx\n", name, serial,
              parallel, serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n");
#endif
  report("fault verification", bench_verify);
  report("noisy suite", bench_suite);
  report("synthesis search", bench_synth);
  return 0;
}
