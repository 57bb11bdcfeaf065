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

#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qed/experiment.hpp"
#include "qed/rng.hpp"
#include "qed/simulate.hpp"
#include "qed/stats.hpp"

using namespace qed;
using namespace qed::experiment;

namespace {
NoiseConfig quiet() {
  NoiseConfig nc;
  nc.p1 = nc.p2 = nc.r = nc.prep_flip = nc.idle = 0;
  return nc;
}

Circuit bare_zero_zero() {
  Circuit c(2);
  c.append(GateKind::Prep0, 0);
  c.append(GateKind::Prep0, 1);
  c.append(GateKind::MeasureZ, 0);
  c.append(GateKind::MeasureZ, 1);
  return c;
}
}  // namespace

TEST_CASE("noiseless limit: counts on the ideal outcome, D-hat 0, ratio 1") {
  auto raven = raven_layout();
  const auto& task1 = code422::catalog_tasks()[0];
  Circuit c = code422::build_encoded_run(task1, code422::PrepVariant::FTv1, raven);
  auto counts = noisy_run(c, quiet(), 4096, 5);
  CHECK(counts.n_valid == 4096);
  CHECK(counts.count("00") == 4096);
  CHECK(stat_distance_hat(counts, task1.ideal) == 0.0);
}

TEST_CASE("D-hat worked examples") {
  OutcomeDistribution uniform;
  for (const char* k : {"00", "01", "10", "11"}) uniform.probabilities[k] = 0.25;
  ShotCounts even{{{"00", 2048}, {"01", 2048}, {"10", 2048}, {"11", 2048}}, 8192, 8192};
  CHECK(stat_distance_hat(even, uniform) == 0.0);

  OutcomeDistribution point;
  point.probabilities["00"] = 1.0;
  ShotCounts skew{{{"00", 8000}, {"01", 100}, {"10", 50}, {"11", 42}}, 8192, 8192};
  CHECK(stat_distance_hat(skew, point) == doctest::Approx(0.0234375).epsilon(1e-12));

  OutcomeDistribution half;
  half.probabilities["00"] = 0.5;
  half.probabilities["01"] = 0.5;
  ShotCounts counts{{{"00", 4000}, {"01", 4096}, {"10", 96}, {"11", 0}}, 8192, 8192};
  CHECK(stat_distance_hat(counts, half) == doctest::Approx(0.01171875).epsilon(1e-12));

  ShotCounts empty;
  empty.total_shots = 8192;
  CHECK_THROWS(stat_distance_hat(empty, point));
}

TEST_CASE("r = 1/2 readout scrambles a bare |00> to uniform: D-hat near 3/4") {
  // Analytic: each readout bit is uniform, so the observed distribution is
  // uniform over the four outcomes and D = 1/2 (|1 - 1/4| + 3/4) = 3/4.
  NoiseConfig nc = quiet();
  nc.r = 0.5;
  OutcomeDistribution point;
  point.probabilities["00"] = 1.0;
  auto counts = noisy_run(bare_zero_zero(), nc, 8192, 31);
  double d = stat_distance_hat(counts, point);
  CHECK(d == doctest::Approx(0.75).epsilon(0.03));
}

TEST_CASE("same seed gives identical runs, different seeds differ") {
  auto raven = raven_layout();
  const auto& task7 = code422::catalog_tasks()[6];
  Circuit c = code422::build_encoded_run(task7, code422::PrepVariant::FTv1, raven);
  NoiseConfig nc;  // defaults
  auto a = noisy_run(c, nc, 4096, 1234);
  auto b = noisy_run(c, nc, 4096, 1234);
  CHECK(a.counts == b.counts);
  CHECK(a.n_valid == b.n_valid);
  auto d = noisy_run(c, nc, 4096, 1235);
  CHECK(a.counts != d.counts);
}

TEST_CASE("point-mass ideal: the estimator is unbiased within 3 standard errors") {
  // With a single nonzero p_ij the estimator is linear: D-hat = 1 - n00/n.
  OutcomeDistribution true_dist;
  true_dist.probabilities["00"] = 0.93;
  true_dist.probabilities["01"] = 0.03;
  true_dist.probabilities["10"] = 0.02;
  true_dist.probabilities["11"] = 0.02;
  OutcomeDistribution ideal;
  ideal.probabilities["00"] = 1.0;
  const double true_d = 0.07;

  std::vector<double> estimates;
  for (int run = 0; run < 1000; run++) {
    auto counts = sample(true_dist, 8192, derive_seed(99, run));
    estimates.push_back(stat_distance_hat(counts, ideal));
  }
  double bias = stats::mean(estimates) - true_d;
  double se = stats::sample_sd(estimates) / std::sqrt(1000.0);
  CHECK(std::abs(bias) < 3 * se);
}

TEST_CASE("t-quantiles against table values") {
  CHECK(stats::student_t_quantile(0.975, 10) == doctest::Approx(2.228139).epsilon(1e-5));
  CHECK(stats::student_t_quantile(0.995, 2) == doctest::Approx(9.924843).epsilon(1e-5));
  CHECK(stats::student_t_quantile(0.95, 5) == doctest::Approx(2.015048).epsilon(1e-5));
  CHECK(stats::student_t_quantile(0.5, 7) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(stats::student_t_cdf(2.228139, 10) == doctest::Approx(0.975).epsilon(1e-6));
}

TEST_CASE("aggregate_runs: worked interval and degenerate cases") {
  auto rec = [](double d) {
    RunRecord r;
    r.d_hat = d;
    r.ratio = 1.0;
    return r;
  };
  std::vector<RunRecord> records = {rec(0.04), rec(0.05), rec(0.06)};
  auto agg = aggregate_runs(records, 0.99);
  CHECK(agg.d_hat.mean == doctest::Approx(0.05).epsilon(1e-12));
  // Half-width = t_{0.995,2} * s / sqrt(3) with s = 0.01.
  double want_hw = 9.924843 * 0.01 / std::sqrt(3.0);
  CHECK(agg.d_hat.high - agg.d_hat.mean == doctest::Approx(want_hw).epsilon(1e-5));
  CHECK(agg.d_hat.low <= agg.d_hat.mean);
  CHECK(agg.d_hat.mean <= agg.d_hat.high);

  std::vector<RunRecord> same = {rec(0.04), rec(0.04), rec(0.04)};
  auto zero = aggregate_runs(same, 0.99);
  CHECK(zero.d_hat.low == doctest::Approx(0.04));
  CHECK(zero.d_hat.high == doctest::Approx(0.04));

  std::vector<RunRecord> single = {rec(0.07)};
  auto undef = aggregate_runs(single, 0.99);
  CHECK(!undef.d_hat.defined);
  CHECK(undef.d_hat.mean == doctest::Approx(0.07));
}

TEST_CASE("suite-average D-hat is non-decreasing along each noise axis") {
  auto base = [] {
    SuiteConfig cfg;
    cfg.layout = raven_layout();
    cfg.noise = NoiseConfig{0, 0, 0, 0, 0, 0, 1};
    cfg.runs = 2;
    cfg.shots = 1024;
    cfg.seed = 21;
    return cfg;
  };
  auto suite_avg = [](const SuiteConfig& cfg) {
    auto rep = run_suite(cfg);
    double sum = 0;
    for (const auto& s : rep.summary) sum += s.suite_average;
    return sum / static_cast<double>(rep.summary.size());
  };
  const double slack = 0.005;  // multinomial noise at this budget
  for (int axis = 0; axis < 3; axis++) {
    double prev = -1;
    for (double level : {0.0, 0.03, 0.3}) {
      SuiteConfig cfg = base();
      if (axis == 0) cfg.noise.p1 = level;
      if (axis == 1) cfg.noise.p2 = level;
      if (axis == 2) cfg.noise.r = level;
      double avg = suite_avg(cfg);
      CHECK(avg >= prev - slack);
      prev = avg;
    }
  }
}

TEST_CASE("post-selection does not increase D-hat under readout-only noise") {
  auto raven = raven_layout();
  NoiseConfig nc = quiet();
  nc.r = 0.05;
  const auto& tasks = code422::catalog_tasks();
  for (int row : {1, 5}) {
    const auto& task = tasks[row - 1];
    auto prep = code422::prep_for_initial(task.initial, raven, code422::PrepVariant::FTv1);
    Circuit with = code422::build_encoded_run(task, prep, raven);
    Circuit without = with;
    without.postselect.reset();

    std::vector<double> diffs;
    for (int run = 0; run < 30; run++) {
      uint64_t seed = derive_seed(7, row, run);
      double d_with = stat_distance_hat(noisy_run(with, nc, 4096, seed), task.ideal);
      double d_without = stat_distance_hat(noisy_run(without, nc, 4096, seed), task.ideal);
      diffs.push_back(d_with - d_without);
    }
    double mean = stats::mean(diffs);
    double se = stats::sample_sd(diffs) / std::sqrt(static_cast<double>(diffs.size()));
    CHECK(mean <= 5 * se);
  }
}

TEST_CASE("noise config parse, serialize, jitter") {
  std::string error;
  auto nc = parse_noise_config("p1=0.01\np2=0.02\nr=0.03\nprep_flip=0.004\nidle=0.005\nseed=9\n",
                               &error);
  REQUIRE(nc.has_value());
  CHECK(nc->p1 == 0.01);
  CHECK(nc->p2 == 0.02);
  CHECK(nc->r == 0.03);
  CHECK(nc->prep_flip == 0.004);
  CHECK(nc->idle == 0.005);
  CHECK(nc->seed == 9);

  auto round = parse_noise_config(serialize_noise_config(*nc), &error);
  REQUIRE(round.has_value());
  CHECK(round->p2 == nc->p2);

  CHECK(!parse_noise_config("p1=2.0\n", &error).has_value());
  CHECK(!parse_noise_config("wat=1\n", &error).has_value());

  NoiseConfig drifty = *nc;
  CHECK(jittered(drifty, 5).p1 == drifty.p1);  // drift 0: identity
  drifty.drift = 0.1;
  NoiseConfig j1 = jittered(drifty, 5);
  NoiseConfig j2 = jittered(drifty, 5);
  CHECK(j1.p2 == j2.p2);
  CHECK(j1.p2 >= 0.9 * drifty.p2);
  CHECK(j1.p2 <= 1.1 * drifty.p2);
  CHECK(jittered(drifty, 6).p2 != j1.p2);
}

TEST_CASE("calibration records parse with the published fridge temperatures") {
  auto read = [](const char* name) {
    std::ifstream in(std::string(QED_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string error;
    auto rec = parse_calibration(ss.str(), &error);
    REQUIRE_MESSAGE(rec.has_value(), error);
    return *rec;
  };
  auto raven = read("raven.calib");
  CHECK(raven.fridge_temperature_mk == 21.0);
  CHECK(raven.t1_us.size() == 5);
  CHECK(raven.cnot_error.size() == 6);
  auto sparrow = read("sparrow.calib");
  CHECK(sparrow.fridge_temperature_mk == 19.0);

  std::string error;
  CHECK(!parse_calibration("t1_us=-4\n", &error).has_value());
  CHECK(!parse_calibration("nonsense=1\n", &error).has_value());
}

TEST_CASE("run_suite: serial and parallel execution give identical records") {
  SuiteConfig cfg;
  cfg.layout = raven_layout();
  cfg.runs = 2;
  cfg.shots = 512;
  cfg.seed = 40;
  cfg.mode = ExecMode::Serial;
  auto serial = run_suite(cfg);
  cfg.mode = ExecMode::Parallel;
  auto parallel = run_suite(cfg);
  REQUIRE(serial.records.size() == parallel.records.size());
  for (size_t i = 0; i < serial.records.size(); i++) {
    CHECK(serial.records[i].implementation == parallel.records[i].implementation);
    CHECK(serial.records[i].row == parallel.records[i].row);
    CHECK(serial.records[i].d_hat == parallel.records[i].d_hat);
    CHECK(serial.records[i].counts.counts == parallel.records[i].counts.counts);
  }
  CHECK(serial.best_bare == parallel.best_bare);
}

TEST_CASE("suite report: bare keeps every shot, encoded post-selects") {
  SuiteConfig cfg;
  cfg.layout = raven_layout();
  cfg.runs = 2;
  cfg.shots = 1024;
  cfg.seed = 50;
  auto rep = run_suite(cfg);
  for (const auto& s : rep.summary) {
    if (s.encoded) {
      CHECK(s.mean_ratio < 1.0);
    } else {
      CHECK(s.mean_ratio == 1.0);
    }
  }
  CHECK(rep.implementations.size() == 9);  // six pairs + FTv1, FTv2, NFT
}
