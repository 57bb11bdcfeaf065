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

#include <cstddef>
#include <vector>

namespace qed::stats {

double mean(const std::vector<double>& xs);
/// Sample standard deviation (n-1 denominator); 0 for fewer than 2 values.
double sample_sd(const std::vector<double>& xs);

/// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// Student-t CDF with `dof` degrees of freedom.
double student_t_cdf(double t, int dof);

/// Quantile of the Student-t distribution, p in (0, 1).
double student_t_quantile(double p, int dof);

struct ConfidenceInterval {
  double mean = 0;
  double sd = 0;
  double low = 0;
  double high = 0;
  bool defined = false;  // needs >= 2 samples
};

/// Two-sided t-based confidence interval for the mean.
ConfidenceInterval t_interval(const std::vector<double>& xs, double confidence);

}  // namespace qed::stats
