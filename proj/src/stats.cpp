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

#include "qed/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace qed::stats {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0;
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_sd(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0;
  double m = mean(xs);
  double s = 0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

namespace {

// Continued fraction for the incomplete beta function (Lentz's method).
double betacf(double a, double b, double x) {
  const int max_iter = 300;
  const double eps = 3e-15;
  const double fpmin = 1e-300;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; m++) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  double ln_beta = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  double front = std::exp(ln_beta + a * std::log(x) + b * std::log(1.0 - x));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * betacf(a, b, x) / a;
  }
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, int dof) {
  if (dof < 1) throw std::invalid_argument("student_t_cdf: dof must be >= 1");
  double v = static_cast<double>(dof);
  double x = v / (v + t * t);
  double p = 0.5 * incomplete_beta(v / 2.0, 0.5, x);
  return t >= 0 ? 1.0 - p : p;
}

double student_t_quantile(double p, int dof) {
  if (p <= 0 || p >= 1) throw std::invalid_argument("student_t_quantile: p in (0,1)");
  if (p == 0.5) return 0;
  // Bisection; the CDF is monotone and cheap.
  double lo = -1e3, hi = 1e3;
  for (int i = 0; i < 200; i++) {
    double mid = 0.5 * (lo + hi);
    if (student_t_cdf(mid, dof) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ConfidenceInterval t_interval(const std::vector<double>& xs, double confidence) {
  if (confidence <= 0 || confidence >= 1) {
    throw std::invalid_argument("t_interval: confidence in (0,1)");
  }
  ConfidenceInterval ci;
  ci.mean = mean(xs);
  ci.sd = sample_sd(xs);
  if (xs.size() < 2) {
    ci.low = ci.high = ci.mean;
    return ci;
  }
  double t = student_t_quantile(0.5 + confidence / 2.0, static_cast<int>(xs.size()) - 1);
  double half = t * ci.sd / std::sqrt(static_cast<double>(xs.size()));
  ci.low = ci.mean - half;
  ci.high = ci.mean + half;
  ci.defined = true;
  return ci;
}

}  // namespace qed::stats
