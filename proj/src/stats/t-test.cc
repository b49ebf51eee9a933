// stats/t-test.cc

// Copyright 2026  The para-rank Authors

// See ../../COPYING for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "stats/t-test.h"

#include <cmath>
#include <string>

#include "base/pararank-error.h"
#include "stats/t-distribution.h"

namespace pararank {

namespace {

void RequireSize(const std::vector<double> &xs, const char *who) {
  if (xs.size() < 2)
    throw Error(std::string(who) + ": need at least 2 observations");
  for (double x : xs)
    if (!std::isfinite(x)) throw Error(std::string(who) + ": non-finite value");
}

// Variance below this fraction of the squared scale is treated as zero.
bool Degenerate(double var, double scale) {
  return !(var > 1e-26 * std::max(1.0, scale * scale));
}

}  // namespace

double Mean(const std::vector<double> &xs) {
  if (xs.empty()) throw Error("mean of empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double SampleVariance(const std::vector<double> &xs) {
  if (xs.size() < 2) throw Error("variance needs at least 2 observations");
  double m = Mean(xs), ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

TTestResult OneSampleTTest(const std::vector<double> &xs, double mu0) {
  RequireSize(xs, "one-sample t-test");
  TTestResult r;
  r.mean_x = Mean(xs);
  double var = SampleVariance(xs);
  if (Degenerate(var, r.mean_x)) throw Error("one-sample t-test: zero variance");
  double n = static_cast<double>(xs.size());
  r.statistic = (r.mean_x - mu0) / std::sqrt(var / n);
  r.df = n - 1.0;
  r.p_value = TTwoSidedP(r.statistic, r.df);
  return r;
}

TTestResult WelchTTest(const std::vector<double> &xs,
                       const std::vector<double> &ys) {
  RequireSize(xs, "Welch t-test");
  RequireSize(ys, "Welch t-test");
  TTestResult r;
  r.mean_x = Mean(xs);
  r.mean_y = Mean(ys);
  double nx = static_cast<double>(xs.size()), ny = static_cast<double>(ys.size());
  double vx = SampleVariance(xs) / nx, vy = SampleVariance(ys) / ny;
  double scale = std::max(std::abs(r.mean_x), std::abs(r.mean_y));
  if (Degenerate(vx + vy, scale)) throw Error("Welch t-test: degenerate samples");
  double se2 = vx + vy;
  r.statistic = (r.mean_x - r.mean_y) / std::sqrt(se2);
  r.df = se2 * se2 / (vx * vx / (nx - 1.0) + vy * vy / (ny - 1.0));
  r.p_value = TTwoSidedP(r.statistic, r.df);
  return r;
}

TTestResult PooledTTest(const std::vector<double> &xs,
                        const std::vector<double> &ys) {
  RequireSize(xs, "pooled t-test");
  RequireSize(ys, "pooled t-test");
  TTestResult r;
  r.mean_x = Mean(xs);
  r.mean_y = Mean(ys);
  double nx = static_cast<double>(xs.size()), ny = static_cast<double>(ys.size());
  double sp2 = ((nx - 1) * SampleVariance(xs) + (ny - 1) * SampleVariance(ys)) /
               (nx + ny - 2);
  double scale = std::max(std::abs(r.mean_x), std::abs(r.mean_y));
  if (Degenerate(sp2, scale)) throw Error("pooled t-test: degenerate samples");
  r.statistic = (r.mean_x - r.mean_y) / std::sqrt(sp2 * (1 / nx + 1 / ny));
  r.df = nx + ny - 2;
  r.p_value = TTwoSidedP(r.statistic, r.df);
  return r;
}

MeanCi MeanCi95(const std::vector<double> &xs) {
  RequireSize(xs, "95% confidence interval");
  MeanCi ci;
  ci.mean = Mean(xs);
  double n = static_cast<double>(xs.size());
  ci.halfwidth = TQuantile(0.975, n - 1) * std::sqrt(SampleVariance(xs) / n);
  return ci;
}

}  // namespace pararank
