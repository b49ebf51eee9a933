// stats/t-test.h

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

#ifndef PARARANK_STATS_T_TEST_H_
#define PARARANK_STATS_T_TEST_H_

#include <vector>

namespace pararank {

struct TTestResult {
  double statistic = 0.0;
  double df = 0.0;
  double p_value = 1.0;  // two-sided
  double mean_x = 0.0;
  double mean_y = 0.0;   // unused by the one-sample test
};

double Mean(const std::vector<double> &xs);
// Sample variance (n - 1 denominator); needs n >= 2.
double SampleVariance(const std::vector<double> &xs);

// t = (mean - mu0) / (s / sqrt(n)). Needs n >= 2 and s > 0.
TTestResult OneSampleTTest(const std::vector<double> &xs, double mu0);

// Unequal-variance two-sample test with Satterthwaite df. Needs both
// n >= 2 and at least one non-zero variance.
TTestResult WelchTTest(const std::vector<double> &xs,
                       const std::vector<double> &ys);

// Equal-variance two-sample test with n_x + n_y - 2 df.
TTestResult PooledTTest(const std::vector<double> &xs,
                        const std::vector<double> &ys);

struct MeanCi {
  double mean = 0.0;
  double halfwidth = 0.0;
};

// mean +/- t(0.975, n - 1) s / sqrt(n). Needs n >= 2.
MeanCi MeanCi95(const std::vector<double> &xs);

}  // namespace pararank

#endif  // PARARANK_STATS_T_TEST_H_
