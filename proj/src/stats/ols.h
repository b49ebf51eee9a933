// stats/ols.h

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

#ifndef PARARANK_STATS_OLS_H_
#define PARARANK_STATS_OLS_H_

#include <string>
#include <vector>

namespace pararank {

struct OlsCoefficient {
  std::string name;  // "(Intercept)" for the constant term
  double estimate = 0.0;
  double std_error = 0.0;
  double t_value = 0.0;
  double p_value = 1.0;
};

struct OlsFit {
  std::vector<OlsCoefficient> coefficients;  // intercept first
  double residual_df = 0.0;
  double r_squared = 0.0;
  double sigma = 0.0;  // residual standard error
  std::vector<double> residuals;
};

// Least squares of y on [1, X] through a column-pivoted QR decomposition.
// Needs n > k + 1 rows for k predictors. A rank-deficient design throws
// naming the columns that are linear combinations of the others.
OlsFit OlsRegression(const std::vector<std::vector<double>> &x,
                     const std::vector<double> &y,
                     const std::vector<std::string> &names);

}  // namespace pararank

#endif  // PARARANK_STATS_OLS_H_
