// stats/t-distribution.h

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

#ifndef PARARANK_STATS_T_DISTRIBUTION_H_
#define PARARANK_STATS_T_DISTRIBUTION_H_

namespace pararank {

// Student-t CDF P(T <= x) with df > 0 degrees of freedom (df may be
// fractional, as in Welch's test).
double TCdf(double x, double df);

// Inverse of TCdf for p in (0, 1).
double TQuantile(double p, double df);

// Two-sided p-value 2 P(T >= |t|), in [0, 1].
double TTwoSidedP(double t, double df);

}  // namespace pararank

#endif  // PARARANK_STATS_T_DISTRIBUTION_H_
