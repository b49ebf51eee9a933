// stats/t-distribution.cc

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

#include "stats/t-distribution.h"

#include <cmath>

#include <boost/math/distributions/students_t.hpp>

#include "base/pararank-error.h"

namespace pararank {

namespace {

boost::math::students_t Dist(double df) {
  if (!(df > 0.0) || std::isnan(df))
    throw Error("t distribution needs df > 0");
  return boost::math::students_t(df);
}

}  // namespace

double TCdf(double x, double df) {
  auto d = Dist(df);
  if (std::isnan(x)) throw Error("t CDF of NaN");
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  return boost::math::cdf(d, x);
}

double TQuantile(double p, double df) {
  auto d = Dist(df);
  if (!(p > 0.0 && p < 1.0)) throw Error("t quantile needs p in (0, 1)");
  return boost::math::quantile(d, p);
}

double TTwoSidedP(double t, double df) {
  auto d = Dist(df);
  if (std::isnan(t)) throw Error("t statistic is NaN");
  if (std::isinf(t)) return 0.0;
  double p = 2.0 * boost::math::cdf(boost::math::complement(d, std::abs(t)));
  return std::min(1.0, p);
}

}  // namespace pararank
