// ranker/rank-svm.h

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

#ifndef PARARANK_RANKER_RANK_SVM_H_
#define PARARANK_RANKER_RANK_SVM_H_

#include <vector>

namespace pararank {

struct SvmSolution {
  std::vector<double> weights;
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  // Objective after every accepted step, starting with f(0).
  std::vector<double> history;
};

// (1/2)|w|^2 + c sum_i max(0, 1 - w . delta_i).
double RankSvmObjective(const std::vector<double> &w,
                        const std::vector<std::vector<double>> &deltas,
                        double c);

// Minimizes RankSvmObjective from w = 0 by steepest descent: each step moves
// against the minimum-norm element of the epsilon-subdifferential (hinge
// terms within epsilon of their kink may take any subgradient), with an
// exact line search along the piecewise-quadratic objective. Epsilon is
// divided by 10 whenever a step makes no progress, down to 1e-10. Every
// accepted step strictly lowers the objective.
SvmSolution SolveRankSvm(const std::vector<std::vector<double>> &deltas,
                         double c, int max_iterations = 20000);

}  // namespace pararank

#endif  // PARARANK_RANKER_RANK_SVM_H_
