// ranker/rank-eval.h

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

#ifndef PARARANK_RANKER_RANK_EVAL_H_
#define PARARANK_RANKER_RANK_EVAL_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ranker/rank-model.h"
#include "stats/t-test.h"

namespace pararank {

// Seeds 1..10.
std::vector<uint64_t> DefaultSplitSeeds();

// The five feature rows of the ranking table, in order: STOI, ppl, phLen,
// phLen+ppl, phLen+ppl+STOI.
std::vector<std::vector<FeatureId>> TableFeatureSubsets();

struct EvalOptions {
  std::vector<uint64_t> seeds = DefaultSplitSeeds();
  double train_fraction = 0.8;
  RankOptions rank;
  int jobs = 0;  // 0: all cores
};

struct SignificanceTest {
  double p_value = 1.0;
  bool better = false;  // model mean above baseline and p < 0.05
};

struct EvalRow {
  std::string name;  // "phLen+ppl", "majority", "uniform", ...
  bool is_baseline = false;
  std::vector<double> accuracies;  // one per seed, percent
  MeanCi ci;
  SignificanceTest vs_majority;  // model rows only
  SignificanceTest vs_uniform;
  bool significant() const {
    return !is_baseline && vs_majority.better && vs_uniform.better;
  }
};

struct EvalReport {
  std::vector<EvalRow> rows;  // subsets in the given order, then majority,
                              // uniform
  size_t num_pairs = 0;
  size_t num_train = 0;
  size_t num_test = 0;

  const EvalRow &Row(const std::string &name) const;
};

// For every seed: shuffle the pairs, train on the first train_fraction and
// test on the rest, fitting the scaler on the training pairs only. Runs
// (seed, subset) jobs in parallel; results do not depend on `jobs`.
EvalReport EvaluateRanking(const std::vector<RankPair> &pairs,
                           const std::vector<std::vector<FeatureId>> &subsets,
                           const EvalOptions &opts);

// Welch test of model against baseline accuracies at alpha = 0.05. When both
// samples are constant, the model is better exactly when its mean is higher.
SignificanceTest CompareToBaseline(const std::vector<double> &model,
                                   const std::vector<double> &baseline);

}  // namespace pararank

#endif  // PARARANK_RANKER_RANK_EVAL_H_
