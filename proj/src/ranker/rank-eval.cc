// ranker/rank-eval.cc

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

#include "ranker/rank-eval.h"

#include <cmath>

#include "base/parallel.h"
#include "base/pararank-error.h"
#include "base/random.h"

namespace pararank {

std::vector<uint64_t> DefaultSplitSeeds() {
  return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
}

std::vector<std::vector<FeatureId>> TableFeatureSubsets() {
  using F = FeatureId;
  return {{F::kStoi},
          {F::kPpl},
          {F::kPhLen},
          {F::kPhLen, F::kPpl},
          {F::kPhLen, F::kPpl, F::kStoi}};
}

const EvalRow &EvalReport::Row(const std::string &name) const {
  for (const auto &r : rows)
    if (r.name == name) return r;
  throw Error("no evaluation row " + name);
}

SignificanceTest CompareToBaseline(const std::vector<double> &model,
                                   const std::vector<double> &baseline) {
  SignificanceTest s;
  double mm = Mean(model), mb = Mean(baseline);
  try {
    s.p_value = WelchTTest(model, baseline).p_value;
  } catch (const Error &) {
    s.p_value = mm == mb ? 1.0 : 0.0;
  }
  s.better = mm > mb && s.p_value < 0.05;
  return s;
}

EvalReport EvaluateRanking(const std::vector<RankPair> &pairs,
                           const std::vector<std::vector<FeatureId>> &subsets,
                           const EvalOptions &opts) {
  if (opts.seeds.size() < 2) throw Error("evaluation needs at least 2 seeds");
  if (!(opts.train_fraction > 0.0 && opts.train_fraction < 1.0))
    throw Error("train fraction must be in (0, 1)");
  const size_t n = pairs.size();
  const size_t n_train =
      static_cast<size_t>(std::floor(opts.train_fraction * n + 1e-9));
  if (n_train < 2 || n - n_train < 1)
    throw Error("insufficient pairs for an 80/20 split: " + std::to_string(n));

  const size_t runs = opts.seeds.size(), models = subsets.size();
  std::vector<std::vector<RankPair>> train(runs), test(runs);
  for (size_t r = 0; r < runs; ++r) {
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(opts.seeds[r]);
    rng.Shuffle(&order);
    for (size_t i = 0; i < n; ++i)
      (i < n_train ? train[r] : test[r]).push_back(pairs[order[i]]);
  }

  // Slot (model m, run r); the last two models are the baselines.
  std::vector<double> acc((models + 2) * runs, 0.0);
  ParallelFor((models + 2) * runs, opts.jobs, [&](size_t job) {
    size_t m = job / runs, r = job % runs;
    if (m < models) {
      RankOptions ro = opts.rank;
      ro.seed = opts.seeds[r];
      RankModel model = TrainRankModel(train[r], subsets[m], ro);
      acc[job] = Accuracy(model.Predict(test[r]), test[r]);
    } else if (m == models) {
      acc[job] = Accuracy(MajorityBaseline(train[r], test[r]), test[r]);
    } else {
      acc[job] = Accuracy(UniformBaseline(train[r], test[r], opts.seeds[r]),
                          test[r]);
    }
  });

  EvalReport rep;
  rep.num_pairs = n;
  rep.num_train = n_train;
  rep.num_test = n - n_train;
  for (size_t m = 0; m < models + 2; ++m) {
    EvalRow row;
    row.accuracies.assign(acc.begin() + m * runs, acc.begin() + (m + 1) * runs);
    row.ci = MeanCi95(row.accuracies);
    if (m < models) {
      row.name = FeatureListName(subsets[m]);
    } else {
      row.is_baseline = true;
      row.name = m == models ? "majority" : "uniform";
    }
    rep.rows.push_back(std::move(row));
  }
  const auto &maj = rep.rows[models].accuracies;
  const auto &uni = rep.rows[models + 1].accuracies;
  for (size_t m = 0; m < models; ++m) {
    rep.rows[m].vs_majority = CompareToBaseline(rep.rows[m].accuracies, maj);
    rep.rows[m].vs_uniform = CompareToBaseline(rep.rows[m].accuracies, uni);
  }
  return rep;
}

}  // namespace pararank
