// ranker/rank-model.h

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

#ifndef PARARANK_RANKER_RANK_MODEL_H_
#define PARARANK_RANKER_RANK_MODEL_H_

#include <cstdint>
#include <string>
#include <vector>

#include "features/diff-features.h"
#include "features/feature-vector.h"
#include "features/scaler.h"

namespace pararank {

// A paraphrase pair with raw (unscaled) features of both sides.
struct RankPair {
  std::string pair_id;
  FeatureVector left;
  FeatureVector right;
  PairOrder gold = PairOrder::kTie;
};

struct RankPrediction {
  std::string pair_id;
  PairOrder predicted = PairOrder::kTie;
  double score = 0.0;  // w . (x_left - x_right)
};

struct RankOptions {
  double c = 1.0;
  // Pick C from c_grid by cv_folds-fold cross-validated accuracy on the
  // training pairs (ties go to the smaller C).
  bool select_c = false;
  std::vector<double> c_grid{0.01, 0.1, 1.0, 10.0};
  int cv_folds = 5;
  uint64_t seed = 1;  // fold assignment
  bool scale = true;  // z-score features with training-split statistics
  int max_iterations = 20000;
};

struct RankModel {
  static constexpr int kFormatVersion = 1;

  std::vector<FeatureId> features;
  std::vector<double> weights;
  double tau = 0.0;
  double c = 1.0;
  bool scaled = true;
  Scaler scaler;  // identity parameters when !scaled
  uint64_t seed = 1;
  double objective = 0.0;

  // w . (s(x_left) - s(x_right)) with s the stored scaler.
  double Score(const RankPair &pair) const;
  RankPrediction Predict(const RankPair &pair) const;
  std::vector<RankPrediction> Predict(const std::vector<RankPair> &pairs) const;

  std::string ToJson() const;
  static RankModel FromJson(const std::string &text);
  void Save(const std::string &path) const;
  static RankModel Load(const std::string &path);
};

// Three-way decision with threshold tau >= 0.
PairOrder Classify(double score, double tau);

// Trains on the non-tie pairs; tied pairs only inform tau. Throws when every
// pair is tied.
RankModel TrainRankModel(const std::vector<RankPair> &pairs,
                         const std::vector<FeatureId> &features,
                         const RankOptions &opts);

// Threshold from {0} and the 0/20, 1/20, .., 20/20 quantiles of |score|
// with the best 3-class accuracy on the given pairs; ties go to the smaller
// threshold.
double ChooseTau(const std::vector<double> &scores,
                 const std::vector<PairOrder> &gold);

// 100 * (exact class matches) / (pairs). Ids must line up.
double Accuracy(const std::vector<RankPrediction> &predictions,
                const std::vector<RankPair> &gold);

// Always predicts the most frequent training class; equal counts resolve in
// the order left, right, tie.
std::vector<RankPrediction> MajorityBaseline(const std::vector<RankPair> &train,
                                             const std::vector<RankPair> &test);

// Draws every prediction uniformly from the classes present in training.
std::vector<RankPrediction> UniformBaseline(const std::vector<RankPair> &train,
                                            const std::vector<RankPair> &test,
                                            uint64_t seed);

}  // namespace pararank

#endif  // PARARANK_RANKER_RANK_MODEL_H_
