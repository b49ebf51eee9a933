// ranker/rank-model.cc

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

#include "ranker/rank-model.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "base/pararank-error.h"
#include "base/random.h"
#include "ranker/rank-svm.h"

namespace pararank {

namespace {

std::vector<double> Diff(const std::vector<double> &a,
                         const std::vector<double> &b) {
  std::vector<double> d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

std::vector<std::string> Names(const std::vector<FeatureId> &features) {
  std::vector<std::string> names;
  for (FeatureId f : features) names.push_back(FeatureName(f));
  return names;
}

Scaler FitPairScaler(const std::vector<RankPair> &pairs,
                     const std::vector<FeatureId> &features, bool scale) {
  if (!scale)
    return Scaler(Names(features), std::vector<double>(features.size(), 0.0),
                  std::vector<double>(features.size(), 1.0));
  // Each utterance counts once even if it sits in several pairs.
  std::map<std::string, std::vector<double>> rows;
  for (const auto &p : pairs) {
    rows.emplace(p.left.utterance_id, p.left.Row(features));
    rows.emplace(p.right.utterance_id, p.right.Row(features));
  }
  std::vector<std::vector<double>> data;
  for (auto &[id, row] : rows) data.push_back(std::move(row));
  return Scaler::Fit(data, Names(features));
}

// Trains with a fixed C on already chosen features.
RankModel Fit(const std::vector<RankPair> &pairs,
              const std::vector<FeatureId> &features, double c,
              const RankOptions &opts) {
  RankModel m;
  m.features = features;
  m.c = c;
  m.scaled = opts.scale;
  m.seed = opts.seed;
  m.scaler = FitPairScaler(pairs, features, opts.scale);
  std::vector<std::vector<double>> deltas;
  for (const auto &p : pairs) {
    if (p.gold == PairOrder::kTie) continue;
    auto l = m.scaler.Transform(p.left.Row(features));
    auto r = m.scaler.Transform(p.right.Row(features));
    deltas.push_back(p.gold == PairOrder::kLeftMore ? Diff(l, r) : Diff(r, l));
  }
  if (deltas.empty())
    throw Error("cannot train a ranking model: every training pair is tied");
  SvmSolution sol = SolveRankSvm(deltas, c, opts.max_iterations);
  m.weights = sol.weights;
  m.objective = sol.objective;
  std::vector<double> scores;
  std::vector<PairOrder> gold;
  for (const auto &p : pairs) {
    scores.push_back(m.Score(p));
    gold.push_back(p.gold);
  }
  m.tau = ChooseTau(scores, gold);
  return m;
}

}  // namespace

PairOrder Classify(double score, double tau) {
  if (score > tau) return PairOrder::kLeftMore;
  if (score < -tau) return PairOrder::kRightMore;
  return PairOrder::kTie;
}

double RankModel::Score(const RankPair &pair) const {
  auto l = scaler.Transform(pair.left.Row(features));
  auto r = scaler.Transform(pair.right.Row(features));
  double s = 0.0;
  for (size_t i = 0; i < weights.size(); ++i) s += weights[i] * (l[i] - r[i]);
  return s;
}

RankPrediction RankModel::Predict(const RankPair &pair) const {
  RankPrediction p;
  p.pair_id = pair.pair_id;
  p.score = Score(pair);
  p.predicted = Classify(p.score, tau);
  return p;
}

std::vector<RankPrediction> RankModel::Predict(
    const std::vector<RankPair> &pairs) const {
  std::vector<RankPrediction> out;
  out.reserve(pairs.size());
  for (const auto &p : pairs) out.push_back(Predict(p));
  return out;
}

double ChooseTau(const std::vector<double> &scores,
                 const std::vector<PairOrder> &gold) {
  if (scores.size() != gold.size() || scores.empty())
    throw Error("threshold selection needs aligned, non-empty inputs");
  std::vector<double> mag;
  for (double s : scores) mag.push_back(std::abs(s));
  std::sort(mag.begin(), mag.end());
  std::vector<double> candidates{0.0};
  const double n1 = static_cast<double>(mag.size() - 1);
  for (int k = 0; k <= 20; ++k) {
    double pos = n1 * k / 20.0;
    size_t lo = static_cast<size_t>(std::floor(pos));
    size_t hi = std::min(lo + 1, mag.size() - 1);
    candidates.push_back(mag[lo] + (pos - lo) * (mag[hi] - mag[lo]));
  }
  std::sort(candidates.begin(), candidates.end());
  double best_tau = 0.0;
  long best = -1;
  for (double tau : candidates) {
    long correct = 0;
    for (size_t i = 0; i < scores.size(); ++i)
      correct += Classify(scores[i], tau) == gold[i];
    if (correct > best) {
      best = correct;
      best_tau = tau;
    }
  }
  return best_tau;
}

double Accuracy(const std::vector<RankPrediction> &predictions,
                const std::vector<RankPair> &gold) {
  if (predictions.size() != gold.size())
    throw Error("accuracy: prediction and gold counts differ");
  if (gold.empty()) throw Error("accuracy of an empty set");
  size_t correct = 0;
  for (size_t i = 0; i < gold.size(); ++i) {
    if (predictions[i].pair_id != gold[i].pair_id)
      throw Error("accuracy: id mismatch " + predictions[i].pair_id + " vs " +
                  gold[i].pair_id);
    correct += predictions[i].predicted == gold[i].gold;
  }
  return 100.0 * static_cast<double>(correct) / gold.size();
}

std::vector<RankPrediction> MajorityBaseline(const std::vector<RankPair> &train,
                                             const std::vector<RankPair> &test) {
  if (train.empty()) throw Error("majority baseline needs training pairs");
  int counts[3] = {0, 0, 0};
  for (const auto &p : train) ++counts[static_cast<int>(p.gold)];
  int best = 0;
  for (int k = 1; k < 3; ++k)
    if (counts[k] > counts[best]) best = k;
  std::vector<RankPrediction> out;
  for (const auto &p : test)
    out.push_back({p.pair_id, static_cast<PairOrder>(best), 0.0});
  return out;
}

std::vector<RankPrediction> UniformBaseline(const std::vector<RankPair> &train,
                                            const std::vector<RankPair> &test,
                                            uint64_t seed) {
  if (train.empty()) throw Error("uniform baseline needs training pairs");
  bool present[3] = {false, false, false};
  for (const auto &p : train) present[static_cast<int>(p.gold)] = true;
  std::vector<PairOrder> classes;
  for (int k = 0; k < 3; ++k)
    if (present[k]) classes.push_back(static_cast<PairOrder>(k));
  Rng rng(seed);
  std::vector<RankPrediction> out;
  for (const auto &p : test)
    out.push_back({p.pair_id, classes[rng.UniformInt(classes.size())], 0.0});
  return out;
}

RankModel TrainRankModel(const std::vector<RankPair> &pairs,
                         const std::vector<FeatureId> &features,
                         const RankOptions &opts) {
  if (features.empty()) throw Error("ranking model needs features");
  if (pairs.empty()) throw Error("ranking model needs training pairs");
  if (!opts.select_c) return Fit(pairs, features, opts.c, opts);

  if (opts.c_grid.empty()) throw Error("empty C grid");
  const int k = opts.cv_folds;
  if (k < 2 || pairs.size() < static_cast<size_t>(k))
    throw Error("too few pairs for " + std::to_string(k) + "-fold selection");
  std::vector<size_t> order(pairs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(opts.seed);
  rng.Shuffle(&order);
  double best_c = opts.c_grid[0], best_acc = -1.0;
  for (double c : opts.c_grid) {
    double total = 0.0;
    for (int fold = 0; fold < k; ++fold) {
      std::vector<RankPair> tr, te;
      for (size_t i = 0; i < order.size(); ++i)
        (static_cast<int>(i % k) == fold ? te : tr).push_back(pairs[order[i]]);
      try {
        RankModel m = Fit(tr, features, c, opts);
        total += Accuracy(m.Predict(te), te);
      } catch (const Error &) {
        // A fold without usable training pairs scores zero.
      }
    }
    double acc = total / k;
    if (acc > best_acc || (acc == best_acc && c < best_c)) {
      best_acc = acc;
      best_c = c;
    }
  }
  return Fit(pairs, features, best_c, opts);
}

std::string RankModel::ToJson() const {
  nlohmann::ordered_json j;
  j["format"] = "pararank-rank-model";
  j["format_version"] = kFormatVersion;
  j["artifact_version"] = PARARANK_VERSION;
  std::vector<std::string> names;
  for (FeatureId f : features) names.push_back(FeatureName(f));
  j["features"] = names;
  j["weights"] = weights;
  j["tau"] = tau;
  j["c"] = c;
  j["scaled"] = scaled;
  j["scaler"] = {{"mean", scaler.mean()}, {"std", scaler.std()}};
  j["seed"] = seed;
  j["objective"] = objective;
  return j.dump(2) + "\n";
}

RankModel RankModel::FromJson(const std::string &text) {
  RankModel m;
  try {
    auto j = nlohmann::json::parse(text);
    if (j.at("format").get<std::string>() != "pararank-rank-model")
      throw Error("not a ranking model");
    if (j.at("format_version").get<int>() != kFormatVersion)
      throw Error("unsupported ranking model version");
    std::vector<std::string> names = j.at("features");
    for (const auto &n : names) m.features.push_back(ParseFeatureName(n));
    m.weights = j.at("weights").get<std::vector<double>>();
    m.tau = j.at("tau");
    m.c = j.at("c");
    m.scaled = j.at("scaled");
    m.scaler = Scaler(names, j.at("scaler").at("mean"), j.at("scaler").at("std"));
    m.seed = j.at("seed");
    m.objective = j.value("objective", 0.0);
  } catch (const nlohmann::json::exception &e) {
    throw Error(std::string("malformed ranking model: ") + e.what());
  }
  if (m.weights.size() != m.features.size())
    throw Error("ranking model: weight count differs from feature count");
  if (!(m.tau >= 0.0)) throw Error("ranking model: negative threshold");
  return m;
}

void RankModel::Save(const std::string &path) const {
  std::ofstream os(path);
  if (!os) throw Error("cannot write " + path);
  os << ToJson();
  if (!os) throw Error("failed writing " + path);
}

RankModel RankModel::Load(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open ranking model " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  try {
    return FromJson(ss.str());
  } catch (const Error &e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace pararank
