// ranker/ranker-test.cc

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

#include <gtest/gtest.h>

#include <cmath>

#include "base/pararank-error.h"
#include "base/random.h"
#include "ranker/rank-eval.h"
#include "ranker/rank-model.h"
#include "ranker/rank-svm.h"

namespace pararank {
namespace {

using Deltas = std::vector<std::vector<double>>;

double GridMinimum(const Deltas &deltas, double c) {
  double best = INFINITY;
  for (int k = -10000; k <= 10000; ++k) {
    double w = k * 1e-3, f = 0.5 * w * w;
    for (const auto &d : deltas) f += c * std::max(0.0, 1.0 - w * d[0]);
    best = std::min(best, f);
  }
  return best;
}

// Tiny 1-feature instances whose hinge kinks 1 / delta_i are grid points, so
// the grid contains the optimum when it sits on a kink and is within
// (1/2)(5e-4)^2 of it otherwise.
TEST(RankSvm, MatchesBruteForceGridOnTinyInstances) {
  Rng rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng.UniformInt(8));
    double c = std::vector<double>{0.1, 1.0, 5.0}[trial % 3];
    Deltas deltas;
    for (int i = 0; i < n; ++i) {
      double kink = 1e-3 * (100 + static_cast<double>(rng.UniformInt(9901)));
      deltas.push_back({(rng.UniformInt(3) == 0 ? -1.0 : 1.0) / kink});
    }
    // The optimum is c sum theta_i delta_i with theta in [0, 1]. If that
    // could leave [-10, 10], keep one pair: its optimum has magnitude
    // min(c |delta|, 1 / |delta|) <= 10.
    double reach = 0.0;
    for (const auto &d : deltas) reach += c * std::abs(d[0]);
    if (reach > 10.0) deltas.resize(1);
    SvmSolution sol = SolveRankSvm(deltas, c);
    double grid = GridMinimum(deltas, c);
    EXPECT_TRUE(sol.converged);
    EXPECT_NEAR(sol.objective, grid, 1e-4) << "trial " << trial;
    EXPECT_NEAR(sol.objective, RankSvmObjective(sol.weights, deltas, c), 1e-15);
  }
}

// Arbitrary deltas: the grid is never beaten by more than its own
// discretization error, bounded by half a step times the Lipschitz constant
// |w| + c sum |delta_i| near the optimum.
TEST(RankSvm, WithinGridResolutionOnArbitraryInstances) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng.UniformInt(8));
    Deltas deltas;
    for (int i = 0; i < n; ++i) deltas.push_back({6.0 * rng.Uniform() - 3.0});
    double c = std::vector<double>{0.1, 1.0, 5.0}[trial % 3];
    double reach = 0.0;
    for (const auto &d : deltas) reach += c * std::abs(d[0]);
    if (reach > 10.0)
      for (auto &d : deltas) d[0] *= 10.0 / reach;
    SvmSolution sol = SolveRankSvm(deltas, c);
    double grid = GridMinimum(deltas, c);
    double lipschitz = std::abs(sol.weights[0]) + 1e-3 + std::min(reach, 10.0);
    EXPECT_LE(sol.objective, grid + 1e-12) << "trial " << trial;
    EXPECT_GE(sol.objective, grid - 5e-4 * lipschitz) << "trial " << trial;
  }
}

// 0 must lie in the subdifferential at the optimum: w = c sum theta_i d_i
// with theta = 1 for margin < 1, 0 for margin > 1 and free in [0, 1] on the
// margin. Checked by least squares over the free thetas (brute force over a
// fine theta grid is unnecessary: at most 2 terms sit on the margin here).
double KktResidual(const std::vector<double> &w, const Deltas &deltas, double c) {
  std::vector<double> r = w;
  std::vector<const std::vector<double> *> free;
  for (const auto &d : deltas) {
    double m = 0;
    for (size_t j = 0; j < w.size(); ++j) m += w[j] * d[j];
    if (m < 1 - 1e-7) {
      for (size_t j = 0; j < w.size(); ++j) r[j] -= c * d[j];
    } else if (m <= 1 + 1e-7) {
      free.push_back(&d);
    }
  }
  // Projected coordinate descent over the free set.
  std::vector<double> theta(free.size(), 0.5);
  for (size_t k = 0; k < free.size(); ++k)
    for (size_t j = 0; j < w.size(); ++j) r[j] -= c * 0.5 * (*free[k])[j];
  for (int sweep = 0; sweep < 5000; ++sweep)
    for (size_t k = 0; k < free.size(); ++k) {
      const auto &d = *free[k];
      double dd = 0, dr = 0;
      for (size_t j = 0; j < w.size(); ++j) {
        dd += d[j] * d[j];
        dr += d[j] * r[j];
      }
      double t = std::clamp(theta[k] + dr / (c * dd), 0.0, 1.0);
      for (size_t j = 0; j < w.size(); ++j) r[j] -= c * (t - theta[k]) * d[j];
      theta[k] = t;
    }
  double s = 0;
  for (double x : r) s += x * x;
  return std::sqrt(s);
}

TEST(RankSvm, SatisfiesOptimalityConditionsInSeveralDimensions) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    int dim = 2 + trial % 2, n = 20 + static_cast<int>(rng.UniformInt(200));
    Deltas deltas;
    for (int i = 0; i < n; ++i) {
      std::vector<double> d;
      for (int j = 0; j < dim; ++j) d.push_back(rng.Gaussian() + (j == 0 ? 0.4 : 0));
      deltas.push_back(d);
    }
    double c = std::vector<double>{0.01, 0.1, 1.0, 10.0}[trial % 4];
    SvmSolution sol = SolveRankSvm(deltas, c);
    EXPECT_TRUE(sol.converged) << trial;
    EXPECT_LT(KktResidual(sol.weights, deltas, c), 1e-6) << trial;
    // Small perturbations never improve the objective.
    for (int p = 0; p < 20; ++p) {
      std::vector<double> w = sol.weights;
      for (double &x : w) x += 1e-4 * rng.Gaussian();
      EXPECT_GE(RankSvmObjective(w, deltas, c), sol.objective - 1e-12);
    }
  }
}

TEST(RankSvm, ObjectiveNeverIncreases) {
  Rng rng(3);
  Deltas deltas;
  for (int i = 0; i < 300; ++i)
    deltas.push_back({rng.Gaussian(), rng.Gaussian() + 0.3, rng.Gaussian()});
  SvmSolution sol = SolveRankSvm(deltas, 1.0);
  ASSERT_GE(sol.history.size(), 2u);
  EXPECT_EQ(sol.history[0], RankSvmObjective({0, 0, 0}, deltas, 1.0));
  for (size_t i = 1; i < sol.history.size(); ++i)
    EXPECT_LT(sol.history[i], sol.history[i - 1]);
}

TEST(RankSvm, Errors) {
  EXPECT_THROW(SolveRankSvm({}, 1.0), Error);
  EXPECT_THROW(SolveRankSvm({{1.0}}, 0.0), Error);
  EXPECT_THROW(SolveRankSvm({{1.0}, {1.0, 2.0}}, 1.0), Error);
  EXPECT_THROW(SolveRankSvm({{NAN}}, 1.0), Error);
}

FeatureVector Fv(const std::string &id, double ph, double ppl, double stoi) {
  FeatureVector v;
  v.utterance_id = id;
  v.ph_len = static_cast<int>(ph);
  v.ppl = ppl;
  v.stoi = stoi;
  return v;
}

// Gold follows STOI, with a dead zone that yields ties.
std::vector<RankPair> StoiDrivenPairs(uint64_t seed, int n, double tie_band) {
  Rng rng(seed);
  std::vector<RankPair> out;
  for (int i = 0; i < n; ++i) {
    RankPair p;
    p.pair_id = "p" + std::to_string(i);
    p.left = Fv(p.pair_id + "a", 10 + rng.UniformInt(30), 5 + 90 * rng.Uniform(),
                rng.Uniform());
    p.right = Fv(p.pair_id + "b", 10 + rng.UniformInt(30), 5 + 90 * rng.Uniform(),
                 rng.Uniform());
    double d = p.left.stoi - p.right.stoi;
    p.gold = d > tie_band ? PairOrder::kLeftMore
                          : (d < -tie_band ? PairOrder::kRightMore
                                           : PairOrder::kTie);
    out.push_back(p);
  }
  return out;
}

RankPair Swapped(const RankPair &p) {
  RankPair q = p;
  std::swap(q.left, q.right);
  q.gold = SwapOrder(p.gold);
  return q;
}

TEST(RankModel, SeparableSingleFeature) {
  auto pairs = StoiDrivenPairs(4, 80, 0.0);
  RankModel m = TrainRankModel(pairs, {FeatureId::kStoi}, RankOptions{});
  ASSERT_EQ(m.weights.size(), 1u);
  EXPECT_GT(m.weights[0], 0.0);
  EXPECT_EQ(Accuracy(m.Predict(pairs), pairs), 100.0);
}

TEST(RankModel, SideSwapGivesIdenticalModel) {
  auto pairs = StoiDrivenPairs(5, 60, 0.05);
  std::vector<RankPair> swapped;
  for (const auto &p : pairs) swapped.push_back(Swapped(p));
  auto feats = ParseFeatureList("phLen,ppl,STOI");
  RankModel a = TrainRankModel(pairs, feats, RankOptions{});
  RankModel b = TrainRankModel(swapped, feats, RankOptions{});
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.tau, b.tau);
  // Prediction antisymmetry and accuracy invariance under consistent swap.
  for (size_t i = 0; i < pairs.size(); ++i) {
    RankPrediction p = a.Predict(pairs[i]), q = a.Predict(swapped[i]);
    EXPECT_EQ(q.predicted, SwapOrder(p.predicted));
    EXPECT_EQ(q.score, -p.score);
  }
  EXPECT_EQ(Accuracy(a.Predict(pairs), pairs),
            Accuracy(a.Predict(swapped), swapped));
}

RankModel ManualModel(double w, double tau) {
  RankModel m;
  m.features = {FeatureId::kStoi};
  m.weights = {w};
  m.tau = tau;
  m.scaled = false;
  m.scaler = Scaler({"STOI"}, {0.0}, {1.0});
  return m;
}

TEST(RankModel, PredictThreshold) {
  RankModel m = ManualModel(1.0, 0.5);
  RankPair p{"p", Fv("a", 10, 10, 0.9), Fv("b", 10, 10, 0.5), PairOrder::kTie};
  EXPECT_NEAR(m.Predict(p).score, 0.4, 1e-15);
  EXPECT_EQ(m.Predict(p).predicted, PairOrder::kTie);
  RankPair same{"q", Fv("a", 10, 10, 0.7), Fv("b", 10, 10, 0.7), PairOrder::kTie};
  EXPECT_EQ(m.Predict(same).predicted, PairOrder::kTie);
  RankModel sharp = ManualModel(1.0, 0.0);
  EXPECT_EQ(sharp.Predict(p).predicted, PairOrder::kLeftMore);
  EXPECT_EQ(sharp.Predict(Swapped(p)).predicted, PairOrder::kRightMore);
}

TEST(RankModel, ThresholdExtremes) {
  auto pairs = StoiDrivenPairs(6, 100, 0.1);
  RankModel m = TrainRankModel(pairs, {FeatureId::kStoi}, RankOptions{});
  m.tau = 0.0;
  for (const auto &p : m.Predict(pairs)) EXPECT_NE(p.predicted, PairOrder::kTie);
  m.tau = 1e9;
  size_t ties = 0;
  for (const auto &p : pairs) ties += p.gold == PairOrder::kTie;
  EXPECT_DOUBLE_EQ(Accuracy(m.Predict(pairs), pairs), 100.0 * ties / pairs.size());
}

TEST(ChooseTau, PicksBestThreshold) {
  // Scores 0.1 and -0.2 are ties in gold, 1.0 and -2.0 are not.
  double tau = ChooseTau({0.1, -0.2, 1.0, -2.0},
                         {PairOrder::kTie, PairOrder::kTie, PairOrder::kLeftMore,
                          PairOrder::kRightMore});
  EXPECT_GE(tau, 0.2);
  EXPECT_LT(tau, 1.0);
  // No ties in gold: zero is best and smallest.
  EXPECT_EQ(ChooseTau({0.5, -0.5}, {PairOrder::kLeftMore, PairOrder::kRightMore}),
            0.0);
}

TEST(Accuracy, Examples) {
  std::vector<RankPair> gold;
  for (int i = 0; i < 4; ++i)
    gold.push_back({"p" + std::to_string(i), Fv("a", 1, 1, 0), Fv("b", 1, 1, 0),
                    i % 2 ? PairOrder::kLeftMore : PairOrder::kRightMore});
  std::vector<RankPrediction> pred;
  for (const auto &g : gold) pred.push_back({g.pair_id, g.gold, 0.0});
  EXPECT_EQ(Accuracy(pred, gold), 100.0);
  pred[3].predicted = PairOrder::kTie;
  EXPECT_EQ(Accuracy(pred, gold), 75.0);
  for (auto &p : pred) p.predicted = PairOrder::kTie;
  EXPECT_EQ(Accuracy(pred, gold), 0.0);
  pred[0].pair_id = "zz";
  EXPECT_THROW(Accuracy(pred, gold), Error);
  pred.pop_back();
  EXPECT_THROW(Accuracy(pred, gold), Error);
}

std::vector<RankPair> WithGold(const std::vector<PairOrder> &golds) {
  std::vector<RankPair> out;
  for (size_t i = 0; i < golds.size(); ++i)
    out.push_back({"p" + std::to_string(i), Fv("a", 1, 1, 0), Fv("b", 1, 1, 0),
                   golds[i]});
  return out;
}

TEST(Baselines, Majority) {
  using O = PairOrder;
  auto train = WithGold({O::kLeftMore, O::kLeftMore, O::kLeftMore, O::kTie,
                         O::kRightMore});
  auto test = WithGold({O::kTie, O::kRightMore});
  for (const auto &p : MajorityBaseline(train, test))
    EXPECT_EQ(p.predicted, O::kLeftMore);
  // Equal counts: left before right before tie.
  auto tied = WithGold({O::kTie, O::kRightMore});
  EXPECT_EQ(MajorityBaseline(tied, test)[0].predicted, O::kRightMore);
  EXPECT_THROW(MajorityBaseline({}, test), Error);
}

TEST(Baselines, UniformOverPresentClasses) {
  using O = PairOrder;
  std::vector<O> balanced;
  for (int i = 0; i < 20000; ++i) balanced.push_back(i % 2 ? O::kLeftMore : O::kRightMore);
  auto test2 = WithGold(balanced);
  auto train2 = WithGold({O::kLeftMore, O::kRightMore});
  EXPECT_NEAR(Accuracy(UniformBaseline(train2, test2, 7), test2), 50.0, 1.5);
  for (const auto &p : UniformBaseline(train2, test2, 7))
    ASSERT_NE(p.predicted, O::kTie);

  std::vector<O> three;
  for (int i = 0; i < 30000; ++i) three.push_back(static_cast<O>(i % 3));
  auto test3 = WithGold(three);
  auto train3 = WithGold({O::kLeftMore, O::kRightMore, O::kTie});
  EXPECT_NEAR(Accuracy(UniformBaseline(train3, test3, 8), test3), 100.0 / 3, 1.5);
  // Seeded: same seed, same predictions.
  auto a = UniformBaseline(train3, test3, 9), b = UniformBaseline(train3, test3, 9);
  for (size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i].predicted, b[i].predicted);
}

TEST(RankModel, JsonRoundTrip) {
  auto pairs = StoiDrivenPairs(10, 50, 0.05);
  RankModel m = TrainRankModel(pairs, ParseFeatureList("phLen,STOI"), RankOptions{});
  RankModel r = RankModel::FromJson(m.ToJson());
  EXPECT_EQ(r.weights, m.weights);
  EXPECT_EQ(r.tau, m.tau);
  EXPECT_EQ(r.features, m.features);
  EXPECT_EQ(r.scaler.mean(), m.scaler.mean());
  EXPECT_EQ(r.scaler.std(), m.scaler.std());
  for (const auto &p : pairs) EXPECT_EQ(r.Predict(p).score, m.Predict(p).score);
  EXPECT_THROW(RankModel::FromJson("{}"), Error);
  EXPECT_THROW(RankModel::FromJson("not json"), Error);
}

TEST(RankModel, CrossValidatedC) {
  auto pairs = StoiDrivenPairs(11, 100, 0.05);
  RankOptions opts;
  opts.select_c = true;
  RankModel m = TrainRankModel(pairs, ParseFeatureList("STOI,ppl"), opts);
  EXPECT_TRUE(m.c == 0.01 || m.c == 0.1 || m.c == 1.0 || m.c == 10.0);
  RankModel again = TrainRankModel(pairs, ParseFeatureList("STOI,ppl"), opts);
  EXPECT_EQ(m.c, again.c);
  EXPECT_EQ(m.weights, again.weights);
}

TEST(RankModel, AllTiesIsAnError) {
  using O = PairOrder;
  auto pairs = StoiDrivenPairs(12, 10, 0.0);
  for (auto &p : pairs) p.gold = O::kTie;
  EXPECT_THROW(TrainRankModel(pairs, {FeatureId::kStoi}, RankOptions{}), Error);
}

TEST(EvaluateRanking, DeterministicFunctionOfOneFeature) {
  auto pairs = StoiDrivenPairs(13, 150, 0.0);
  EvalOptions opts;
  opts.jobs = 1;
  EvalReport rep = EvaluateRanking(pairs, TableFeatureSubsets(), opts);
  ASSERT_EQ(rep.rows.size(), 7u);
  EXPECT_EQ(rep.num_train, 120u);
  EXPECT_EQ(rep.num_test, 30u);
  const char *names[] = {"STOI", "ppl", "phLen", "phLen+ppl", "phLen+ppl+STOI",
                         "majority", "uniform"};
  for (int i = 0; i < 7; ++i) {
    EXPECT_EQ(rep.rows[i].name, names[i]);
    EXPECT_EQ(rep.rows[i].accuracies.size(), 10u);
    for (double a : rep.rows[i].accuracies) {
      EXPECT_GE(a, 0.0);
      EXPECT_LE(a, 100.0);
    }
  }
  for (double a : rep.Row("STOI").accuracies) EXPECT_EQ(a, 100.0);
  EXPECT_TRUE(rep.Row("STOI").significant());
  EXPECT_FALSE(rep.Row("uniform").significant());
  EXPECT_NEAR(rep.Row("uniform").ci.mean, 50.0, 10.0);

  opts.jobs = 4;
  EvalReport again = EvaluateRanking(pairs, TableFeatureSubsets(), opts);
  for (int i = 0; i < 7; ++i)
    EXPECT_EQ(again.rows[i].accuracies, rep.rows[i].accuracies);
}

TEST(EvaluateRanking, Errors) {
  auto pairs = StoiDrivenPairs(14, 2, 0.0);
  EXPECT_THROW(EvaluateRanking(pairs, TableFeatureSubsets(), EvalOptions{}),
               Error);
}

TEST(CompareToBaseline, ConstantSamples) {
  EXPECT_TRUE(CompareToBaseline({60, 60, 60}, {50, 50, 50}).better);
  EXPECT_FALSE(CompareToBaseline({50, 50, 50}, {50, 50, 50}).better);
  EXPECT_FALSE(CompareToBaseline({40, 40}, {50, 50}).better);
  SignificanceTest t = CompareToBaseline({61, 64, 70, 66, 59}, {33, 35, 30, 31, 36});
  EXPECT_TRUE(t.better);
  EXPECT_LT(t.p_value, 0.001);
}

}  // namespace
}  // namespace pararank
