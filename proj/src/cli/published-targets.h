// cli/published-targets.h

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

#ifndef PARARANK_CLI_PUBLISHED_TARGETS_H_
#define PARARANK_CLI_PUBLISHED_TARGETS_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/pipeline.h"

namespace pararank {

// Published reference numbers for the PiN corpus, SNR 5, 0 and -5 dB in
// that order.
struct PublishedTargets {
  static constexpr double kSnrs[3] = {5.0, 0.0, -5.0};
  static constexpr double kMeanSentInt[3] = {0.97, 0.94, 0.71};
  static constexpr double kMeanAbsDiff[3] = {0.039, 0.059, 0.198};
  static constexpr double kOracleGainPercent[3] = {2.0, 5.0, 33.0};
  static constexpr int kPairs[3][3] = {  // subset x SNR
      {300, 300, 300}, {104, 123, 105}, {195, 205, 196}};
  // Ranking accuracies: STOI, ppl, phLen, phLen+ppl, phLen+ppl+STOI,
  // majority, uniform.
  static constexpr const char *kRankRows[7] = {
      "STOI", "ppl", "phLen", "phLen+ppl", "phLen+ppl+STOI", "majority",
      "uniform"};
  static constexpr double kRankAccuracy[7][3] = {
      {46.0, 49.0, 53.0}, {39.0, 52.0, 55.0}, {53.0, 59.0, 56.0},
      {53.0, 64.0, 61.0}, {54.0, 60.0, 67.0}, {43.0, 48.0, 46.0},
      {33.0, 32.0, 51.0}};

  static constexpr double kMeanTolerance = 0.02;
  static constexpr double kGainTolerance = 3.0;   // percentage points
  static constexpr double kRankTolerance = 5.0;   // accuracy points
};

enum class CheckStatus { kPass, kFail, kReported };
const char *CheckStatusName(CheckStatus s);  // "PASS", "FAIL", "REPORTED"

struct TargetCheck {
  int criterion = 0;  // acceptance criterion number, 2..7
  std::string name;
  std::string target;
  std::string computed;
  CheckStatus status = CheckStatus::kReported;
};

// Loader counts per subset and SNR.
std::vector<TargetCheck> CheckPairCounts(const PinData &data);
// Mean Sent-Int, mean |diff| with its tests, and oracle gains, all on PiN.
std::vector<TargetCheck> CheckCorpusSummary(const PinSummary &summary);
// Needs the Sent-Int models at SNR 5 and -5. The ppl coefficient is only
// gated with externally supplied perplexities.
std::vector<TargetCheck> CheckRegressionSigns(
    const std::vector<RegressionResult> &models, bool external_ppl);
// Every cell within tolerance; with built-in perplexities only the STOI,
// phLen and baseline rows are gated.
std::vector<TargetCheck> CheckRankingTable(const RankingTable &table,
                                           bool external_ppl);

// True when no gated check of the criterion failed and at least one ran.
bool CriterionPassed(const std::vector<TargetCheck> &checks, int criterion);

void WriteChecksTsv(std::ostream &os, const std::vector<TargetCheck> &checks);

}  // namespace pararank

#endif  // PARARANK_CLI_PUBLISHED_TARGETS_H_
