// dataset/pin-analysis.h

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

#ifndef PARARANK_DATASET_PIN_ANALYSIS_H_
#define PARARANK_DATASET_PIN_ANALYSIS_H_

#include <optional>
#include <vector>

#include "dataset/pin-data.h"
#include "stats/t-test.h"

namespace pararank {

inline constexpr int kHistogramBins = 20;  // width 0.05 over [0, 1]

// Bin i counts |diff| in [0.05 i, 0.05 (i + 1)); 1.0 goes into the last bin.
std::vector<int> AbsDiffHistogram(const std::vector<double> &abs_diffs);

struct SentIntPair {
  double left = 0.0;
  double right = 0.0;
};

// (mean Sent-Int of the better member - mean of the worse member) / mean of
// the worse member, over all pairs (ties count on both sides). 0 when all
// pairs tie; +inf when the worse members all score 0 and some pair differs.
double OracleGain(const std::vector<SentIntPair> &pairs);

struct ConditionSummary {
  PinSubset subset = PinSubset::kAll;
  double snr_db = 0.0;
  size_t num_pairs = 0;
  size_t num_utterances = 0;
  double mean_sent_int = 0.0;    // over distinct utterances in the pairs
  double mean_abs_diff = 0.0;    // mean |Sent-Int(left) - Sent-Int(right)|
  size_t num_ties = 0;
  // One-sample test of |diff| against 0; empty when the differences have
  // no variance (e.g. all ties).
  std::optional<TTestResult> diff_test;
  std::vector<int> histogram;
  double oracle_gain = 0.0;
};

// Welch test of |diff| at the noisier level against the next cleaner one;
// a positive statistic means the noisier level has larger differences.
struct AdjacentSnrTest {
  PinSubset subset = PinSubset::kAll;
  double snr_noisier = 0.0;
  double snr_cleaner = 0.0;
  std::optional<TTestResult> welch;
};

struct PinSummary {
  std::vector<ConditionSummary> conditions;  // subset-major, SNR descending
  std::vector<AdjacentSnrTest> adjacent;

  const ConditionSummary &Get(PinSubset subset, double snr_db) const;
};

// Needs scored data.
PinSummary SummarizePin(const PinData &data);

}  // namespace pararank

#endif  // PARARANK_DATASET_PIN_ANALYSIS_H_
