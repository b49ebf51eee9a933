// dataset/pin-analysis.cc

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

#include "dataset/pin-analysis.h"

#include <cmath>
#include <limits>
#include <set>

#include "base/pararank-error.h"

namespace pararank {

std::vector<int> AbsDiffHistogram(const std::vector<double> &abs_diffs) {
  std::vector<int> bins(kHistogramBins, 0);
  for (double d : abs_diffs) {
    if (!(d >= 0.0 && d <= 1.0))
      throw Error("intelligibility difference outside [0, 1]");
    int b = static_cast<int>(std::floor(d * kHistogramBins));
    ++bins[std::min(b, kHistogramBins - 1)];
  }
  return bins;
}

double OracleGain(const std::vector<SentIntPair> &pairs) {
  if (pairs.empty()) throw Error("oracle gain of no pairs");
  double more = 0.0, less = 0.0;
  for (const auto &p : pairs) {
    more += std::max(p.left, p.right);
    less += std::min(p.left, p.right);
  }
  if (more == less) return 0.0;
  if (less == 0.0) return std::numeric_limits<double>::infinity();
  return (more - less) / less;
}

const ConditionSummary &PinSummary::Get(PinSubset subset, double snr_db) const {
  for (const auto &c : conditions)
    if (c.subset == subset && c.snr_db == snr_db) return c;
  throw Error(std::string("no summary for ") + PinSubsetName(subset) +
              " at SNR " + std::to_string(snr_db));
}

namespace {

std::optional<TTestResult> TryOneSample(const std::vector<double> &xs) {
  try {
    return OneSampleTTest(xs, 0.0);
  } catch (const Error &) {
    return std::nullopt;
  }
}

std::optional<TTestResult> TryWelch(const std::vector<double> &xs,
                                    const std::vector<double> &ys) {
  try {
    return WelchTTest(xs, ys);
  } catch (const Error &) {
    return std::nullopt;
  }
}

}  // namespace

PinSummary SummarizePin(const PinData &data) {
  if (!data.scored()) throw Error("dataset must be scored before analysis");
  PinSummary out;
  const std::vector<double> snrs = data.Snrs();
  for (PinSubset subset : kAllSubsets) {
    std::vector<std::vector<double>> diffs_by_snr;
    for (double snr : snrs) {
      ConditionSummary c;
      c.subset = subset;
      c.snr_db = snr;
      std::vector<double> diffs;
      std::vector<SentIntPair> si;
      std::set<size_t> utts;
      for (const auto &p : data.pairs) {
        if (p.snr_db != snr || !p.In(subset)) continue;
        double l = data.records[p.left].SentIntValue();
        double r = data.records[p.right].SentIntValue();
        diffs.push_back(std::abs(l - r));
        si.push_back({l, r});
        utts.insert(p.left);
        utts.insert(p.right);
        if (*p.gold == PairOrder::kTie) ++c.num_ties;
      }
      c.num_pairs = diffs.size();
      c.num_utterances = utts.size();
      c.histogram = AbsDiffHistogram(diffs);
      if (!diffs.empty()) {
        double s = 0.0;
        for (size_t u : utts) s += data.records[u].SentIntValue();
        c.mean_sent_int = s / utts.size();
        c.mean_abs_diff = Mean(diffs);
        c.diff_test = TryOneSample(diffs);
        c.oracle_gain = OracleGain(si);
      }
      diffs_by_snr.push_back(std::move(diffs));
      out.conditions.push_back(std::move(c));
    }
    for (size_t i = 0; i + 1 < snrs.size(); ++i) {
      AdjacentSnrTest t;
      t.subset = subset;
      t.snr_cleaner = snrs[i];
      t.snr_noisier = snrs[i + 1];
      t.welch = TryWelch(diffs_by_snr[i + 1], diffs_by_snr[i]);
      out.adjacent.push_back(t);
    }
  }
  return out;
}

}  // namespace pararank
