// cli/published-targets.cc

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

#include "cli/published-targets.h"

#include <cmath>
#include <ostream>

#include "base/pararank-error.h"
#include "base/text-utils.h"

namespace pararank {

const char *CheckStatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kReported: return "REPORTED";
  }
  return "?";
}

namespace {

CheckStatus Gate(bool gated, bool ok) {
  if (!gated) return CheckStatus::kReported;
  return ok ? CheckStatus::kPass : CheckStatus::kFail;
}

TargetCheck Near(int criterion, std::string name, double target,
                 double computed, double tol, int decimals, bool gated = true) {
  TargetCheck c;
  c.criterion = criterion;
  c.name = std::move(name);
  c.target = FormatFixed(target, decimals) + " +/- " + FormatFixed(tol, decimals);
  c.computed = FormatFixed(computed, decimals + 1);
  c.status = Gate(gated, std::isfinite(computed) &&
                             std::fabs(computed - target) <= tol + 1e-12);
  return c;
}

std::string SnrLabel(double snr) { return "SNR " + FormatSnr(snr); }

std::string FormatP(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", p);
  return buf;
}

}  // namespace

std::vector<TargetCheck> CheckPairCounts(const PinData &data) {
  using T = PublishedTargets;
  std::vector<TargetCheck> out;
  for (int s = 0; s < 3; ++s) {
    PinSubset subset = kAllSubsets[s];
    int total = 0;
    size_t found_total = 0;
    for (int k = 0; k < 3; ++k) {
      size_t found = CountPairs(data, subset, T::kSnrs[k]);
      total += T::kPairs[s][k];
      found_total += found;
      TargetCheck c;
      c.criterion = 5;
      c.name = std::string(PinSubsetName(subset)) + " pairs at " +
               SnrLabel(T::kSnrs[k]);
      c.target = std::to_string(T::kPairs[s][k]);
      c.computed = std::to_string(found);
      c.status = Gate(true, found == static_cast<size_t>(T::kPairs[s][k]));
      out.push_back(c);
    }
    TargetCheck c;
    c.criterion = 5;
    c.name = std::string(PinSubsetName(subset)) + " pairs in total";
    c.target = std::to_string(total);
    c.computed = std::to_string(found_total);
    c.status = Gate(true, found_total == static_cast<size_t>(total));
    out.push_back(c);
  }
  return out;
}

std::vector<TargetCheck> CheckCorpusSummary(const PinSummary &summary) {
  using T = PublishedTargets;
  std::vector<TargetCheck> out;
  for (int k = 0; k < 3; ++k) {
    const auto &c = summary.Get(PinSubset::kAll, T::kSnrs[k]);
    out.push_back(Near(2, "mean Sent-Int at " + SnrLabel(T::kSnrs[k]),
                       T::kMeanSentInt[k], c.mean_sent_int, T::kMeanTolerance,
                       2));
  }
  for (int k = 0; k < 3; ++k) {
    const auto &c = summary.Get(PinSubset::kAll, T::kSnrs[k]);
    out.push_back(Near(3, "mean |diff| at " + SnrLabel(T::kSnrs[k]),
                       T::kMeanAbsDiff[k], c.mean_abs_diff, T::kMeanTolerance,
                       3));
  }
  {
    const auto &c = summary.Get(PinSubset::kAll, T::kSnrs[0]);
    TargetCheck t;
    t.criterion = 3;
    t.name = "one-sample t-test of |diff| at SNR 5";
    t.target = "p < 0.001";
    t.computed = c.diff_test ? "p = " + FormatP(c.diff_test->p_value)
                             : "no test (zero variance)";
    t.status = Gate(true, c.diff_test && c.diff_test->p_value < 0.001);
    out.push_back(t);
  }
  for (int k = 1; k < 3; ++k) {
    double noisier = T::kSnrs[k], cleaner = T::kSnrs[k - 1];
    const AdjacentSnrTest *test = nullptr;
    for (const auto &a : summary.adjacent)
      if (a.subset == PinSubset::kAll && a.snr_noisier == noisier &&
          a.snr_cleaner == cleaner)
        test = &a;
    TargetCheck t;
    t.criterion = 3;
    t.name = "Welch test of |diff|, " + SnrLabel(noisier) + " above " +
             SnrLabel(cleaner);
    t.target = "p < 0.05, noisier mean larger";
    if (test == nullptr || !test->welch) {
      t.computed = "no test";
      t.status = CheckStatus::kFail;
    } else {
      const auto &w = *test->welch;
      t.computed = "p = " + FormatP(w.p_value) + ", means " +
                   FormatFixed(w.mean_x, 3) + " vs " + FormatFixed(w.mean_y, 3);
      t.status = Gate(true, w.p_value < 0.05 && w.mean_x > w.mean_y);
    }
    out.push_back(t);
  }
  for (int k = 0; k < 3; ++k) {
    const auto &c = summary.Get(PinSubset::kAll, T::kSnrs[k]);
    out.push_back(Near(4, "oracle gain % at " + SnrLabel(T::kSnrs[k]),
                       T::kOracleGainPercent[k], 100.0 * c.oracle_gain,
                       T::kGainTolerance, 0));
  }
  return out;
}

namespace {

const RegressionResult &FindSentIntModel(
    const std::vector<RegressionResult> &models, double snr) {
  for (const auto &m : models)
    if (m.response == Response::kSentInt && m.snr_db == snr &&
        m.subset == PinSubset::kAll)
      return m;
  throw Error("no PiN Sent-Int model at SNR " + FormatSnr(snr));
}

TargetCheck SignCheck(const RegressionResult &m, const std::string &term,
                      int sign, bool gated) {
  const auto &c = m.Coefficient(term);
  TargetCheck t;
  t.criterion = 6;
  t.name = "Sent-Int model at " + SnrLabel(m.snr_db) + ": beta(" + term + ")";
  t.target = std::string(sign > 0 ? "> 0" : "< 0") + ", p < 0.05";
  t.computed = FormatFixed(c.estimate, 4) + ", p = " + FormatP(c.p_value);
  t.status = Gate(gated, c.estimate * sign > 0 && c.p_value < 0.05);
  return t;
}

}  // namespace

std::vector<TargetCheck> CheckRegressionSigns(
    const std::vector<RegressionResult> &models, bool external_ppl) {
  std::vector<TargetCheck> out;
  const auto &noisy = FindSentIntModel(models, -5.0);
  out.push_back(SignCheck(noisy, "STOI", +1, true));
  out.push_back(SignCheck(noisy, "ppl", -1, external_ppl));
  out.push_back(SignCheck(noisy, "phLen", -1, true));
  const auto &clean = FindSentIntModel(models, 5.0);
  const auto &c = clean.Coefficient("STOI");
  TargetCheck t;
  t.criterion = 6;
  t.name = "Sent-Int model at SNR 5: beta(STOI) not significant";
  t.target = "p >= 0.05";
  t.computed = FormatFixed(c.estimate, 4) + ", p = " + FormatP(c.p_value);
  t.status = Gate(true, c.p_value >= 0.05);
  out.push_back(t);
  return out;
}

std::vector<TargetCheck> CheckRankingTable(const RankingTable &table,
                                           bool external_ppl) {
  using T = PublishedTargets;
  std::vector<TargetCheck> out;
  for (int k = 0; k < 3; ++k) {
    const EvalReport &rep = table.At(T::kSnrs[k]);
    for (int r = 0; r < 7; ++r) {
      std::string row = T::kRankRows[r];
      bool gated = external_ppl || row == "STOI" || row == "phLen" ||
                   row == "majority" || row == "uniform";
      out.push_back(Near(7, row + " accuracy at " + SnrLabel(T::kSnrs[k]),
                         T::kRankAccuracy[r][k], rep.Row(row).ci.mean,
                         T::kRankTolerance, 1, gated));
    }
  }
  const EvalReport &rep = table.At(-5.0);
  double full = rep.Row("phLen+ppl+STOI").ci.mean;
  double uniform = rep.Row("uniform").ci.mean;
  TargetCheck a;
  a.criterion = 7;
  a.name = "phLen+ppl+STOI accuracy at SNR -5";
  a.target = ">= 62";
  a.computed = FormatFixed(full, 2);
  a.status = Gate(external_ppl, full >= 62.0);
  out.push_back(a);
  TargetCheck b;
  b.criterion = 7;
  b.name = "phLen+ppl+STOI minus uniform at SNR -5";
  b.target = ">= 10";
  b.computed = FormatFixed(full - uniform, 2);
  b.status = Gate(external_ppl, full - uniform >= 10.0);
  out.push_back(b);
  TargetCheck c;
  c.criterion = 7;
  c.name = "relative improvement over uniform at SNR -5 (%)";
  c.target = "> 0 (published 31.37)";
  c.computed = uniform > 0 ? FormatFixed(100.0 * (full - uniform) / uniform, 2)
                           : "undefined";
  c.status = Gate(external_ppl, uniform > 0 && full > uniform);
  out.push_back(c);
  return out;
}

bool CriterionPassed(const std::vector<TargetCheck> &checks, int criterion) {
  bool any = false;
  for (const auto &c : checks) {
    if (c.criterion != criterion || c.status == CheckStatus::kReported)
      continue;
    any = true;
    if (c.status == CheckStatus::kFail) return false;
  }
  return any;
}

void WriteChecksTsv(std::ostream &os, const std::vector<TargetCheck> &checks) {
  os << "criterion\tcheck\ttarget\tcomputed\tstatus\n";
  for (const auto &c : checks)
    os << c.criterion << '\t' << c.name << '\t' << c.target << '\t'
       << c.computed << '\t' << CheckStatusName(c.status) << "\n";
}

}  // namespace pararank
