// cli/pipeline.h

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

#ifndef PARARANK_CLI_PIPELINE_H_
#define PARARANK_CLI_PIPELINE_H_

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dataset/pin-analysis.h"
#include "dataset/pin-data.h"
#include "features/feature-vector.h"
#include "lm/ngram-model.h"
#include "ranker/rank-eval.h"
#include "stats/ols.h"

namespace pararank {

// Perplexity provider built from a path: a ".csv" file is read as
// precomputed utterance_id,ppl records, anything else as an n-gram model.
class LoadedPpl {
 public:
  static LoadedPpl Load(const std::string &path);
  static LoadedPpl FromModel(NGramModel model);
  bool external() const { return source_->external(); }
  const PplSource &source() const { return *source_; }

 private:
  std::shared_ptr<NGramModel> model_;
  std::shared_ptr<PplSource> source_;
};

// One sentence per line; blank lines are skipped.
std::vector<std::vector<std::string>> ReadLmCorpus(const std::string &path);

// Features of every record. STOI comes from `stoi_table` (CSV with
// utterance_id,stoi columns) when given, otherwise from
// <dataset_dir>/clean/<id>.wav against <dataset_dir>/noisy/<id>.wav.
std::vector<FeatureVector> ComputeFeatures(const PinData &data,
                                           const std::string &dataset_dir,
                                           const Lexicon &lexicon,
                                           const PplSource &ppl,
                                           const std::string &stoi_table,
                                           int jobs);

using FeatureIndex = std::unordered_map<std::string, FeatureVector>;

// Indexes by utterance id and checks that every dataset record has a row
// with a matching SNR.
FeatureIndex IndexFeatures(const std::vector<FeatureVector> &features,
                           const PinData &data);

enum class Response { kSentInt, kGain };
const char *ResponseName(Response r);  // "sent_int", "gain"
Response ParseResponse(const std::string &name);
PinSubset ParsePinSubset(const std::string &name);

struct RegressionResult {
  Response response = Response::kSentInt;
  double snr_db = 0.0;
  PinSubset subset = PinSubset::kAll;
  bool scaled = true;
  size_t num_rows = 0;
  size_t excluded_ties = 0;  // gain models only
  OlsFit fit;

  const OlsCoefficient &Coefficient(const std::string &name) const;
};

// Sent-Int models regress each distinct utterance of the subset's pairs on
// phLen, ppl and STOI. Gain models regress the Sent-Int gain of every
// non-tied pair on diff.phLen, diff.ppl and diff.STOI. With `scaled`, the
// predictors are z-scored over the rows of this one model.
RegressionResult RunRegression(const PinData &data, const FeatureIndex &features,
                               Response response, double snr_db,
                               PinSubset subset, bool scaled);

void WriteRegressionTsv(std::ostream &os, const RegressionResult &r);

// Scored pairs of one SNR and subset with their features.
std::vector<RankPair> BuildRankPairs(const PinData &data,
                                     const FeatureIndex &features,
                                     double snr_db, PinSubset subset);

// The ranking table: five feature rows and two baselines per SNR.
struct RankingTable {
  std::vector<double> snrs;
  std::vector<EvalReport> reports;  // parallel to snrs

  const EvalReport &At(double snr_db) const;
};

RankingTable RunRankingTable(const PinData &data, const FeatureIndex &features,
                             const std::vector<double> &snrs, PinSubset subset,
                             const EvalOptions &opts);

// Rows in table order; one "mean +/- ci95" cell per SNR, starred when the
// model beats both baselines.
void WriteRankingTableTsv(std::ostream &os, const RankingTable &table);
// One line per (SNR, row, seed) with the raw accuracy.
void WriteRankingRunsTsv(std::ostream &os, const RankingTable &table);

// Writes the corpus analysis into `dir`: sent-int.tsv (per utterance),
// pairs.tsv, summary.tsv (per subset and SNR), snr-tests.tsv (Welch tests
// between adjacent SNRs) and histogram.csv (|diff| counts in 0.05 bins).
// Returns the paths written.
std::vector<std::string> WriteAnalysisFiles(const std::string &dir,
                                            const PinData &data,
                                            const PinSummary &summary);
void WriteSummaryTsv(std::ostream &os, const PinSummary &summary);

std::string FormatFixed(double value, int decimals);
std::string FormatSnr(double snr_db);  // "5", "0", "-5", "2.5"

}  // namespace pararank

#endif  // PARARANK_CLI_PIPELINE_H_
