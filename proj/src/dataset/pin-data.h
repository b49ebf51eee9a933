// dataset/pin-data.h

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

#ifndef PARARANK_DATASET_PIN_DATA_H_
#define PARARANK_DATASET_PIN_DATA_H_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "base/table-io.h"
#include "features/diff-features.h"
#include "phonetics/intelligibility.h"
#include "phonetics/lexicon.h"

namespace pararank {

struct PinRecord {
  std::string utterance_id;
  std::string triplet_id;
  int position = 0;  // 1, 2 or 3 for s1, s2, s3
  double snr_db = 0.0;
  std::string text;
  std::vector<std::string> transcripts;
  std::optional<Fraction> sent_int;  // set by ScoreRecords

  double SentIntValue() const;  // throws if unscored
};

enum class PinSubset { kAll = 0, kBoth = 1, kEither = 2 };
inline constexpr PinSubset kAllSubsets[] = {PinSubset::kAll, PinSubset::kBoth,
                                            PinSubset::kEither};
const char *PinSubsetName(PinSubset s);  // "PiN", "PiN_both", "PiN_either"

struct PinPair {
  std::string pair_id;  // "<triplet>:s1-s2" and so on
  double snr_db = 0.0;
  size_t left = 0;   // record indices
  size_t right = 0;
  bool annotator_a = false;
  bool annotator_b = false;
  std::optional<PairOrder> gold;  // set by ScoreRecords

  bool in_both() const { return annotator_a && annotator_b; }
  bool in_either() const { return annotator_a || annotator_b; }
  bool In(PinSubset s) const;
};

struct PinData {
  std::vector<PinRecord> records;
  std::vector<PinPair> pairs;

  // Distinct SNR conditions, highest first.
  std::vector<double> Snrs() const;
  const PinRecord &Record(const std::string &utterance_id) const;
  bool scored() const;

  std::unordered_map<std::string, size_t> index;  // utterance id -> record
};

struct PinLoadOptions {
  // Require the published pair counts per subset and SNR, and six
  // transcripts per record. Turn off for other corpora.
  bool check_counts = true;
};

// Reads <dir>/records.tsv and <dir>/annotations.tsv.
PinData LoadPin(const std::string &dir, const PinLoadOptions &opts = {});
PinData BuildPin(const Table &records, const Table &annotations,
                 const PinLoadOptions &opts = {});

// Throws listing every (subset, SNR) whose pair count differs from the
// published one.
void CheckPublishedCounts(const PinData &data);
size_t CountPairs(const PinData &data, PinSubset subset, double snr_db);

// Fills every record's Sent-Int from its transcripts and every pair's gold
// order. Ties are exact equalities of the rational Sent-Int values.
void ScoreRecords(PinData *data, const Lexicon &lexicon, int jobs = 0);

// Gold order from two Sent-Int values.
PairOrder GoldOrder(const Fraction &left, const Fraction &right);

}  // namespace pararank

#endif  // PARARANK_DATASET_PIN_DATA_H_
