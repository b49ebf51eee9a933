// features/feature-vector.h

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

#ifndef PARARANK_FEATURES_FEATURE_VECTOR_H_
#define PARARANK_FEATURES_FEATURE_VECTOR_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "audio/waveform.h"
#include "lm/external-ppl.h"
#include "lm/ngram-model.h"
#include "phonetics/lexicon.h"

namespace pararank {

enum class FeatureId { kPhLen = 0, kPpl = 1, kStoi = 2 };
inline constexpr int kNumFeatures = 3;

// "phLen", "ppl", "STOI".
const char *FeatureName(FeatureId f);
// Case-insensitive inverse of FeatureName.
FeatureId ParseFeatureName(std::string_view name);
// Comma-separated list, e.g. "phLen,ppl,STOI". Rejects duplicates.
std::vector<FeatureId> ParseFeatureList(std::string_view list);
std::string FeatureListName(const std::vector<FeatureId> &features);

struct FeatureVector {
  std::string utterance_id;
  double snr_db = 0.0;
  int ph_len = 0;
  double ppl = 0.0;
  double stoi = 0.0;

  double Get(FeatureId f) const;
  std::vector<double> Row(const std::vector<FeatureId> &features) const;
  // Throws unless ph_len >= 1, ppl > 0, stoi in [-1, 1] and all finite.
  void Validate() const;
};

// Where perplexities come from: a trained n-gram model scoring the text, or
// precomputed values looked up by utterance id.
class PplSource {
 public:
  explicit PplSource(const NGramModel *model) : model_(model) {}
  explicit PplSource(const std::vector<PplRecord> &records);

  bool external() const { return model_ == nullptr; }
  double Ppl(const std::string &utterance_id, std::string_view text) const;

 private:
  const NGramModel *model_ = nullptr;
  std::unordered_map<std::string, double> table_;
};

FeatureVector ExtractFeatures(const std::string &utterance_id,
                              std::string_view text, const Waveform &clean,
                              const Waveform &noisy, const PplSource &ppl,
                              const Lexicon &lexicon, double snr_db);

// Same as above with a precomputed STOI value.
FeatureVector ExtractFeatures(const std::string &utterance_id,
                              std::string_view text, double stoi,
                              const PplSource &ppl, const Lexicon &lexicon,
                              double snr_db);

// CSV with header utterance_id,snr,phLen,ppl,stoi (raw, unscaled values).
void WriteFeatureTable(std::ostream &os, const std::vector<FeatureVector> &v);
std::vector<FeatureVector> ReadFeatureTable(const std::string &path);
std::vector<FeatureVector> ParseFeatureTable(std::istream &is,
                                             const std::string &source);

}  // namespace pararank

#endif  // PARARANK_FEATURES_FEATURE_VECTOR_H_
