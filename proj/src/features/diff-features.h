// features/diff-features.h

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

#ifndef PARARANK_FEATURES_DIFF_FEATURES_H_
#define PARARANK_FEATURES_DIFF_FEATURES_H_

#include <optional>
#include <string>
#include <string_view>

#include "features/feature-vector.h"

namespace pararank {

// Gold ordering of a paraphrase pair (left, right).
enum class PairOrder { kLeftMore = 0, kRightMore = 1, kTie = 2 };

const char *PairOrderName(PairOrder o);  // "left", "right", "tie"
PairOrder ParsePairOrder(std::string_view name);
PairOrder SwapOrder(PairOrder o);

struct DiffFeatures {
  std::string pair_id;
  double snr_db = 0.0;
  double diff_ph_len = 0.0;
  double diff_ppl = 0.0;
  double diff_stoi = 0.0;
  double sent_int_gain = 0.0;  // >= 0

  double Get(FeatureId f) const;
};

// Feature differences taken as (more intelligible) minus (less
// intelligible). Tied pairs carry no direction and give nullopt. Throws if
// the two vectors have different SNRs or the order contradicts the Sent-Int
// values.
std::optional<DiffFeatures> MakeDiffFeatures(const std::string &pair_id,
                                             const FeatureVector &left,
                                             const FeatureVector &right,
                                             PairOrder gold,
                                             double sent_int_left,
                                             double sent_int_right);

}  // namespace pararank

#endif  // PARARANK_FEATURES_DIFF_FEATURES_H_
