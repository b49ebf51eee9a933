// features/diff-features.cc

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

#include "features/diff-features.h"

#include "base/pararank-error.h"

namespace pararank {

const char *PairOrderName(PairOrder o) {
  switch (o) {
    case PairOrder::kLeftMore: return "left";
    case PairOrder::kRightMore: return "right";
    case PairOrder::kTie: return "tie";
  }
  throw Error("bad pair order");
}

PairOrder ParsePairOrder(std::string_view name) {
  if (name == "left") return PairOrder::kLeftMore;
  if (name == "right") return PairOrder::kRightMore;
  if (name == "tie") return PairOrder::kTie;
  throw Error("unknown pair order '" + std::string(name) + "'");
}

PairOrder SwapOrder(PairOrder o) {
  if (o == PairOrder::kLeftMore) return PairOrder::kRightMore;
  if (o == PairOrder::kRightMore) return PairOrder::kLeftMore;
  return o;
}

double DiffFeatures::Get(FeatureId f) const {
  switch (f) {
    case FeatureId::kPhLen: return diff_ph_len;
    case FeatureId::kPpl: return diff_ppl;
    case FeatureId::kStoi: return diff_stoi;
  }
  throw Error("bad feature id");
}

std::optional<DiffFeatures> MakeDiffFeatures(const std::string &pair_id,
                                             const FeatureVector &left,
                                             const FeatureVector &right,
                                             PairOrder gold,
                                             double sent_int_left,
                                             double sent_int_right) {
  if (left.snr_db != right.snr_db)
    throw Error("pair " + pair_id + " mixes SNR conditions");
  if (gold == PairOrder::kTie) return std::nullopt;
  bool left_more = gold == PairOrder::kLeftMore;
  const FeatureVector &more = left_more ? left : right;
  const FeatureVector &less = left_more ? right : left;
  double gain = left_more ? sent_int_left - sent_int_right
                          : sent_int_right - sent_int_left;
  if (gain < 0.0)
    throw Error("pair " + pair_id + ": gold order contradicts Sent-Int");
  DiffFeatures d;
  d.pair_id = pair_id;
  d.snr_db = left.snr_db;
  d.diff_ph_len = more.ph_len - less.ph_len;
  d.diff_ppl = more.ppl - less.ppl;
  d.diff_stoi = more.stoi - less.stoi;
  d.sent_int_gain = gain;
  return d;
}

}  // namespace pararank
