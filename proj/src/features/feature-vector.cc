// features/feature-vector.cc

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

#include "features/feature-vector.h"

#include <cmath>
#include <ostream>
#include <unordered_set>

#include "base/pararank-error.h"
#include "base/table-io.h"
#include "base/text-utils.h"
#include "lm/tokenizer.h"
#include "phonetics/g2p.h"
#include "stoi/stoi.h"

namespace pararank {

const char *FeatureName(FeatureId f) {
  switch (f) {
    case FeatureId::kPhLen: return "phLen";
    case FeatureId::kPpl: return "ppl";
    case FeatureId::kStoi: return "STOI";
  }
  throw Error("bad feature id");
}

FeatureId ParseFeatureName(std::string_view name) {
  std::string key = ToLower(Trim(name));
  if (key == "phlen") return FeatureId::kPhLen;
  if (key == "ppl") return FeatureId::kPpl;
  if (key == "stoi") return FeatureId::kStoi;
  throw Error("unknown feature '" + std::string(name) +
              "' (expected phLen, ppl or STOI)");
}

std::vector<FeatureId> ParseFeatureList(std::string_view list) {
  std::vector<FeatureId> out;
  for (const auto &part : SplitString(list, ',')) {
    FeatureId f = ParseFeatureName(part);
    for (FeatureId g : out)
      if (g == f) throw Error("duplicate feature " + std::string(FeatureName(f)));
    out.push_back(f);
  }
  if (out.empty()) throw Error("empty feature list");
  return out;
}

std::string FeatureListName(const std::vector<FeatureId> &features) {
  std::vector<std::string> names;
  for (FeatureId f : features) names.push_back(FeatureName(f));
  return JoinStrings(names, "+");
}

double FeatureVector::Get(FeatureId f) const {
  switch (f) {
    case FeatureId::kPhLen: return ph_len;
    case FeatureId::kPpl: return ppl;
    case FeatureId::kStoi: return stoi;
  }
  throw Error("bad feature id");
}

std::vector<double> FeatureVector::Row(
    const std::vector<FeatureId> &features) const {
  std::vector<double> row;
  row.reserve(features.size());
  for (FeatureId f : features) row.push_back(Get(f));
  return row;
}

void FeatureVector::Validate() const {
  std::string who = "features of " + utterance_id + ": ";
  if (ph_len < 1) throw Error(who + "phLen must be >= 1");
  if (!(std::isfinite(ppl) && ppl > 0)) throw Error(who + "ppl must be > 0");
  if (!(std::isfinite(stoi) && stoi >= -1.0 && stoi <= 1.0))
    throw Error(who + "STOI outside [-1, 1]");
  if (!std::isfinite(snr_db)) throw Error(who + "non-finite snr");
}

PplSource::PplSource(const std::vector<PplRecord> &records) {
  for (const auto &r : records) table_[r.utterance_id] = r.ppl;
}

double PplSource::Ppl(const std::string &utterance_id,
                      std::string_view text) const {
  if (model_ != nullptr) return model_->Perplexity(Tokenize(text));
  auto it = table_.find(utterance_id);
  if (it == table_.end())
    throw Error("no external ppl record for utterance " + utterance_id);
  return it->second;
}

FeatureVector ExtractFeatures(const std::string &utterance_id,
                              std::string_view text, double stoi,
                              const PplSource &ppl, const Lexicon &lexicon,
                              double snr_db) {
  FeatureVector v;
  v.utterance_id = utterance_id;
  v.snr_db = snr_db;
  v.ph_len = static_cast<int>(G2p(text, lexicon).size());
  v.ppl = ppl.Ppl(utterance_id, text);
  v.stoi = stoi;
  v.Validate();
  return v;
}

FeatureVector ExtractFeatures(const std::string &utterance_id,
                              std::string_view text, const Waveform &clean,
                              const Waveform &noisy, const PplSource &ppl,
                              const Lexicon &lexicon, double snr_db) {
  return ExtractFeatures(utterance_id, text, Stoi(clean, noisy), ppl, lexicon,
                         snr_db);
}

void WriteFeatureTable(std::ostream &os, const std::vector<FeatureVector> &v) {
  os << "utterance_id,snr,phLen,ppl,stoi\n";
  for (const auto &f : v) {
    os << FormatRow({f.utterance_id, FormatDouble(f.snr_db),
                     std::to_string(f.ph_len), FormatDouble(f.ppl),
                     FormatDouble(f.stoi)},
                    ',')
       << "\n";
  }
}

namespace {

std::vector<FeatureVector> FromTable(const Table &t) {
  size_t id = t.Column("utterance_id"), snr = t.Column("snr"),
         ph = t.Column("phLen"), ppl = t.Column("ppl"), st = t.Column("stoi");
  std::vector<FeatureVector> out;
  std::unordered_set<std::string> seen;
  for (const auto &row : t.rows()) {
    std::string where = t.source() + ":" + std::to_string(row.line) + ": ";
    FeatureVector v;
    try {
      v.utterance_id = Trim(row.fields[id]);
      v.snr_db = ParseDouble(row.fields[snr], "snr");
      long long n = ParseInt(row.fields[ph], "phLen");
      v.ph_len = static_cast<int>(n);
      v.ppl = ParseDouble(row.fields[ppl], "ppl");
      v.stoi = ParseDouble(row.fields[st], "stoi");
      v.Validate();
    } catch (const Error &e) {
      throw Error(where + e.what());
    }
    if (!seen.insert(v.utterance_id).second)
      throw Error(where + "duplicate id " + v.utterance_id);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<FeatureVector> ReadFeatureTable(const std::string &path) {
  return FromTable(Table::Read(path, ','));
}

std::vector<FeatureVector> ParseFeatureTable(std::istream &is,
                                             const std::string &source) {
  return FromTable(Table::Parse(is, ',', source));
}

}  // namespace pararank
