// dataset/pin-data.cc

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

#include "dataset/pin-data.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <set>

#include "base/parallel.h"
#include "base/pararank-error.h"
#include "base/text-utils.h"
#include "phonetics/g2p.h"

namespace pararank {

namespace {

struct PublishedCount {
  PinSubset subset;
  double snr_db;
  size_t pairs;
};

constexpr PublishedCount kPublished[] = {
    {PinSubset::kAll, 5, 300},    {PinSubset::kAll, 0, 300},
    {PinSubset::kAll, -5, 300},   {PinSubset::kBoth, 5, 104},
    {PinSubset::kBoth, 0, 123},   {PinSubset::kBoth, -5, 105},
    {PinSubset::kEither, 5, 195}, {PinSubset::kEither, 0, 205},
    {PinSubset::kEither, -5, 196},
};

constexpr size_t kPublishedTranscripts = 6;

bool ParseFlag(const std::string &field, const std::string &where) {
  std::string v = Trim(field);
  if (v == "1") return true;
  if (v == "0") return false;
  throw Error(where + ": annotator flag must be 0 or 1, got '" + v + "'");
}

int ParsePosition(const std::string &field, const std::string &where) {
  std::string v = ToLower(Trim(field));
  if (v == "s1" || v == "1") return 1;
  if (v == "s2" || v == "2") return 2;
  if (v == "s3" || v == "3") return 3;
  throw Error(where + ": position must be s1, s2 or s3, got '" + v + "'");
}

std::string FormatSnr(double snr) { return FormatDouble(snr) + " dB"; }

}  // namespace

double PinRecord::SentIntValue() const {
  if (!sent_int) throw Error("record " + utterance_id + " is not scored");
  return sent_int->value();
}

const char *PinSubsetName(PinSubset s) {
  switch (s) {
    case PinSubset::kAll: return "PiN";
    case PinSubset::kBoth: return "PiN_both";
    case PinSubset::kEither: return "PiN_either";
  }
  throw Error("bad subset");
}

bool PinPair::In(PinSubset s) const {
  switch (s) {
    case PinSubset::kAll: return true;
    case PinSubset::kBoth: return in_both();
    case PinSubset::kEither: return in_either();
  }
  return false;
}

std::vector<double> PinData::Snrs() const {
  std::set<double, std::greater<double>> s;
  for (const auto &r : records) s.insert(r.snr_db);
  return {s.begin(), s.end()};
}

const PinRecord &PinData::Record(const std::string &utterance_id) const {
  auto it = index.find(utterance_id);
  if (it == index.end()) throw Error("unknown utterance " + utterance_id);
  return records[it->second];
}

bool PinData::scored() const {
  for (const auto &p : pairs)
    if (!p.gold) return false;
  return !pairs.empty();
}

PinData BuildPin(const Table &records, const Table &annotations,
                 const PinLoadOptions &opts) {
  PinData data;
  size_t c_id = records.Column("utterance_id"),
         c_trip = records.Column("triplet_id"),
         c_pos = records.Column("position"), c_snr = records.Column("snr_db"),
         c_text = records.Column("text");
  std::vector<size_t> c_tr;
  for (int k = 1;; ++k) {
    std::string name = "transcript_" + std::to_string(k);
    if (!records.HasColumn(name)) break;
    c_tr.push_back(records.Column(name));
  }
  if (c_tr.empty())
    throw Error(records.source() + ": no transcript_1.. columns");
  if (opts.check_counts && c_tr.size() != kPublishedTranscripts)
    throw Error(records.source() + ": expected " +
                std::to_string(kPublishedTranscripts) +
                " transcript columns, found " + std::to_string(c_tr.size()));

  // triplet -> position -> record index
  std::map<std::string, std::map<int, size_t>> triplets;
  for (const auto &row : records.rows()) {
    std::string where = records.source() + ":" + std::to_string(row.line);
    PinRecord r;
    r.utterance_id = Trim(row.fields[c_id]);
    r.triplet_id = Trim(row.fields[c_trip]);
    if (r.utterance_id.empty() || r.triplet_id.empty())
      throw Error(where + ": empty utterance_id or triplet_id");
    r.position = ParsePosition(row.fields[c_pos], where);
    try {
      r.snr_db = ParseDouble(row.fields[c_snr], "snr_db");
    } catch (const Error &e) {
      throw Error(where + ": " + e.what());
    }
    r.text = row.fields[c_text];
    for (size_t c : c_tr) r.transcripts.push_back(row.fields[c]);
    if (!data.index.emplace(r.utterance_id, data.records.size()).second)
      throw Error(where + ": duplicate utterance_id " + r.utterance_id);
    auto &slots = triplets[r.triplet_id];
    if (!slots.emplace(r.position, data.records.size()).second)
      throw Error(where + ": triplet " + r.triplet_id + " has two s" +
                  std::to_string(r.position));
    data.records.push_back(std::move(r));
  }
  if (data.records.empty()) throw Error(records.source() + ": no records");

  static const std::pair<int, int> kPairs[] = {{1, 2}, {2, 3}, {1, 3}};
  std::unordered_map<std::string, size_t> pair_index;
  for (const auto &[trip, slots] : triplets) {
    if (slots.size() != 3)
      throw Error("triplet " + trip + " has " + std::to_string(slots.size()) +
                  " utterances, expected s1, s2 and s3");
    double snr = data.records[slots.at(1)].snr_db;
    for (const auto &[pos, idx] : slots)
      if (data.records[idx].snr_db != snr)
        throw Error("triplet " + trip + " mixes SNR conditions");
    for (auto [a, b] : kPairs) {
      PinPair p;
      p.pair_id = trip + ":s" + std::to_string(a) + "-s" + std::to_string(b);
      p.snr_db = snr;
      p.left = slots.at(a);
      p.right = slots.at(b);
      pair_index[p.pair_id] = data.pairs.size();
      data.pairs.push_back(std::move(p));
    }
  }

  size_t a_id = annotations.Column("pair_id"),
         a_a = annotations.Column("annotator_a"),
         a_b = annotations.Column("annotator_b");
  std::vector<bool> annotated(data.pairs.size(), false);
  for (const auto &row : annotations.rows()) {
    std::string where =
        annotations.source() + ":" + std::to_string(row.line);
    std::string id = Trim(row.fields[a_id]);
    auto it = pair_index.find(id);
    if (it == pair_index.end())
      throw Error(where + ": annotation for unknown pair " + id);
    if (annotated[it->second])
      throw Error(where + ": duplicate annotation for pair " + id);
    annotated[it->second] = true;
    data.pairs[it->second].annotator_a = ParseFlag(row.fields[a_a], where);
    data.pairs[it->second].annotator_b = ParseFlag(row.fields[a_b], where);
  }
  for (size_t i = 0; i < data.pairs.size(); ++i)
    if (!annotated[i])
      throw Error(annotations.source() + ": no annotation for pair " +
                  data.pairs[i].pair_id);

  if (opts.check_counts) CheckPublishedCounts(data);
  return data;
}

PinData LoadPin(const std::string &dir, const PinLoadOptions &opts) {
  namespace fs = std::filesystem;
  fs::path rec = fs::path(dir) / "records.tsv";
  fs::path ann = fs::path(dir) / "annotations.tsv";
  if (!fs::is_directory(dir)) throw Error("dataset directory not found: " + dir);
  for (const auto &p : {rec, ann})
    if (!fs::exists(p)) throw Error("dataset file missing: " + p.string());
  return BuildPin(Table::Read(rec.string(), '\t'),
                  Table::Read(ann.string(), '\t'), opts);
}

size_t CountPairs(const PinData &data, PinSubset subset, double snr_db) {
  return static_cast<size_t>(std::count_if(
      data.pairs.begin(), data.pairs.end(), [&](const PinPair &p) {
        return p.snr_db == snr_db && p.In(subset);
      }));
}

void CheckPublishedCounts(const PinData &data) {
  std::vector<std::string> problems;
  std::set<double> expected_snrs;
  for (const auto &c : kPublished) {
    expected_snrs.insert(c.snr_db);
    size_t found = CountPairs(data, c.subset, c.snr_db);
    if (found != c.pairs)
      problems.push_back(std::string(PinSubsetName(c.subset)) + " at " +
                         FormatSnr(c.snr_db) + ": expected " +
                         std::to_string(c.pairs) + ", found " +
                         std::to_string(found));
  }
  for (double snr : data.Snrs())
    if (!expected_snrs.count(snr))
      problems.push_back("unexpected SNR condition " + FormatSnr(snr));
  if (!problems.empty())
    throw Error("pair count mismatch: " + JoinStrings(problems, "; "));
}

PairOrder GoldOrder(const Fraction &left, const Fraction &right) {
  if (left == right) return PairOrder::kTie;
  return left > right ? PairOrder::kLeftMore : PairOrder::kRightMore;
}

void ScoreRecords(PinData *data, const Lexicon &lexicon, int jobs) {
  auto &recs = data->records;
  ParallelFor(recs.size(), jobs, [&](size_t i) {
    PinRecord &r = recs[i];
    PhonemeSequence target = G2p(r.text, lexicon);
    if (target.empty())
      throw Error("utterance " + r.utterance_id + " has no phonemes");
    std::vector<PhonemeSequence> perceived;
    for (const auto &t : r.transcripts) perceived.push_back(G2p(t, lexicon));
    r.sent_int = SentIntExact(target, perceived);
  });
  for (auto &p : data->pairs)
    p.gold = GoldOrder(*recs[p.left].sent_int, *recs[p.right].sent_int);
}

}  // namespace pararank
