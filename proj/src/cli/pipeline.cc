// cli/pipeline.cc

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

#include "cli/pipeline.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>

#include "audio/wav-io.h"
#include "base/parallel.h"
#include "base/pararank-error.h"
#include "base/table-io.h"
#include "base/text-utils.h"
#include "features/scaler.h"
#include "lm/external-ppl.h"
#include "lm/tokenizer.h"

namespace fs = std::filesystem;

namespace pararank {

LoadedPpl LoadedPpl::Load(const std::string &path) {
  if (fs::path(path).extension() == ".csv") {
    LoadedPpl l;
    l.source_ = std::make_shared<PplSource>(LoadExternalPpl(path));
    return l;
  }
  return FromModel(NGramModel::Load(path));
}

LoadedPpl LoadedPpl::FromModel(NGramModel model) {
  LoadedPpl l;
  l.model_ = std::make_shared<NGramModel>(std::move(model));
  l.source_ = std::make_shared<PplSource>(l.model_.get());
  return l;
}

std::vector<std::vector<std::string>> ReadLmCorpus(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus " + path);
  std::vector<std::vector<std::string>> corpus;
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = Tokenize(line);
    if (!tokens.empty()) corpus.push_back(std::move(tokens));
  }
  if (corpus.empty()) throw Error("corpus " + path + " has no sentences");
  return corpus;
}

namespace {

std::unordered_map<std::string, double> ReadStoiTable(const std::string &path) {
  Table t = Table::Read(path, ',');
  size_t c_id = t.Column("utterance_id"), c_stoi = t.Column("stoi");
  std::unordered_map<std::string, double> out;
  for (const auto &row : t.rows()) {
    std::string where = path + " line " + std::to_string(row.line);
    double v = ParseDouble(row.fields[c_stoi], "stoi in " + where);
    if (!out.emplace(row.fields[c_id], v).second)
      throw Error("duplicate id " + row.fields[c_id] + " in " + where);
  }
  return out;
}

}  // namespace

std::vector<FeatureVector> ComputeFeatures(const PinData &data,
                                           const std::string &dataset_dir,
                                           const Lexicon &lexicon,
                                           const PplSource &ppl,
                                           const std::string &stoi_table,
                                           int jobs) {
  std::unordered_map<std::string, double> stoi;
  if (!stoi_table.empty()) stoi = ReadStoiTable(stoi_table);
  std::vector<FeatureVector> out(data.records.size());
  ParallelFor(data.records.size(), jobs, [&](size_t i) {
    const PinRecord &r = data.records[i];
    if (!stoi_table.empty()) {
      auto it = stoi.find(r.utterance_id);
      if (it == stoi.end())
        throw Error("no STOI value for " + r.utterance_id + " in " +
                    stoi_table);
      out[i] = ExtractFeatures(r.utterance_id, r.text, it->second, ppl,
                               lexicon, r.snr_db);
    } else {
      fs::path base(dataset_dir);
      Waveform clean = ReadWav((base / "clean" / (r.utterance_id + ".wav")).string());
      Waveform noisy = ReadWav((base / "noisy" / (r.utterance_id + ".wav")).string());
      out[i] = ExtractFeatures(r.utterance_id, r.text, clean, noisy, ppl,
                               lexicon, r.snr_db);
    }
  });
  return out;
}

FeatureIndex IndexFeatures(const std::vector<FeatureVector> &features,
                           const PinData &data) {
  FeatureIndex index;
  for (const auto &f : features)
    if (!index.emplace(f.utterance_id, f).second)
      throw Error("duplicate feature row for " + f.utterance_id);
  for (const auto &r : data.records) {
    auto it = index.find(r.utterance_id);
    if (it == index.end())
      throw Error("no feature row for utterance " + r.utterance_id);
    if (it->second.snr_db != r.snr_db)
      throw Error("feature row for " + r.utterance_id + " has SNR " +
                  FormatSnr(it->second.snr_db) + " but the dataset says " +
                  FormatSnr(r.snr_db));
  }
  return index;
}

const char *ResponseName(Response r) {
  return r == Response::kSentInt ? "sent_int" : "gain";
}

Response ParseResponse(const std::string &name) {
  if (name == "sent_int") return Response::kSentInt;
  if (name == "gain") return Response::kGain;
  throw Error("unknown response '" + name + "' (expected sent_int or gain)");
}

PinSubset ParsePinSubset(const std::string &name) {
  for (PinSubset s : kAllSubsets)
    if (ToLower(name) == ToLower(PinSubsetName(s))) return s;
  throw Error("unknown subset '" + name +
              "' (expected PiN, PiN_both or PiN_either)");
}

const OlsCoefficient &RegressionResult::Coefficient(
    const std::string &name) const {
  for (const auto &c : fit.coefficients)
    if (c.name == name) return c;
  throw Error("no coefficient " + name);
}

namespace {

const FeatureVector &Lookup(const FeatureIndex &features,
                            const std::string &id) {
  auto it = features.find(id);
  if (it == features.end()) throw Error("no feature row for utterance " + id);
  return it->second;
}

std::vector<const PinPair *> PairsAt(const PinData &data, double snr_db,
                                     PinSubset subset) {
  std::vector<const PinPair *> out;
  for (const auto &p : data.pairs)
    if (p.snr_db == snr_db && p.In(subset)) out.push_back(&p);
  if (out.empty())
    throw Error(std::string("no ") + PinSubsetName(subset) +
                " pairs at SNR " + FormatSnr(snr_db));
  return out;
}

}  // namespace

RegressionResult RunRegression(const PinData &data, const FeatureIndex &features,
                               Response response, double snr_db,
                               PinSubset subset, bool scaled) {
  if (!data.scored()) throw Error("regression needs scored records");
  const std::vector<FeatureId> all = {FeatureId::kPhLen, FeatureId::kPpl,
                                      FeatureId::kStoi};
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  std::vector<std::string> names;
  RegressionResult res;
  res.response = response;
  res.snr_db = snr_db;
  res.subset = subset;
  res.scaled = scaled;

  auto pairs = PairsAt(data, snr_db, subset);
  if (response == Response::kSentInt) {
    for (FeatureId f : all) names.push_back(FeatureName(f));
    std::set<size_t> seen;
    for (const PinPair *p : pairs)
      for (size_t idx : {p->left, p->right}) {
        if (!seen.insert(idx).second) continue;
        const PinRecord &r = data.records[idx];
        x.push_back(Lookup(features, r.utterance_id).Row(all));
        y.push_back(r.SentIntValue());
      }
  } else {
    for (FeatureId f : all) names.push_back(std::string("diff.") + FeatureName(f));
    for (const PinPair *p : pairs) {
      const PinRecord &l = data.records[p->left], &r = data.records[p->right];
      auto d = MakeDiffFeatures(p->pair_id, Lookup(features, l.utterance_id),
                                Lookup(features, r.utterance_id), *p->gold,
                                l.SentIntValue(), r.SentIntValue());
      if (!d) {
        ++res.excluded_ties;
        continue;
      }
      std::vector<double> row;
      for (FeatureId f : all) row.push_back(d->Get(f));
      x.push_back(std::move(row));
      y.push_back(d->sent_int_gain);
    }
  }
  if (scaled) x = Scaler::Fit(x, names).Transform(x);
  res.num_rows = y.size();
  res.fit = OlsRegression(x, y, names);
  return res;
}

void WriteRegressionTsv(std::ostream &os, const RegressionResult &r) {
  os << "# response=" << ResponseName(r.response)
     << " snr=" << FormatSnr(r.snr_db) << " subset=" << PinSubsetName(r.subset)
     << " scaled=" << (r.scaled ? "true" : "false") << " n=" << r.num_rows
     << " excluded_ties=" << r.excluded_ties
     << " residual_df=" << FormatDouble(r.fit.residual_df)
     << " r_squared=" << FormatDouble(r.fit.r_squared) << "\n";
  os << "term\testimate\tstd_error\tt_value\tp_value\n";
  for (const auto &c : r.fit.coefficients)
    os << c.name << '\t' << FormatDouble(c.estimate) << '\t'
       << FormatDouble(c.std_error) << '\t' << FormatDouble(c.t_value) << '\t'
       << FormatDouble(c.p_value) << "\n";
}

std::vector<RankPair> BuildRankPairs(const PinData &data,
                                     const FeatureIndex &features,
                                     double snr_db, PinSubset subset) {
  if (!data.scored()) throw Error("ranking needs scored records");
  std::vector<RankPair> out;
  for (const PinPair *p : PairsAt(data, snr_db, subset)) {
    RankPair rp;
    rp.pair_id = p->pair_id;
    rp.left = Lookup(features, data.records[p->left].utterance_id);
    rp.right = Lookup(features, data.records[p->right].utterance_id);
    rp.gold = *p->gold;
    out.push_back(std::move(rp));
  }
  return out;
}

const EvalReport &RankingTable::At(double snr_db) const {
  for (size_t i = 0; i < snrs.size(); ++i)
    if (snrs[i] == snr_db) return reports[i];
  throw Error("ranking table has no SNR " + FormatSnr(snr_db));
}

RankingTable RunRankingTable(const PinData &data, const FeatureIndex &features,
                             const std::vector<double> &snrs, PinSubset subset,
                             const EvalOptions &opts) {
  RankingTable table;
  for (double snr : snrs) {
    table.snrs.push_back(snr);
    table.reports.push_back(EvaluateRanking(
        BuildRankPairs(data, features, snr, subset), TableFeatureSubsets(),
        opts));
  }
  return table;
}

void WriteRankingTableTsv(std::ostream &os, const RankingTable &table) {
  if (table.reports.empty()) throw Error("empty ranking table");
  os << "features";
  for (double snr : table.snrs) os << "\tSNR " << FormatSnr(snr);
  os << "\n";
  for (size_t row = 0; row < table.reports[0].rows.size(); ++row) {
    os << table.reports[0].rows[row].name;
    for (const auto &rep : table.reports) {
      const EvalRow &r = rep.rows[row];
      os << '\t' << FormatFixed(r.ci.mean, 1) << " +/- "
         << FormatFixed(r.ci.halfwidth, 1) << (r.significant() ? "*" : "");
    }
    os << "\n";
  }
}

void WriteRankingRunsTsv(std::ostream &os, const RankingTable &table) {
  os << "snr\tfeatures\trun\taccuracy\n";
  for (size_t s = 0; s < table.snrs.size(); ++s)
    for (const auto &r : table.reports[s].rows)
      for (size_t k = 0; k < r.accuracies.size(); ++k)
        os << FormatSnr(table.snrs[s]) << '\t' << r.name << '\t' << k + 1
           << '\t' << FormatDouble(r.accuracies[k]) << "\n";
}

namespace {

std::string OptionalStat(const std::optional<TTestResult> &t,
                         double TTestResult::*field) {
  return t ? FormatDouble((*t).*field) : "NA";
}

std::ofstream OpenOutput(const fs::path &path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

}  // namespace

void WriteSummaryTsv(std::ostream &os, const PinSummary &summary) {
  os << "subset\tsnr\tpairs\tutterances\tmean_sent_int\tmean_abs_diff\t"
        "ties\tt\tdf\tp\toracle_gain\n";
  for (const auto &c : summary.conditions)
    os << PinSubsetName(c.subset) << '\t' << FormatSnr(c.snr_db) << '\t'
       << c.num_pairs << '\t' << c.num_utterances << '\t'
       << FormatDouble(c.mean_sent_int) << '\t'
       << FormatDouble(c.mean_abs_diff) << '\t' << c.num_ties << '\t'
       << OptionalStat(c.diff_test, &TTestResult::statistic) << '\t'
       << OptionalStat(c.diff_test, &TTestResult::df) << '\t'
       << OptionalStat(c.diff_test, &TTestResult::p_value) << '\t'
       << FormatDouble(c.oracle_gain) << "\n";
}

std::vector<std::string> WriteAnalysisFiles(const std::string &dir,
                                            const PinData &data,
                                            const PinSummary &summary) {
  fs::create_directories(dir);
  fs::path base(dir);
  std::vector<std::string> written;
  {
    fs::path p = base / "sent-int.tsv";
    auto out = OpenOutput(p);
    out << "utterance_id\ttriplet_id\tposition\tsnr\tsent_int_exact\t"
           "sent_int\n";
    for (const auto &r : data.records)
      out << r.utterance_id << '\t' << r.triplet_id << '\t' << r.position
          << '\t' << FormatSnr(r.snr_db) << '\t' << r.sent_int->numerator
          << '/' << r.sent_int->denominator << '\t'
          << FormatDouble(r.SentIntValue()) << "\n";
    written.push_back(p.string());
  }
  {
    fs::path p = base / "pairs.tsv";
    auto out = OpenOutput(p);
    out << "pair_id\tsnr\tleft\tright\tsent_int_left\tsent_int_right\t"
           "abs_diff\tgold\tin_both\tin_either\n";
    for (const auto &pr : data.pairs) {
      const auto &l = data.records[pr.left], &r = data.records[pr.right];
      double a = l.SentIntValue(), b = r.SentIntValue();
      out << pr.pair_id << '\t' << FormatSnr(pr.snr_db) << '\t'
          << l.utterance_id << '\t' << r.utterance_id << '\t'
          << FormatDouble(a) << '\t' << FormatDouble(b) << '\t'
          << FormatDouble(std::fabs(a - b)) << '\t'
          << PairOrderName(*pr.gold) << '\t' << (pr.in_both() ? 1 : 0)
          << '\t' << (pr.in_either() ? 1 : 0) << "\n";
    }
    written.push_back(p.string());
  }
  {
    fs::path p = base / "summary.tsv";
    auto out = OpenOutput(p);
    WriteSummaryTsv(out, summary);
    written.push_back(p.string());
  }
  {
    fs::path p = base / "snr-tests.tsv";
    auto out = OpenOutput(p);
    out << "subset\tsnr_noisier\tsnr_cleaner\tmean_noisier\tmean_cleaner\t"
           "t\tdf\tp\n";
    for (const auto &a : summary.adjacent)
      out << PinSubsetName(a.subset) << '\t' << FormatSnr(a.snr_noisier)
          << '\t' << FormatSnr(a.snr_cleaner) << '\t'
          << OptionalStat(a.welch, &TTestResult::mean_x) << '\t'
          << OptionalStat(a.welch, &TTestResult::mean_y) << '\t'
          << OptionalStat(a.welch, &TTestResult::statistic) << '\t'
          << OptionalStat(a.welch, &TTestResult::df) << '\t'
          << OptionalStat(a.welch, &TTestResult::p_value) << "\n";
    written.push_back(p.string());
  }
  {
    fs::path p = base / "histogram.csv";
    auto out = OpenOutput(p);
    out << "subset,snr,bin_low,bin_high,count\n";
    for (const auto &c : summary.conditions)
      for (size_t b = 0; b < c.histogram.size(); ++b)
        out << PinSubsetName(c.subset) << ',' << FormatSnr(c.snr_db) << ','
            << FormatFixed(0.05 * b, 2) << ',' << FormatFixed(0.05 * (b + 1), 2)
            << ',' << c.histogram[b] << "\n";
    written.push_back(p.string());
  }
  return written;
}

std::string FormatFixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  std::string s = buf;
  if (s.size() > 1 && s[0] == '-' &&
      s.find_first_not_of("-0.") == std::string::npos)
    s.erase(0, 1);  // no "-0.0"
  return s;
}

std::string FormatSnr(double snr_db) { return FormatDouble(snr_db); }

}  // namespace pararank
