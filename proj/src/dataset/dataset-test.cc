// dataset/dataset-test.cc

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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>

#include "base/pararank-error.h"
#include "dataset/pin-analysis.h"
#include "dataset/pin-data.h"
#include "synthetic-pin.h"

namespace pararank {
namespace {

namespace fs = std::filesystem;

const Lexicon &CmuLexicon() {
  static const Lexicon lex =
      Lexicon::Load(std::string(PARARANK_DATA_DIR) + "/lexicon/cmudict.dict");
  return lex;
}

Table Tsv(const std::string &text, const std::string &name) {
  std::istringstream is(text);
  return Table::Parse(is, '\t', name);
}

const char kHeader[] =
    "utterance_id\ttriplet_id\tposition\tsnr_db\ttext\ttranscript_1\t"
    "transcript_2\n";

// One triplet at SNR -5 with hand-chosen transcripts.
PinData TinyPin() {
  std::string rec = std::string(kHeader) +
                    "u1\tt\ts1\t-5\tthe big dog\tthe big dog\tthe big dog\n"
                    "u2\tt\ts2\t-5\ta big cat\t(...)\t(...) (...)\n"
                    "u3\tt\ts3\t-5\tthe dog\tthe dog\tthe dog\n";
  std::string ann =
      "pair_id\tannotator_a\tannotator_b\nt:s1-s2\t1\t1\nt:s2-s3\t0\t1\n"
      "t:s1-s3\t0\t0\n";
  PinLoadOptions opts;
  opts.check_counts = false;
  return BuildPin(Tsv(rec, "records.tsv"), Tsv(ann, "annotations.tsv"), opts);
}

std::string TempDir(const std::string &name) {
  fs::path p = fs::temp_directory_path() / ("pararank-dataset-" + name);
  fs::remove_all(p);
  return p.string();
}

TEST(BuildPin, PairsPerTriplet) {
  PinData d = TinyPin();
  ASSERT_EQ(d.records.size(), 3u);
  ASSERT_EQ(d.pairs.size(), 3u);
  EXPECT_EQ(d.pairs[0].pair_id, "t:s1-s2");
  EXPECT_EQ(d.pairs[1].pair_id, "t:s2-s3");
  EXPECT_EQ(d.pairs[2].pair_id, "t:s1-s3");
  EXPECT_EQ(d.records[d.pairs[1].left].utterance_id, "u2");
  EXPECT_TRUE(d.pairs[0].in_both());
  EXPECT_TRUE(d.pairs[1].in_either());
  EXPECT_FALSE(d.pairs[1].in_both());
  EXPECT_FALSE(d.pairs[2].in_either());
  EXPECT_EQ(d.Snrs(), std::vector<double>{-5});
  EXPECT_FALSE(d.scored());
}

TEST(ScoreRecords, PerfectAndPlaceholderTranscripts) {
  PinData d = TinyPin();
  ScoreRecords(&d, CmuLexicon(), 2);
  EXPECT_EQ(d.Record("u1").SentIntValue(), 1.0);
  EXPECT_EQ(d.Record("u2").SentIntValue(), 0.0);
  EXPECT_EQ(d.Record("u3").SentIntValue(), 1.0);
  EXPECT_EQ(*d.pairs[0].gold, PairOrder::kLeftMore);
  EXPECT_EQ(*d.pairs[1].gold, PairOrder::kRightMore);
  EXPECT_EQ(*d.pairs[2].gold, PairOrder::kTie);
}

TEST(GoldOrder, ExactTiesAndAntisymmetry) {
  Fraction a{4, 6}, b{2, 3}, c{5, 6};
  EXPECT_EQ(GoldOrder(a, b), PairOrder::kTie);
  EXPECT_EQ(GoldOrder(c, a), PairOrder::kLeftMore);
  EXPECT_EQ(GoldOrder(a, c), PairOrder::kRightMore);
  EXPECT_EQ(SwapOrder(GoldOrder(c, a)), GoldOrder(a, c));
}

TEST(BuildPin, SchemaErrors) {
  std::string ann = "pair_id\tannotator_a\tannotator_b\n";
  PinLoadOptions loose;
  loose.check_counts = false;
  // Missing s3.
  std::string rec = std::string(kHeader) + "u1\tt\ts1\t0\ta\tx\ty\n" +
                    "u2\tt\ts2\t0\tb\tx\ty\n";
  EXPECT_THROW(BuildPin(Tsv(rec, "r"), Tsv(ann, "a"), loose), Error);
  // Mixed SNR inside a triplet.
  rec = std::string(kHeader) + "u1\tt\ts1\t0\ta\tx\ty\n" +
        "u2\tt\ts2\t5\tb\tx\ty\n" + "u3\tt\ts3\t0\tb\tx\ty\n";
  EXPECT_THROW(BuildPin(Tsv(rec, "r"), Tsv(ann, "a"), loose), Error);
  // No annotation rows for the pairs.
  rec = std::string(kHeader) + "u1\tt\ts1\t0\ta\tx\ty\n" +
        "u2\tt\ts2\t0\tb\tx\ty\n" + "u3\tt\ts3\t0\tb\tx\ty\n";
  EXPECT_THROW(BuildPin(Tsv(rec, "r"), Tsv(ann, "a"), loose), Error);
  // Bad position, missing column, duplicate id.
  EXPECT_THROW(BuildPin(Tsv(std::string(kHeader) + "u1\tt\ts4\t0\ta\tx\ty\n", "r"),
                        Tsv(ann, "a"), loose),
               Error);
  EXPECT_THROW(BuildPin(Tsv("utterance_id\ttext\nu\tx\n", "r"), Tsv(ann, "a"),
                        loose),
               Error);
  // Strict mode needs six transcripts.
  EXPECT_THROW(BuildPin(Tsv(rec, "r"), Tsv(ann, "a")), Error);
}

TEST(LoadPin, EmptyDirectoryFails) {
  std::string dir = TempDir("empty");
  fs::create_directories(dir);
  EXPECT_THROW(LoadPin(dir), Error);
  EXPECT_THROW(LoadPin(dir + "/does-not-exist"), Error);
}

TEST(LoadPin, PublishedCountsOnPinShapedCorpus) {
  std::string dir = TempDir("counts");
  SyntheticPinOptions opts;
  opts.with_features = opts.with_lm_corpus = false;
  WriteSyntheticPin(dir, opts);
  PinData d = LoadPin(dir);
  EXPECT_EQ(d.pairs.size(), 900u);
  const double snrs[] = {5, 0, -5};
  const size_t both[] = {104, 123, 105}, either[] = {195, 205, 196};
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(CountPairs(d, PinSubset::kAll, snrs[i]), 300u);
    EXPECT_EQ(CountPairs(d, PinSubset::kBoth, snrs[i]), both[i]);
    EXPECT_EQ(CountPairs(d, PinSubset::kEither, snrs[i]), either[i]);
  }
  // Pair sets are disjoint across SNR: every triplet gives exactly 3 pairs.
  std::map<std::string, int> per_triplet;
  for (const auto &p : d.pairs) ++per_triplet[d.records[p.left].triplet_id];
  for (const auto &[t, n] : per_triplet) EXPECT_EQ(n, 3) << t;
}

TEST(LoadPin, CountMismatchReportsExpectedAndFound) {
  std::string dir = TempDir("mismatch");
  SyntheticPinOptions opts;
  opts.published_annotations = false;
  opts.with_features = opts.with_lm_corpus = false;
  WriteSyntheticPin(dir, opts);
  try {
    LoadPin(dir);
    FAIL();
  } catch (const Error &e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("PiN_both at 5 dB: expected 104, found 100"),
              std::string::npos)
        << msg;
  }
  PinLoadOptions loose;
  loose.check_counts = false;
  EXPECT_EQ(LoadPin(dir, loose).pairs.size(), 900u);
}

TEST(AbsDiffHistogram, Bins) {
  auto h = AbsDiffHistogram({0.0, 0.04999, 0.05, 0.5, 0.99, 1.0});
  ASSERT_EQ(h.size(), 20u);
  EXPECT_EQ(h[0], 2);
  EXPECT_EQ(h[1], 1);
  EXPECT_EQ(h[10], 1);
  EXPECT_EQ(h[19], 2);
  EXPECT_THROW(AbsDiffHistogram({1.5}), Error);
}

TEST(OracleGain, Examples) {
  EXPECT_EQ(OracleGain({{0.5, 0.5}, {0.8, 0.8}}), 0.0);
  EXPECT_DOUBLE_EQ(OracleGain({{1.0, 0.5}, {0.5, 1.0}}), 1.0);
  EXPECT_DOUBLE_EQ(OracleGain({{0.9, 0.6}, {0.6, 0.6}}), 0.3 / 1.2);
  EXPECT_TRUE(std::isinf(OracleGain({{1.0, 0.0}})));
}

TEST(SummarizePin, TinyCorpus) {
  PinData d = TinyPin();
  ScoreRecords(&d, CmuLexicon());
  PinSummary s = SummarizePin(d);
  const ConditionSummary &all = s.Get(PinSubset::kAll, -5);
  EXPECT_EQ(all.num_pairs, 3u);
  EXPECT_EQ(all.num_utterances, 3u);
  EXPECT_NEAR(all.mean_sent_int, 2.0 / 3, 1e-15);
  EXPECT_NEAR(all.mean_abs_diff, 2.0 / 3, 1e-15);
  EXPECT_EQ(all.num_ties, 1u);
  EXPECT_EQ(all.histogram[19], 2);
  EXPECT_EQ(all.histogram[0], 1);
  // more: 1, 1, 1; less: 0, 0, 1.
  EXPECT_DOUBLE_EQ(all.oracle_gain, 2.0);
  const ConditionSummary &both = s.Get(PinSubset::kBoth, -5);
  EXPECT_EQ(both.num_pairs, 1u);
  EXPECT_FALSE(both.diff_test.has_value());
  EXPECT_EQ(s.Get(PinSubset::kEither, -5).num_pairs, 2u);
}

TEST(SummarizePin, AllTiesGiveZeroDifference) {
  std::string rec = std::string(kHeader) +
                    "u1\tt\ts1\t0\tthe dog\tthe dog\t(...)\n"
                    "u2\tt\ts2\t0\tbig cat\t(...)\tbig cat\n"
                    "u3\tt\ts3\t0\tred car\tred car\t(...)\n";
  std::string ann =
      "pair_id\tannotator_a\tannotator_b\nt:s1-s2\t1\t1\nt:s2-s3\t1\t1\n"
      "t:s1-s3\t1\t1\n";
  PinLoadOptions loose;
  loose.check_counts = false;
  PinData d = BuildPin(Tsv(rec, "r"), Tsv(ann, "a"), loose);
  ScoreRecords(&d, CmuLexicon());
  PinSummary s = SummarizePin(d);
  EXPECT_EQ(s.Get(PinSubset::kAll, 0).mean_abs_diff, 0.0);
  EXPECT_EQ(s.Get(PinSubset::kAll, 0).oracle_gain, 0.0);
  EXPECT_EQ(s.Get(PinSubset::kAll, 0).num_ties, 3u);
}

TEST(SummarizePin, SyntheticCorpusProperties) {
  std::string dir = TempDir("summary");
  SyntheticPinOptions opts;
  opts.with_features = opts.with_lm_corpus = false;
  WriteSyntheticPin(dir, opts);
  PinData d = LoadPin(dir);
  ScoreRecords(&d, CmuLexicon());
  PinSummary s = SummarizePin(d);
  EXPECT_EQ(s.conditions.size(), 9u);
  EXPECT_EQ(s.adjacent.size(), 6u);
  for (const auto &c : s.conditions) {
    int total = 0;
    for (int b : c.histogram) total += b;
    EXPECT_EQ(static_cast<size_t>(total), c.num_pairs);
    EXPECT_GE(c.mean_abs_diff, 0.0);
    EXPECT_LE(c.mean_abs_diff, 1.0);
    EXPECT_GE(c.oracle_gain, 0.0);
  }
  // The generator makes the noisiest level hardest.
  EXPECT_LT(s.Get(PinSubset::kAll, -5).mean_sent_int,
            s.Get(PinSubset::kAll, 5).mean_sent_int);
  EXPECT_GT(s.Get(PinSubset::kAll, -5).mean_abs_diff,
            s.Get(PinSubset::kAll, 5).mean_abs_diff);
  // Swapping every pair leaves all statistics unchanged.
  PinData swapped = d;
  for (auto &p : swapped.pairs) {
    std::swap(p.left, p.right);
    p.gold = SwapOrder(*p.gold);
  }
  PinSummary t = SummarizePin(swapped);
  for (size_t i = 0; i < s.conditions.size(); ++i) {
    EXPECT_EQ(s.conditions[i].mean_abs_diff, t.conditions[i].mean_abs_diff);
    EXPECT_EQ(s.conditions[i].oracle_gain, t.conditions[i].oracle_gain);
  }
}

}  // namespace
}  // namespace pararank
