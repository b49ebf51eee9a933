// features/features-test.cc

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
#include <sstream>

#include "base/pararank-error.h"
#include "base/random.h"
#include "features/diff-features.h"
#include "features/feature-vector.h"
#include "features/scaler.h"
#include "lm/tokenizer.h"

namespace pararank {
namespace {

const Lexicon &CmuLexicon() {
  static const Lexicon lex =
      Lexicon::Load(std::string(PARARANK_DATA_DIR) + "/lexicon/cmudict.dict");
  return lex;
}

Waveform Speechy(uint64_t seed, size_t n) {
  Rng rng(seed);
  std::vector<double> s(n);
  for (size_t i = 0; i < n; ++i) {
    double env = std::sin(3.14159265358979 * 3.0 * i / 10000.0);
    s[i] = 0.2 * env * env * rng.Gaussian();
  }
  return Waveform(10000, s);
}

FeatureVector Fv(std::string id, double snr, int ph, double ppl, double stoi) {
  FeatureVector v;
  v.utterance_id = std::move(id);
  v.snr_db = snr;
  v.ph_len = ph;
  v.ppl = ppl;
  v.stoi = stoi;
  return v;
}

TEST(FeatureNames, ParseAndFormat) {
  EXPECT_EQ(ParseFeatureName("stoi"), FeatureId::kStoi);
  EXPECT_EQ(ParseFeatureName("PHLEN"), FeatureId::kPhLen);
  auto list = ParseFeatureList("phLen,ppl,STOI");
  EXPECT_EQ(FeatureListName(list), "phLen+ppl+STOI");
  EXPECT_THROW(ParseFeatureList("ppl,ppl"), Error);
  EXPECT_THROW(ParseFeatureName("snr"), Error);
}

TEST(ExtractFeatures, TableThreeTargetAndSilentNoise) {
  NGramModel lm = NGramModel::Train({Tokenize("you never hear about it")},
                                    NGramOptions{});
  PplSource src(&lm);
  Waveform clean = Speechy(1, 20000);
  const std::string text = "You never hear about it really in the big ones.";
  FeatureVector v =
      ExtractFeatures("u1", text, clean, clean, src, CmuLexicon(), -5.0);
  EXPECT_EQ(v.ph_len, 30);
  EXPECT_NEAR(v.stoi, 1.0, 1e-6);
  EXPECT_EQ(v.ppl, lm.Perplexity(Tokenize(text)));
  EXPECT_EQ(v.snr_db, -5.0);
}

TEST(ExtractFeatures, UniformUnigramPplIsVocabularySize) {
  NGramOptions opts;
  opts.order = 1;
  NGramModel lm = NGramModel::Train({Tokenize("a b c d e")}, opts);
  PplSource src(&lm);
  FeatureVector v = ExtractFeatures("u", "e d unseen", 0.5, src, CmuLexicon(), 0);
  EXPECT_NEAR(v.ppl, lm.num_predictable(), 1e-12);
  EXPECT_EQ(lm.num_predictable(), 7);
}

TEST(ExtractFeatures, ExternalPpl) {
  PplSource src(std::vector<PplRecord>{{"u1", 42.5}});
  EXPECT_TRUE(src.external());
  EXPECT_EQ(ExtractFeatures("u1", "hello", 0.9, src, CmuLexicon(), 5).ppl, 42.5);
  EXPECT_THROW(ExtractFeatures("u2", "hello", 0.9, src, CmuLexicon(), 5),
               Error);
}

TEST(ExtractFeatures, ValidatesComponents) {
  PplSource src(std::vector<PplRecord>{{"u1", 42.5}});
  EXPECT_THROW(ExtractFeatures("u1", "...", 0.9, src, CmuLexicon(), 5), Error);
  EXPECT_THROW(ExtractFeatures("u1", "hello", 1.5, src, CmuLexicon(), 5),
               Error);
}

TEST(Scaler, TwoPointsMapToPlusMinusOne) {
  Scaler s = Scaler::Fit({{1.0}, {3.0}}, {"x"});
  EXPECT_EQ(s.mean()[0], 2.0);
  EXPECT_EQ(s.std()[0], 1.0);
  EXPECT_EQ(s.Transform(std::vector<double>{1.0})[0], -1.0);
  EXPECT_EQ(s.Transform(std::vector<double>{3.0})[0], 1.0);
}

TEST(Scaler, FittedSplitHasZeroMeanUnitStd) {
  Rng rng(3);
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < 57; ++i)
    rows.push_back({10 + 5 * rng.Gaussian(), 1e3 * rng.Uniform(), rng.Uniform()});
  Scaler s = Scaler::Fit(rows, {"a", "b", "c"});
  auto z = s.Transform(rows);
  for (size_t j = 0; j < 3; ++j) {
    double m = 0, v = 0;
    for (const auto &r : z) m += r[j];
    m /= z.size();
    for (const auto &r : z) v += (r[j] - m) * (r[j] - m);
    EXPECT_NEAR(m, 0.0, 1e-9);
    EXPECT_NEAR(std::sqrt(v / z.size()), 1.0, 1e-9);
  }
  // Monotone: order of any column is preserved.
  for (size_t i = 1; i < rows.size(); ++i)
    for (size_t j = 0; j < 3; ++j)
      EXPECT_EQ(rows[i][j] < rows[i - 1][j], z[i][j] < z[i - 1][j]);
}

TEST(Scaler, HeldOutSplitKeepsTrainingParameters) {
  Scaler s = Scaler::Fit({{0.0}, {2.0}, {4.0}}, {"x"});
  auto z = s.Transform(std::vector<std::vector<double>>{{10.0}, {12.0}});
  EXPECT_GT(z[0][0] + z[1][0], 1.0);
}

TEST(Scaler, Errors) {
  try {
    Scaler::Fit({{1.0, 5.0}, {2.0, 5.0}}, {"phLen", "ppl"});
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("ppl"), std::string::npos);
  }
  EXPECT_THROW(Scaler::Fit({{1.0}}, {"x"}), Error);
  EXPECT_THROW(Scaler::Fit({{1.0}, {2.0, 3.0}}, {"x"}), Error);
  Scaler s = Scaler::Fit({{1.0}, {2.0}}, {"x"});
  EXPECT_THROW(s.Transform(std::vector<double>{1.0, 2.0}), Error);
}

TEST(DiffFeatures, MoreMinusLess) {
  FeatureVector a = Fv("a", -5, 20, 50, 0.6), b = Fv("b", -5, 25, 80, 0.4);
  auto d = MakeDiffFeatures("p", a, b, PairOrder::kLeftMore, 0.8, 0.6);
  ASSERT_TRUE(d.has_value());
  EXPECT_NEAR(d->sent_int_gain, 0.2, 1e-15);
  EXPECT_EQ(d->diff_ph_len, -5);
  EXPECT_EQ(d->diff_ppl, -30);
  EXPECT_GT(d->diff_stoi, 0.0);  // more intelligible has higher STOI
}

TEST(DiffFeatures, IdenticalPairGivesZeros) {
  FeatureVector a = Fv("a", 0, 20, 50, 0.6);
  auto d = MakeDiffFeatures("p", a, a, PairOrder::kLeftMore, 0.5, 0.5);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->diff_ph_len, 0);
  EXPECT_EQ(d->diff_ppl, 0);
  EXPECT_EQ(d->diff_stoi, 0);
  EXPECT_EQ(d->sent_int_gain, 0);
  EXPECT_FALSE(MakeDiffFeatures("p", a, a, PairOrder::kTie, 0.5, 0.5));
}

TEST(DiffFeatures, SwapInvariantAfterGoldResolution) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    FeatureVector a = Fv("a", 5, 1 + rng.UniformInt(40), 1 + 100 * rng.Uniform(),
                         rng.Uniform());
    FeatureVector b = Fv("b", 5, 1 + rng.UniformInt(40), 1 + 100 * rng.Uniform(),
                         rng.Uniform());
    double sa = rng.Uniform(), sb = rng.Uniform();
    PairOrder gold = sa > sb ? PairOrder::kLeftMore : PairOrder::kRightMore;
    auto d1 = MakeDiffFeatures("p", a, b, gold, sa, sb);
    auto d2 = MakeDiffFeatures("p", b, a, SwapOrder(gold), sb, sa);
    ASSERT_TRUE(d1 && d2);
    EXPECT_EQ(d1->diff_ph_len, d2->diff_ph_len);
    EXPECT_EQ(d1->diff_ppl, d2->diff_ppl);
    EXPECT_EQ(d1->diff_stoi, d2->diff_stoi);
    EXPECT_EQ(d1->sent_int_gain, d2->sent_int_gain);
    EXPECT_GE(d1->sent_int_gain, 0.0);
  }
}

TEST(DiffFeatures, Errors) {
  FeatureVector a = Fv("a", 0, 20, 50, 0.6), b = Fv("b", 5, 20, 50, 0.6);
  EXPECT_THROW(MakeDiffFeatures("p", a, b, PairOrder::kLeftMore, 1, 0), Error);
  b.snr_db = 0;
  EXPECT_THROW(MakeDiffFeatures("p", a, b, PairOrder::kLeftMore, 0.2, 0.4),
               Error);
  EXPECT_EQ(SwapOrder(PairOrder::kTie), PairOrder::kTie);
  EXPECT_EQ(ParsePairOrder(PairOrderName(PairOrder::kRightMore)),
            PairOrder::kRightMore);
}

TEST(FeatureTable, RoundTrip) {
  std::vector<FeatureVector> v{Fv("t1:s1", 5, 30, 123.456789, 0.987654321),
                               Fv("t1:s2", -5, 7, 1.0 / 3, -0.25)};
  std::ostringstream os;
  WriteFeatureTable(os, v);
  std::istringstream is(os.str());
  auto back = ParseFeatureTable(is, "f.csv");
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].utterance_id, "t1:s1");
  EXPECT_EQ(back[0].ppl, v[0].ppl);
  EXPECT_EQ(back[1].ppl, v[1].ppl);
  EXPECT_EQ(back[1].stoi, v[1].stoi);
  EXPECT_EQ(back[1].snr_db, -5);
}

TEST(FeatureTable, Errors) {
  std::istringstream dup(
      "utterance_id,snr,phLen,ppl,stoi\nu,5,3,2,0.5\nu,5,3,2,0.5\n");
  EXPECT_THROW(ParseFeatureTable(dup, "f"), Error);
  std::istringstream bad("utterance_id,snr,phLen,ppl,stoi\nu,5,3,-2,0.5\n");
  EXPECT_THROW(ParseFeatureTable(bad, "f"), Error);
  std::istringstream missing("utterance_id,snr,phLen,ppl\nu,5,3,2\n");
  EXPECT_THROW(ParseFeatureTable(missing, "f"), Error);
}

}  // namespace
}  // namespace pararank
