// phonetics/phonetics-test.cc

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

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "base/pararank-error.h"
#include "base/random.h"
#include "phonetics/edit-distance.h"
#include "phonetics/g2p.h"
#include "phonetics/intelligibility.h"
#include "phonetics/lexicon.h"

namespace pararank {
namespace {

const char kTarget[] = "you never hear about it really in the big ones";
const char kTargetPh[] =
    "Y UW - N EH V ER - HH IY R - AH B AW T - IH T - R IH L IY - IH N - DH "
    "AH - B IH G - W AH N Z";
const char kP1Ph[] = "IH T - R IH L IY - IH Z - DH AH - B IH G - W AH N";
const char kP2Ph[] =
    "HH IY - W EH N T - AH B AW T - IH T - R IH L IY - IH N - DH AH - B IH "
    "G - W AH N";

const Lexicon &CmuLexicon() {
  static const Lexicon lex =
      Lexicon::Load(std::string(PARARANK_DATA_DIR) + "/lexicon/cmudict.dict");
  return lex;
}

// Top-down memoised recursion straight from the recurrence; independent of
// the two-row table in LevenshteinDistance.
size_t RecursiveLevenshtein(const std::vector<Phoneme> &a,
                            const std::vector<Phoneme> &b) {
  std::map<std::pair<size_t, size_t>, size_t> memo;
  std::function<size_t(size_t, size_t)> rec = [&](size_t i, size_t j) {
    if (i == 0) return j;
    if (j == 0) return i;
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    size_t best = std::min({rec(i - 1, j) + 1, rec(i, j - 1) + 1,
                            rec(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1)});
    memo[key] = best;
    return best;
  };
  return rec(a.size(), b.size());
}

// Plain exponential recursion, no memo.
size_t NaiveLevenshtein(const std::vector<int> &a, size_t i,
                        const std::vector<int> &b, size_t j) {
  if (i == 0) return j;
  if (j == 0) return i;
  return std::min({NaiveLevenshtein(a, i - 1, b, j) + 1,
                   NaiveLevenshtein(a, i, b, j - 1) + 1,
                   NaiveLevenshtein(a, i - 1, b, j - 1) +
                       (a[i - 1] == b[j - 1] ? 0 : 1)});
}

PhonemeSequence RandomSequence(Rng *rng, size_t max_len, int alphabet) {
  PhonemeSequence s;
  size_t len = rng->UniformInt(max_len + 1);
  for (size_t i = 0; i < len; ++i)
    s.phonemes.push_back(static_cast<Phoneme>(rng->UniformInt(alphabet)));
  return s;
}

TEST(Phoneme, ParseStripsStressAndDashes) {
  PhonemeSequence s = PhonemeSequence::FromString("AH0 - B IH1 G");
  EXPECT_EQ(s.ToString(), "AH B IH G");
  EXPECT_FALSE(ParsePhoneme("AH0").has_value());
  EXPECT_THROW(PhonemeSequence::FromString("AH XX"), Error);
  EXPECT_EQ(PhonemeName(Phoneme::kZH), "ZH");
}

TEST(Lexicon, ParsesCmuFormat) {
  std::istringstream is(
      ";;; comment\n"
      "READ  R IY1 D\n"
      "READ(2)  R EH1 D\n"
      "aalborg AO1 L B AO0 R G # place, danish\n");
  Lexicon lex = Lexicon::Parse(is, "mem");
  ASSERT_NE(lex.Find("Read."), nullptr);
  EXPECT_EQ(lex.Find("read")->size(), 3u);
  EXPECT_EQ((*lex.Find("read"))[1], Phoneme::kIY);  // first pronunciation
  EXPECT_EQ(lex.Find("aalborg")->size(), 6u);
  EXPECT_EQ(lex.Find("missing"), nullptr);
}

TEST(Lexicon, RejectsBadPhoneme) {
  std::istringstream is("word W QQ1\n");
  EXPECT_THROW(Lexicon::Parse(is, "mem"), Error);
}

TEST(LetterRules, LongestMatchAndAnchors) {
  std::istringstream is("t T\nh HH\nth TH\ne EH\ne$ -\n");
  LetterRules rules = LetterRules::Parse(is, "mem");
  PhonemeSequence s{rules.Apply("thee"), ""};
  EXPECT_EQ(s.ToString(), "TH EH");
  EXPECT_EQ((PhonemeSequence{rules.Apply("teh"), ""}.ToString()), "T EH HH");
}

TEST(LetterRules, DefaultTableCoversEveryLetter) {
  const LetterRules &rules = LetterRules::Default();
  for (char c = 'a'; c <= 'z'; ++c) {
    std::string w(1, c);
    w += "b";  // avoid word-final anchors
    EXPECT_FALSE(rules.Apply(w).empty()) << c;
  }
}

TEST(G2p, TableThreeTarget) {
  PhonemeSequence t = G2p(kTarget, CmuLexicon());
  EXPECT_EQ(t.size(), 30u);
  EXPECT_EQ(t.phonemes, PhonemeSequence::FromString(kTargetPh).phonemes);
}

TEST(G2p, TableThreePerceived) {
  EXPECT_EQ(G2p("it really is the big one", CmuLexicon()).phonemes,
            PhonemeSequence::FromString(kP1Ph).phonemes);
  EXPECT_EQ(G2p("he went about it really in the big one", CmuLexicon()).phonemes,
            PhonemeSequence::FromString(kP2Ph).phonemes);
  EXPECT_EQ(G2p("it really is the big one", CmuLexicon()).size(), 16u);
}

TEST(G2p, EmptyPunctuationAndPlaceholders) {
  EXPECT_TRUE(G2p("", CmuLexicon()).empty());
  EXPECT_TRUE(G2p("(...) ... (...)", CmuLexicon()).empty());
  EXPECT_EQ(G2p("It (...) the BIG ones!", CmuLexicon()).phonemes,
            G2p("it the big ones", CmuLexicon()).phonemes);
  EXPECT_EQ(G2p("hard-fought", CmuLexicon()).phonemes,
            G2p("hard fought", CmuLexicon()).phonemes);
}

TEST(G2p, NumbersAndOovAreDeterministic) {
  EXPECT_EQ(SpellNumber("1995"),
            (std::vector<std::string>{"one", "thousand", "nine", "hundred",
                                      "ninety", "five"}));
  EXPECT_EQ(SpellNumber("0"), std::vector<std::string>{"zero"});
  EXPECT_EQ(G2p("2 dogs", CmuLexicon()).phonemes,
            G2p("two dogs", CmuLexicon()).phonemes);
  PhonemeSequence a = G2p("zorblaxing", CmuLexicon());
  PhonemeSequence b = G2p("zorblaxing", CmuLexicon());
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a.phonemes, b.phonemes);
}

TEST(G2p, ContractionsUseLexicon) {
  const auto *dont = CmuLexicon().Find("don't");
  ASSERT_NE(dont, nullptr);
  EXPECT_EQ(G2p("Don't", CmuLexicon()).phonemes, *dont);
  EXPECT_EQ(G2p("don\xE2\x80\x99t", CmuLexicon()).phonemes, *dont);
}

TEST(Levenshtein, TableThreeDistances) {
  auto t = PhonemeSequence::FromString(kTargetPh);
  auto p1 = PhonemeSequence::FromString(kP1Ph);
  auto p2 = PhonemeSequence::FromString(kP2Ph);
  EXPECT_EQ(LevenshteinDistance(t, t), 0u);
  EXPECT_EQ(LevenshteinDistance(t, p1), 15u);
  EXPECT_EQ(RecursiveLevenshtein(t.phonemes, p1.phonemes), 15u);
  EXPECT_EQ(LevenshteinDistance(t, p2), 9u);
  EXPECT_EQ(RecursiveLevenshtein(t.phonemes, p2.phonemes), 9u);
}

TEST(Levenshtein, MatchesNaiveRecursionOnRandomShortSequences) {
  Rng rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    PhonemeSequence a = RandomSequence(&rng, 6, 3);
    PhonemeSequence b = RandomSequence(&rng, 6, 3);
    std::vector<int> ai, bi;
    for (Phoneme p : a.phonemes) ai.push_back(static_cast<int>(p));
    for (Phoneme p : b.phonemes) bi.push_back(static_cast<int>(p));
    ASSERT_EQ(LevenshteinDistance(a, b),
              NaiveLevenshtein(ai, ai.size(), bi, bi.size()));
  }
}

TEST(Levenshtein, MetricProperties) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    PhonemeSequence a = RandomSequence(&rng, 12, 5);
    PhonemeSequence b = RandomSequence(&rng, 12, 5);
    PhonemeSequence c = RandomSequence(&rng, 12, 5);
    size_t ab = LevenshteinDistance(a, b);
    EXPECT_EQ(ab, LevenshteinDistance(b, a));
    EXPECT_EQ(ab == 0, a.phonemes == b.phonemes);
    EXPECT_LE(LevenshteinDistance(a, c), ab + LevenshteinDistance(b, c));
    EXPECT_LE(ab, std::max(a.size(), b.size()));
  }
}

TEST(RecogRate, TableThreeRates) {
  auto t = PhonemeSequence::FromString(kTargetPh);
  EXPECT_EQ(RecogRate(t, PhonemeSequence::FromString(kP1Ph)), 0.5);
  EXPECT_EQ(RecogRate(t, PhonemeSequence::FromString(kP2Ph)), 0.7);
  EXPECT_EQ(RecogRate(t, PhonemeSequence{}), 0.0);
  EXPECT_EQ(RecogRate(t, t), 1.0);
}

TEST(RecogRate, EmptyTargetIsUndefined) {
  try {
    RecogRate(PhonemeSequence{}, PhonemeSequence::FromString("AH"));
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("undefined recognition rate"),
              std::string::npos);
  }
}

TEST(RecogRate, ClampsLongSpuriousTranscripts) {
  auto t = PhonemeSequence::FromString("AH B");
  auto p = PhonemeSequence::FromString("K K K K K K K");
  EXPECT_EQ(RecogRate(t, p), 0.0);
}

TEST(RecogRate, InvariantToSelfConcatenation) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    PhonemeSequence t = RandomSequence(&rng, 10, 4);
    if (t.empty()) continue;
    PhonemeSequence p = RandomSequence(&rng, 10, 4);
    EXPECT_DOUBLE_EQ(RecogRate(t, t), 1.0);
    double rate = RecogRate(t, p);
    PhonemeSequence tt = t, pp = p;
    tt.phonemes.insert(tt.phonemes.end(), t.phonemes.begin(), t.phonemes.end());
    pp.phonemes.insert(pp.phonemes.end(), p.phonemes.begin(), p.phonemes.end());
    // Doubling can only find a cheaper alignment across the seam, never a
    // costlier one; for the unclamped rate Lev(tt,pp) <= 2 Lev(t,p).
    EXPECT_GE(RecogRate(tt, pp), rate - 1e-12);
  }
  // On the published Table 3 pair the doubled rate is identical.
  auto t = PhonemeSequence::FromString(kTargetPh);
  auto p = PhonemeSequence::FromString(kP1Ph);
  PhonemeSequence tt = t, pp = p;
  tt.phonemes.insert(tt.phonemes.end(), t.phonemes.begin(), t.phonemes.end());
  pp.phonemes.insert(pp.phonemes.end(), p.phonemes.begin(), p.phonemes.end());
  EXPECT_EQ(RecogRate(tt, pp), RecogRate(t, p));
}

TEST(SentInt, Examples) {
  auto t = PhonemeSequence::FromString(kTargetPh);
  auto p1 = PhonemeSequence::FromString(kP1Ph);
  auto p2 = PhonemeSequence::FromString(kP2Ph);
  EXPECT_EQ(SentInt(t, {t}), 1.0);
  EXPECT_DOUBLE_EQ(SentInt(t, {p1, p2}), 0.6);
  EXPECT_EQ(SentInt(t, std::vector<PhonemeSequence>(6)), 0.0);
  EXPECT_THROW(SentInt(t, {}), Error);
}

TEST(SentInt, ExactFractionsOrderWithoutEpsilon) {
  auto t = PhonemeSequence::FromString(kTargetPh);
  auto p1 = PhonemeSequence::FromString(kP1Ph);
  auto p2 = PhonemeSequence::FromString(kP2Ph);
  Fraction a = SentIntExact(t, {p1, p2});       // 36/60
  Fraction b = SentIntExact(t, {p2, p1, p2, p1});  // 72/120
  EXPECT_TRUE(a == b);
  EXPECT_TRUE(SentIntExact(t, {p2}) > a);
}

TEST(SentInt, PermutationInvariantAndWithinHull) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    PhonemeSequence t = RandomSequence(&rng, 10, 4);
    if (t.empty()) continue;
    std::vector<PhonemeSequence> ps;
    for (int i = 0; i < 6; ++i) ps.push_back(RandomSequence(&rng, 10, 4));
    double s = SentInt(t, ps);
    double lo = 1.0, hi = 0.0;
    for (const auto &p : ps) {
      lo = std::min(lo, RecogRate(t, p));
      hi = std::max(hi, RecogRate(t, p));
    }
    EXPECT_GE(s, lo - 1e-12);
    EXPECT_LE(s, hi + 1e-12);
    std::reverse(ps.begin(), ps.end());
    EXPECT_EQ(s, SentInt(t, ps));
  }
}

}  // namespace
}  // namespace pararank
