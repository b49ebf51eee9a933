// lm/lm-test.cc

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
#include <map>
#include <set>
#include <sstream>

#include "base/pararank-error.h"
#include "base/random.h"
#include "lm/external-ppl.h"
#include "lm/ngram-model.h"
#include "lm/tokenizer.h"

namespace pararank {
namespace {

using Corpus = std::vector<std::vector<std::string>>;

Corpus MakeCorpus(const std::vector<std::string> &lines) {
  Corpus c;
  for (const auto &l : lines) c.push_back(Tokenize(l));
  return c;
}

NGramModel Train(const Corpus &c, int order, std::vector<double> d = {}) {
  NGramOptions opts;
  opts.order = order;
  opts.discounts = std::move(d);
  return NGramModel::Train(c, opts);
}

double P(const NGramModel &m, const std::string &w,
         const std::vector<std::string> &ctx) {
  return std::exp(m.LogProb(w, ctx));
}

// Straight-from-the-definition interpolated Kneser-Ney: every count is
// recomputed by scanning the padded sentences.
class NaiveKn {
 public:
  NaiveKn(const Corpus &corpus, int order) : order_(order) {
    std::set<std::string> words;
    for (const auto &s : corpus) {
      if (s.empty()) continue;
      std::vector<std::string> seq{"<s>"};
      seq.insert(seq.end(), s.begin(), s.end());
      seq.push_back("</s>");
      sentences_.push_back(seq);
      words.insert(s.begin(), s.end());
    }
    vocab_ = {"<unk>", "</s>"};
    vocab_.insert(vocab_.end(), words.begin(), words.end());
    for (int k = 1; k <= order_; ++k) {
      std::set<std::vector<std::string>> grams;
      for (const auto &seq : sentences_)
        for (size_t j = 1; j < seq.size(); ++j)
          if (j + 1 >= static_cast<size_t>(k))
            grams.emplace(seq.begin() + (j + 1 - k), seq.begin() + j + 1);
      long long n1 = 0, n2 = 0;
      for (const auto &g : grams) {
        long long c = Count(g);
        n1 += c == 1;
        n2 += c == 2;
      }
      discount_.push_back(n1 == 0 ? 0.5 : double(n1) / (n1 + 2 * n2));
    }
  }

  double Prob(const std::string &w, std::vector<std::string> ctx) const {
    if (static_cast<int>(ctx.size()) > order_ - 1)
      ctx.erase(ctx.begin(), ctx.end() - (order_ - 1));
    std::string tok = Known(w) ? w : "<unk>";
    for (auto &c : ctx)
      if (c != "<s>" && !Known(c)) c = "<unk>";
    return ProbK(tok, ctx);
  }

 private:
  bool Known(const std::string &w) const {
    return std::find(vocab_.begin(), vocab_.end(), w) != vocab_.end();
  }

  long long Raw(const std::vector<std::string> &g) const {
    long long n = 0;
    for (const auto &seq : sentences_)
      for (size_t j = 1; j < seq.size(); ++j)
        if (j + 1 >= g.size() &&
            std::equal(g.begin(), g.end(), seq.begin() + (j + 1 - g.size())))
          ++n;
    return n;
  }

  long long Count(const std::vector<std::string> &g) const {
    if (static_cast<int>(g.size()) == order_ || g[0] == "<s>") return Raw(g);
    std::set<std::string> left;
    for (const auto &seq : sentences_)
      for (size_t i = 0; i + g.size() < seq.size(); ++i)
        if (std::equal(g.begin(), g.end(), seq.begin() + i + 1))
          left.insert(seq[i]);
    return static_cast<long long>(left.size());
  }

  double ProbK(const std::string &w, const std::vector<std::string> &ctx) const {
    double lower = ctx.empty()
                       ? 1.0 / vocab_.size()
                       : ProbK(w, std::vector<std::string>(ctx.begin() + 1,
                                                           ctx.end()));
    long long total = 0, types = 0, cw = 0;
    for (const auto &v : vocab_) {
      auto g = ctx;
      g.push_back(v);
      long long c = Count(g);
      total += c;
      types += c > 0;
      if (v == w) cw = c;
    }
    if (total == 0) return lower;
    double d = discount_[ctx.size()];
    return std::max(cw - d, 0.0) / total + d * types / total * lower;
  }

  int order_;
  std::vector<std::vector<std::string>> sentences_;
  std::vector<std::string> vocab_;
  std::vector<double> discount_;
};

TEST(Tokenize, SplitsPunctuationAndKeepsInnerApostrophes) {
  EXPECT_EQ(Tokenize("Don't stop!"),
            (std::vector<std::string>{"don't", "stop"}));
  EXPECT_EQ(Tokenize("'Quoted' words,here... 42"),
            (std::vector<std::string>{"quoted", "words", "here", "42"}));
  EXPECT_EQ(Tokenize("  rock 'n' roll  "),
            (std::vector<std::string>{"rock", "n", "roll"}));
  EXPECT_TRUE(Tokenize(" ?! ").empty());
}

TEST(NGramModel, UnigramOnSingleSentence) {
  Corpus c = MakeCorpus({"a b"});
  // Counts a:1 b:1 </s>:1 over predictable {<unk>, </s>, a, b}.
  NGramModel half = Train(c, 1, {0.5});
  EXPECT_NEAR(P(half, "a", {}), 0.5 / 3 + 0.5 * 3 / 3 / 4, 1e-15);
  EXPECT_NEAR(P(half, "</s>", {}), 7.0 / 24, 1e-15);
  EXPECT_NEAR(P(half, "zzz", {}), 1.0 / 8, 1e-15);
  // Estimated discount: n1 = 3, n2 = 0 gives D = 1, i.e. uniform.
  NGramModel est = Train(c, 1);
  EXPECT_DOUBLE_EQ(est.discounts()[0], 1.0);
  EXPECT_NEAR(P(est, "a", {}), 0.25, 1e-15);
}

TEST(NGramModel, UniformUnigramGivesVocabularySizePerplexity) {
  NGramModel m = Train(MakeCorpus({"a b c d"}), 1);
  ASSERT_EQ(m.num_predictable(), 6);
  for (const char *w : {"a", "d", "</s>", "unseen"})
    EXPECT_NEAR(m.LogProb(w, {}), std::log(1.0 / 6), 1e-12);
  EXPECT_NEAR(m.Perplexity({"a"}), 6.0, 1e-12);
  EXPECT_NEAR(m.Perplexity({"d", "c", "b", "never", "seen"}), 6.0, 1e-12);
}

TEST(NGramModel, CertainTokenHasZeroLogProb) {
  NGramModel m = Train(MakeCorpus({"a"}), 2, {0.5, 0.0});
  EXPECT_EQ(m.LogProb("a", {"<s>"}), 0.0);
  EXPECT_EQ(m.Perplexity({"a"}), 1.0);
}

// Toy corpus {a b, a c, b c}, bigram. Hand-derived values:
//   unigram continuation counts a:1 b:2 c:2 </s>:2, D1 = 1/7;
//   bigram counts <s>a:2 ab:1 b</s>:1 ac:1 c</s>:2 <s>b:1 bc:1, D2 = 5/9;
//   p1(a) = 34/245, p1(b) = p1(c) = p1(</s>) = 69/245, p1(<unk>) = 4/245.
class ToyCorpus : public ::testing::Test {
 protected:
  ToyCorpus() : m_(Train(MakeCorpus({"a b", "a c", "b c"}), 2)) {}
  NGramModel m_;
};

TEST_F(ToyCorpus, Discounts) {
  EXPECT_NEAR(m_.discounts()[0], 1.0 / 7, 1e-15);
  EXPECT_NEAR(m_.discounts()[1], 5.0 / 9, 1e-15);
}

TEST_F(ToyCorpus, LowerOrderUsesContinuationCounts) {
  EXPECT_NEAR(P(m_, "a", {}), 34.0 / 245, 1e-14);
  EXPECT_NEAR(P(m_, "b", {}), 69.0 / 245, 1e-14);
  EXPECT_NEAR(P(m_, "<unk>", {}), 4.0 / 245, 1e-14);
  // Unknown context backs off fully.
  EXPECT_NEAR(P(m_, "a", {"zzz"}), 34.0 / 245, 1e-14);
}

TEST_F(ToyCorpus, UnseenBigramInterpolates) {
  // Context c: only c</s> (count 2); (5/9)(1/2) p1(a).
  EXPECT_NEAR(P(m_, "a", {"c"}), 17.0 / 441, 1e-14);
}

TEST_F(ToyCorpus, SeenBigram) {
  // (1 - 5/9)/2 + (5/9)(2/2)(69/245)
  EXPECT_NEAR(P(m_, "b", {"a"}), 167.0 / 441, 1e-14);
  // (2 - 5/9)/3 + (5/9)(2/3)(34/245)
  EXPECT_NEAR(P(m_, "a", {"<s>"}), 235.0 / 441, 1e-14);
}

TEST_F(ToyCorpus, PerplexityIsGeometricMeanInverseProbability) {
  double expected = std::pow(235.0 / 441 * 167.0 / 441, -0.5);
  EXPECT_NEAR(m_.Perplexity({"a", "b"}), expected, 1e-12);
}

Corpus RandomCorpus(uint64_t seed, int sentences, int vocab) {
  Rng rng(seed);
  Corpus c;
  for (int s = 0; s < sentences; ++s) {
    std::vector<std::string> sent;
    int len = 1 + static_cast<int>(rng.UniformInt(6));
    for (int i = 0; i < len; ++i)
      sent.push_back("w" + std::to_string(rng.UniformInt(vocab)));
    c.push_back(sent);
  }
  return c;
}

TEST(NGramModel, MatchesNaiveKneserNey) {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    for (int order : {1, 2, 3, 4}) {
      Corpus c = RandomCorpus(seed, 12, 5);
      NGramModel m = Train(c, order);
      NaiveKn oracle(c, order);
      Rng rng(seed * 100 + order);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::string> ctx{"<s>"};
        int len = static_cast<int>(rng.UniformInt(4));
        for (int i = 0; i < len; ++i)
          ctx.push_back("w" + std::to_string(rng.UniformInt(7)));
        std::string w = "w" + std::to_string(rng.UniformInt(7));
        EXPECT_NEAR(P(m, w, ctx), oracle.Prob(w, ctx), 1e-12)
            << "seed " << seed << " order " << order;
        EXPECT_NEAR(P(m, "</s>", ctx), oracle.Prob("</s>", ctx), 1e-12);
      }
    }
  }
}

TEST(NGramModel, DistributionsSumToOne) {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    Corpus c = RandomCorpus(seed, 40, 15);
    NGramModel m = Train(c, 3);
    Rng rng(seed);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> ctx;
      if (rng.UniformInt(2) == 0) ctx.push_back(NGramModel::kBos);
      int len = static_cast<int>(rng.UniformInt(4));
      for (int i = 0; i < len; ++i) {
        int id = static_cast<int>(rng.UniformInt(m.vocab().size()));
        ctx.push_back(id == NGramModel::kBos ? NGramModel::kUnk : id);
      }
      double sum = 0.0;
      for (int w = 0; w < static_cast<int>(m.vocab().size()); ++w) {
        if (w == NGramModel::kBos) continue;
        double p = m.Prob(w, ctx);
        EXPECT_GT(p, 0.0);
        EXPECT_LE(p, 1.0);
        sum += p;
      }
      EXPECT_NEAR(sum, 1.0, 1e-9);
    }
  }
}

TEST(NGramModel, LogPerplexityIsMeanNegativeLogProb) {
  Corpus c = RandomCorpus(9, 30, 8);
  NGramModel m = Train(c, 3);
  std::vector<std::string> utt{"w1", "w3", "oov", "w2", "w2"};
  std::vector<std::string> ctx{"<s>"};
  double sum = 0.0;
  for (const auto &w : utt) {
    sum -= m.LogProb(w, ctx);
    ctx.push_back(w);
  }
  EXPECT_NEAR(std::log(m.Perplexity(utt)), sum / utt.size(), 1e-12);
  EXPECT_GE(m.Perplexity(utt), 1.0);
}

TEST(NGramModel, DeterministicAndRoundTrips) {
  Corpus c = RandomCorpus(11, 25, 9);
  NGramModel a = Train(c, 3), b = Train(c, 3);
  std::ostringstream sa, sb;
  a.Write(sa);
  b.Write(sb);
  EXPECT_EQ(sa.str(), sb.str());
  std::istringstream in(sa.str());
  NGramModel r = NGramModel::Read(in);
  std::ostringstream sr;
  r.Write(sr);
  EXPECT_EQ(sr.str(), sa.str());
  std::vector<std::string> utt{"w4", "w0", "w8", "xx"};
  EXPECT_EQ(r.Perplexity(utt), a.Perplexity(utt));
  EXPECT_EQ(r.discounts(), a.discounts());
}

TEST(NGramModel, Errors) {
  EXPECT_THROW(Train({}, 3), Error);
  EXPECT_THROW(Train({{}, {}}, 3), Error);
  EXPECT_THROW(Train(MakeCorpus({"a"}), 0), Error);
  EXPECT_THROW(Train(MakeCorpus({"a"}), 2, {0.5}), Error);
  EXPECT_THROW(Train(MakeCorpus({"a"}), 1, {1.5}), Error);
  EXPECT_THROW(Train({{"<s>"}}, 1), Error);
  NGramModel m = Train(MakeCorpus({"a"}), 2);
  EXPECT_THROW(m.Perplexity({}), Error);
  std::istringstream bad("pararank-ngram 1\norder 2\ndiscounts 0.5\n");
  EXPECT_THROW(NGramModel::Read(bad), Error);
  std::istringstream version("pararank-ngram 7\n");
  EXPECT_THROW(NGramModel::Read(version), Error);
}

std::vector<PplRecord> ParsePpl(const std::string &text) {
  std::istringstream is(text);
  return ParseExternalPpl(is, "ppl.csv");
}

std::string ErrorOf(const std::string &text) {
  try {
    ParsePpl(text);
  } catch (const Error &e) {
    return e.what();
  }
  return "";
}

TEST(ExternalPpl, ReadsRecords) {
  auto recs = ParsePpl("utterance_id,ppl\nu1,12.5\nu2,3\nu3,100.25\n");
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[1].utterance_id, "u2");
  EXPECT_EQ(recs[2].ppl, 100.25);
}

TEST(ExternalPpl, Errors) {
  std::string neg = ErrorOf("utterance_id,ppl\nu1,4\nu2,-2\n");
  EXPECT_NE(neg.find("row 2"), std::string::npos) << neg;
  EXPECT_NE(ErrorOf("utterance_id,ppl\nu1,0\n").find("row 1"),
            std::string::npos);
  EXPECT_NE(ErrorOf("utterance_id,ppl\nu1,4\nu1,5\n").find("duplicate id"),
            std::string::npos);
  std::string missing = ErrorOf("utterance_id,score\nu1,4\n");
  EXPECT_NE(missing.find("ppl"), std::string::npos) << missing;
  EXPECT_FALSE(ErrorOf("utterance_id,ppl\nu1,abc\n").empty());
}

}  // namespace
}  // namespace pararank
