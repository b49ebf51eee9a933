// tests/cli-test.cc

// Copyright 2026  The para-rank Authors

// See ../COPYING for clarification regarding multiple authors
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
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "audio/noise-mixing.h"
#include "audio/wav-io.h"
#include "base/random.h"
#include "base/text-utils.h"
#include "cli/commands.h"
#include "cli/run-manifest.h"
#include "json.hpp"
#include "synthetic-pin.h"

namespace fs = std::filesystem;

namespace pararank {
namespace {

const std::string kLexicon =
    std::string(PARARANK_DATA_DIR) + "/lexicon/cmudict.dict";

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  Result r;
  r.code = RunParaRank(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json ReadJson(const fs::path &p) {
  return nlohmann::json::parse(Slurp(p));
}

int CountLines(const std::string &s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv("PARARANK_LEXICON");
    dir_ = fs::temp_directory_path() /
           ("pararank-cli-" + std::to_string(getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string P(const std::string &name) const { return (dir_ / name).string(); }

  std::string Corpus() {
    std::string d = P("pin");
    if (!fs::exists(d)) WriteSyntheticPin(d, SyntheticPinOptions());
    return d;
  }

  fs::path dir_;
};

Waveform Tone(int rate, size_t n, double freq, double amp) {
  std::vector<double> x(n);
  for (size_t i = 0; i < n; ++i)
    x[i] = amp * std::sin(2 * M_PI * freq * i / rate);
  return Waveform(rate, std::move(x));
}

Waveform Noise(int rate, size_t n, uint64_t seed, double amp) {
  Rng rng(seed);
  std::vector<double> x(n);
  for (auto &v : x) v = amp * rng.Gaussian();
  return Waveform(rate, std::move(x));
}

TEST_F(CliTest, NoArgumentsIsUsageError) {
  Result r = Invoke({});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("Usage:"), std::string::npos);
}

TEST_F(CliTest, UnknownSubcommandIsUsageError) {
  Result r = Invoke({"frobnicate"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("Usage:"), std::string::npos);
}

TEST_F(CliTest, UnknownFlagIsUsageError) {
  Result r = Invoke({"stoi", "--clean", "a.wav", "--degraded", "b.wav", "--bogus"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--bogus"), std::string::npos);
  EXPECT_NE(r.err.find("Usage:"), std::string::npos);
}

TEST_F(CliTest, MissingRequiredFlagIsUsageError) {
  EXPECT_EQ(Invoke({"stoi", "--clean", "a.wav"}).code, kExitUsage);
}

TEST_F(CliTest, HelpAndVersionSucceed) {
  Result h = Invoke({"eval-rank", "--help"});
  EXPECT_EQ(h.code, kExitOk);
  EXPECT_NE(h.out.find("--table4"), std::string::npos);
  Result v = Invoke({"--version"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_EQ(Trim(v.out), PARARANK_VERSION);
}

TEST_F(CliTest, G2pPrintsPhonemes) {
  Result r = Invoke({"g2p", "--lexicon", kLexicon, "--text", "Hello world"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "HH AH L OW W ER L D\n");
}

TEST_F(CliTest, G2pJson) {
  Result r = Invoke({"g2p", "--lexicon", kLexicon, "--text", "cat", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["length"], 3);
  EXPECT_EQ(j["phonemes"][0], "K");
}

TEST_F(CliTest, LexiconFromEnvironmentAndFlagOverrides) {
  setenv("PARARANK_LEXICON", kLexicon.c_str(), 1);
  Result r = Invoke({"g2p", "--text", "cat"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "K AE T\n");
  Result bad = Invoke({"g2p", "--lexicon", P("missing.dict"), "--text", "cat"});
  EXPECT_EQ(bad.code, kExitFailure);
  unsetenv("PARARANK_LEXICON");
}

TEST_F(CliTest, MissingLexiconNamesFlag) {
  Result r = Invoke({"g2p", "--text", "cat"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("--lexicon"), std::string::npos);
}

TEST_F(CliTest, StoiPrintsOneNumber) {
  Waveform clean = Tone(10000, 20000, 440.0, 0.3);
  WriteWav(P("clean.wav"), clean);
  Result same = Invoke({"stoi", "--clean", P("clean.wav"), "--degraded",
                     P("clean.wav")});
  ASSERT_EQ(same.code, kExitOk) << same.err;
  EXPECT_EQ(same.out, "1.000000\n");

  Waveform noise = Noise(10000, 20000, 3, 0.3);
  WriteWav(P("noisy.wav"), MixAtSnr(clean, noise, -5.0).mixture);
  Result r = Invoke({"stoi", "--clean", P("clean.wav"), "--degraded",
                  P("noisy.wav")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  ASSERT_EQ(CountLines(r.out), 1);
  double v = ParseDouble(r.out, "stoi");
  EXPECT_LT(v, 1.0);
  EXPECT_GT(v, -1.0);
  EXPECT_EQ(r.out.size(), std::string("0.000000\n").size() + (v < 0));
}

TEST_F(CliTest, StoiMissingFileIsValidationError) {
  Result r = Invoke({"stoi", "--clean", P("nope.wav"), "--degraded", P("x.wav")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("nope.wav"), std::string::npos);
}

TEST_F(CliTest, MixWritesSidecarManifest) {
  WriteWav(P("speech.wav"), Tone(16000, 16000, 300.0, 0.05));
  WriteWav(P("noise.wav"), Noise(16000, 40000, 9, 0.1));
  Waveform speech = ReadWav(P("speech.wav")), noise = ReadWav(P("noise.wav"));
  Result r = Invoke({"mix", "--speech", P("speech.wav"), "--noise", P("noise.wav"),
                  "--snr", "-5", "--offset", "1234", "--out", P("mix.wav")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto m = ReadJson(P("mix.wav.manifest.json"));
  EXPECT_EQ(m["command"], "mix");
  EXPECT_EQ(m["results"]["noise_offset"], 1234);
  EXPECT_NEAR(m["results"]["measured_snr_db"].get<double>(), -5.0, 1e-6);
  EXPECT_EQ(m["results"]["post_gain"].get<double>(), 1.0);
  MixResult expect = MixAtSnr(speech, noise, -5.0, 1234);
  EXPECT_DOUBLE_EQ(m["results"]["noise_scale"].get<double>(), expect.noise_scale);
  EXPECT_EQ(m["inputs"][0]["sha256"], Sha256File(P("speech.wav")));
  EXPECT_EQ(m["flags"]["snr"], "-5");
  Waveform got = ReadWav(P("mix.wav"));
  ASSERT_EQ(got.size(), speech.size());
  for (size_t i = 0; i < got.size(); i += 997)
    EXPECT_NEAR(got.samples()[i], expect.mixture.samples()[i], 1e-6);
}

TEST_F(CliTest, MixSeededOffsetIsDeterministic) {
  WriteWav(P("speech.wav"), Tone(8000, 8000, 200.0, 0.2));
  WriteWav(P("noise.wav"), Noise(8000, 30000, 4, 0.1));
  auto mix = [&](const std::string &out, const std::string &seed) {
    return Invoke({"mix", "--speech", P("speech.wav"), "--noise", P("noise.wav"),
                "--snr", "0", "--seed", seed, "--out", P(out)});
  };
  ASSERT_EQ(mix("a.wav", "7").code, kExitOk);
  ASSERT_EQ(mix("b.wav", "7").code, kExitOk);
  ASSERT_EQ(mix("c.wav", "8").code, kExitOk);
  EXPECT_EQ(Slurp(P("a.wav")), Slurp(P("b.wav")));
  EXPECT_NE(Slurp(P("a.wav")), Slurp(P("c.wav")));
  auto m = ReadJson(P("a.wav.manifest.json"));
  EXPECT_EQ(m["seeds"]["offset"], 7);
  EXPECT_EQ(m["results"]["noise_offset"], RandomNoiseOffset(30000, 7));
}

TEST_F(CliTest, MixLoudInputIsPeakNormalised) {
  WriteWav(P("speech.wav"), Tone(8000, 8000, 200.0, 0.95));
  WriteWav(P("noise.wav"), Noise(8000, 8000, 4, 0.5));
  Result r = Invoke({"mix", "--speech", P("speech.wav"), "--noise", P("noise.wav"),
                  "--snr", "-5", "--offset", "0", "--out", P("mix.wav"),
                  "--encoding", "pcm16"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto m = ReadJson(P("mix.wav.manifest.json"));
  EXPECT_LT(m["results"]["post_gain"].get<double>(), 1.0);
  double peak = 0;
  for (double x : ReadWav(P("mix.wav")).samples()) peak = std::max(peak, std::fabs(x));
  EXPECT_LE(peak, 1.0);
}

TEST_F(CliTest, LmTrainAndPpl) {
  {
    std::ofstream c(P("corpus.txt"));
    c << "a b\na c\n\nb c\n";
  }
  Result t = Invoke({"lm-train", "--corpus", P("corpus.txt"), "--order", "2",
                  "--out", P("lm.txt")});
  ASSERT_EQ(t.code, kExitOk) << t.err;
  EXPECT_TRUE(fs::exists(P("lm.txt.manifest.json")));
  Result p = Invoke({"ppl", "--model", P("lm.txt"), "--text", "a b"});
  ASSERT_EQ(p.code, kExitOk) << p.err;
  double v = ParseDouble(p.out, "ppl");
  EXPECT_GT(v, 1.0);
  EXPECT_EQ(p.out.find('.') + 7, p.out.size() - 1);  // six decimals
  Result j = Invoke({"ppl", "--model", P("lm.txt"), "--text", "a b", "--json"});
  EXPECT_NEAR(nlohmann::json::parse(j.out)["ppl"].get<double>(), v, 1e-6);
}

TEST_F(CliTest, LmTrainRejectsBadDiscount) {
  {
    std::ofstream c(P("corpus.txt"));
    c << "a b\n";
  }
  Result t = Invoke({"lm-train", "--corpus", P("corpus.txt"), "--order", "2",
                  "--discounts", "0.5,1.5", "--out", P("lm.txt")});
  EXPECT_EQ(t.code, kExitFailure);
}

TEST_F(CliTest, FeaturesAreDeterministicAndDoNotTouchInputs) {
  std::string d = Corpus();
  std::string rec_hash = Sha256File(d + "/records.tsv");
  std::vector<std::string> args = {"features", "--dataset", d, "--lexicon",
                                   kLexicon, "--lm", d + "/ppl.csv", "--stoi",
                                   d + "/features.csv"};
  auto a = args, b = args;
  a.insert(a.end(), {"--out", P("f1.csv"), "--jobs", "3"});
  b.insert(b.end(), {"--out", P("f2.csv"), "--jobs", "1"});
  Result ra = Invoke(a);
  ASSERT_EQ(ra.code, kExitOk) << ra.err;
  Result rb = Invoke(b);
  ASSERT_EQ(rb.code, kExitOk) << rb.err;
  EXPECT_EQ(Slurp(P("f1.csv")), Slurp(P("f2.csv")));
  EXPECT_EQ(Sha256File(d + "/records.tsv"), rec_hash);
  auto m = ReadJson(P("f1.csv.manifest.json"));
  EXPECT_EQ(m["results"]["ppl_source"], "external");
  bool saw_records = false;
  for (const auto &in : m["inputs"])
    if (in["path"] == d + "/records.tsv") {
      saw_records = true;
      EXPECT_EQ(in["sha256"], rec_hash);
    }
  EXPECT_TRUE(saw_records);
}

TEST_F(CliTest, FeaturesWithMissingStoiIsValidationError) {
  std::string d = Corpus();
  Result r = Invoke({"features", "--dataset", d, "--lexicon", kLexicon, "--lm",
                  d + "/ppl.csv", "--out", P("f.csv")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("clean"), std::string::npos);
}

TEST_F(CliTest, RegressPrintsCoefficientTable) {
  std::string d = Corpus();
  Result r = Invoke({"regress", "--features", d + "/features.csv", "--dataset", d,
                  "--lexicon", kLexicon, "--response", "sent_int", "--snr",
                  "-5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto lines = SplitString(Trim(r.out), '\n');
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[1], "term\testimate\tstd_error\tt_value\tp_value");
  EXPECT_EQ(SplitString(lines[2], '\t')[0], "(Intercept)");
  EXPECT_NE(lines[0].find("scaled=true"), std::string::npos);

  Result g = Invoke({"regress", "--features", d + "/features.csv", "--dataset", d,
                  "--lexicon", kLexicon, "--response", "gain", "--snr", "0",
                  "--pairs", "PiN_both", "--raw", "--json"});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  auto j = nlohmann::json::parse(g.out);
  EXPECT_EQ(j["scaled"], false);
  EXPECT_EQ(j["subset"], "PiN_both");
  EXPECT_EQ(j["coefficients"][1]["term"], "diff.phLen");
  EXPECT_EQ(j["n"].get<int>() + j["excluded_ties"].get<int>(), 123);
}

TEST_F(CliTest, RegressRejectsUnknownResponse) {
  std::string d = Corpus();
  Result r = Invoke({"regress", "--features", d + "/features.csv", "--dataset", d,
                  "--lexicon", kLexicon, "--response", "ppl", "--snr", "5"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST_F(CliTest, AnalyzeWritesTablesAndOneManifest) {
  std::string d = Corpus();
  Result r = Invoke({"analyze", "--dataset", d, "--lexicon", kLexicon, "--out",
                  P("an")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char *f : {"sent-int.tsv", "pairs.tsv", "summary.tsv",
                        "snr-tests.tsv", "histogram.csv"})
    EXPECT_TRUE(fs::exists(dir_ / "an" / f)) << f;
  int manifests = 0;
  for (const auto &e : fs::directory_iterator(dir_ / "an"))
    manifests += e.path().filename().string().find("manifest") !=
                 std::string::npos;
  EXPECT_EQ(manifests, 1);
  // 3 subsets x 3 SNRs x 20 bins plus a header.
  EXPECT_EQ(CountLines(Slurp(dir_ / "an" / "histogram.csv")), 181);
  EXPECT_EQ(CountLines(r.out), 10);
}

TEST_F(CliTest, CountCheckRejectsSmallCorpus) {
  SyntheticPinOptions o;
  o.triplets_per_snr = 10;
  o.published_annotations = false;
  WriteSyntheticPin(P("small"), o);
  std::vector<std::string> args = {"analyze", "--dataset", P("small"),
                                   "--lexicon", kLexicon, "--out", P("an")};
  Result strict = Invoke(args);
  EXPECT_EQ(strict.code, kExitFailure);
  EXPECT_NE(strict.err.find("pair count mismatch"), std::string::npos);
  args.push_back("--no-count-check");
  EXPECT_EQ(Invoke(args).code, kExitOk);
}

TEST_F(CliTest, TrainRankWritesModel) {
  std::string d = Corpus();
  Result r = Invoke({"train-rank", "--features", d + "/features.csv", "--dataset",
                  d, "--lexicon", kLexicon, "--snr", "-5", "--subset",
                  "phLen,ppl,STOI", "--out", P("model.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto m = ReadJson(P("model.json"));
  EXPECT_EQ(m["format"], "pararank-rank-model");
  EXPECT_EQ(m["features"].size(), 3u);
  EXPECT_TRUE(fs::exists(P("model.json.manifest.json")));
}

TEST_F(CliTest, TrainRankRejectsUnknownFeature) {
  std::string d = Corpus();
  Result r = Invoke({"train-rank", "--features", d + "/features.csv", "--dataset",
                  d, "--lexicon", kLexicon, "--snr", "-5", "--subset",
                  "phLen,loudness", "--out", P("model.json")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("loudness"), std::string::npos);
}

TEST_F(CliTest, EvalRankTable4Layout) {
  std::string d = Corpus();
  Result r = Invoke({"eval-rank", "--dataset", d, "--lexicon", kLexicon,
                  "--table4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto lines = SplitString(Trim(r.out), '\n');
  ASSERT_EQ(lines.size(), 8u);
  EXPECT_EQ(lines[0], "features\tSNR 5\tSNR 0\tSNR -5");
  const char *rows[] = {"STOI",     "ppl",     "phLen", "phLen+ppl",
                        "phLen+ppl+STOI", "majority", "uniform"};
  for (int i = 0; i < 7; ++i) {
    auto cells = SplitString(lines[i + 1], '\t');
    ASSERT_EQ(cells.size(), 4u);
    EXPECT_EQ(cells[0], rows[i]);
    EXPECT_NE(cells[1].find(" +/- "), std::string::npos);
  }
}

TEST_F(CliTest, EvalRankSingleSnrToFileIsByteStable) {
  std::string d = Corpus();
  std::vector<std::string> base = {"eval-rank", "--dataset", d, "--lexicon",
                                   kLexicon, "--snr=-5", "--table4"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out", P("t1.tsv"), "--jobs", "1"});
  b.insert(b.end(), {"--out", P("t2.tsv"), "--jobs", "4"});
  ASSERT_EQ(Invoke(a).code, kExitOk);
  ASSERT_EQ(Invoke(b).code, kExitOk);
  EXPECT_EQ(Slurp(P("t1.tsv")), Slurp(P("t2.tsv")));
  EXPECT_EQ(CountLines(Slurp(P("t1.tsv"))), 8);
  auto m = ReadJson(P("t1.tsv.manifest.json"));
  EXPECT_EQ(m["seeds"]["split"], 10);  // last of the default seeds 1..10
}

TEST_F(CliTest, ReproduceEmptyDatasetAbortsAtStageOne) {
  fs::create_directories(P("empty"));
  Result r = Invoke({"reproduce", "--dataset", P("empty"), "--lexicon", kLexicon,
                  "--ppl", P("none.csv"), "--out", P("rep")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("stage 1 (analyze)"), std::string::npos);
}

TEST_F(CliTest, ReproduceMissingLexiconNamesFlag) {
  std::string d = Corpus();
  Result r = Invoke({"reproduce", "--dataset", d, "--ppl", d + "/ppl.csv", "--out",
                  P("rep")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("--lexicon"), std::string::npos);
}

TEST_F(CliTest, ReproduceNeedsExactlyOnePplSource) {
  std::string d = Corpus();
  Result r = Invoke({"reproduce", "--dataset", d, "--lexicon", kLexicon, "--out",
                  P("rep")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("--ppl"), std::string::npos);
}

TEST_F(CliTest, ReproduceReportCoversPublishedTargets) {
  std::string d = Corpus();
  std::vector<std::string> args = {"reproduce", "--dataset", d, "--lexicon",
                                   kLexicon, "--ppl", d + "/ppl.csv", "--stoi",
                                   d + "/features.csv"};
  auto a = args, b = args;
  a.insert(a.end(), {"--out", P("rep1")});
  b.insert(b.end(), {"--out", P("rep2"), "--jobs", "1"});
  Result r = Invoke(a);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  ASSERT_EQ(Invoke(b).code, kExitOk);
  EXPECT_NE(r.out.find("oracle gain % at SNR -5\t33 +/- 3"), std::string::npos);
  for (const char *f : {"features.csv", "regression.tsv", "table4.tsv",
                        "summary.tsv", "report.tsv"})
    EXPECT_EQ(Slurp(dir_ / "rep1" / f), Slurp(dir_ / "rep2" / f)) << f;
  // Six regression models with four coefficients each, plus a header.
  EXPECT_EQ(CountLines(Slurp(dir_ / "rep1" / "regression.tsv")), 25);
  auto m = ReadJson(dir_ / "rep1" / "manifest.json");
  EXPECT_EQ(m["results"]["ppl_source"], "external");
  EXPECT_EQ(m["inputs"][0]["sha256"], Sha256File(d + "/records.tsv"));
}

TEST(Sha256Test, KnownVector) {
  fs::path p = fs::temp_directory_path() /
               ("pararank-sha-" + std::to_string(getpid()));
  {
    std::ofstream o(p, std::ios::binary);
    o << "abc";
  }
  EXPECT_EQ(Sha256File(p.string()),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  fs::remove(p);
}

}  // namespace
}  // namespace pararank
