// tests/integration-test.cc

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

// End-to-end run of the command-line pipeline on a synthetic corpus with
// audio: lm-train, features (measured STOI), analyze, regress, train-rank,
// eval-rank and reproduce.

#include <gtest/gtest.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "base/table-io.h"
#include "base/text-utils.h"
#include "cli/commands.h"
#include "dataset/pin-data.h"
#include "features/feature-vector.h"
#include "lm/ngram-model.h"
#include "lm/tokenizer.h"
#include "phonetics/g2p.h"
#include "synthetic-pin.h"

namespace fs = std::filesystem;

namespace pararank {
namespace {

const std::string kLexicon =
    std::string(PARARANK_DATA_DIR) + "/lexicon/cmudict.dict";

std::string Slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class PipelineTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    root_ = fs::temp_directory_path() /
            ("pararank-integration-" + std::to_string(getpid()));
    fs::remove_all(root_);
    SyntheticPinOptions o;
    o.seed = 11;
    o.with_audio = true;
    WriteSyntheticPin((root_ / "pin").string(), o);
  }
  static void TearDownTestSuite() { fs::remove_all(root_); }

  static std::string P(const std::string &name) {
    return (root_ / name).string();
  }

  // Runs a command and fails the test on a non-zero exit.
  static std::string Cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = RunParaRank(args, out, err);
    EXPECT_EQ(code, kExitOk) << args[0] << ": " << err.str();
    return out.str();
  }

  static fs::path root_;
};

fs::path PipelineTest::root_;

TEST_F(PipelineTest, FullPipeline) {
  const std::string pin = P("pin");

  Cli({"lm-train", "--corpus", pin + "/lm-corpus.txt", "--order", "3", "--out",
       P("lm.txt")});
  Cli({"features", "--dataset", pin, "--lexicon", kLexicon, "--lm", P("lm.txt"),
       "--out", P("features.csv")});

  // Features agree with their components.
  NGramModel lm = NGramModel::Load(P("lm.txt"));
  Lexicon lexicon = Lexicon::Load(kLexicon);
  PinData data = LoadPin(pin);
  auto features = ReadFeatureTable(P("features.csv"));
  ASSERT_EQ(features.size(), data.records.size());
  std::map<double, std::pair<double, int>> stoi_by_snr;
  for (const auto &f : features) {
    const PinRecord &r = data.Record(f.utterance_id);
    EXPECT_EQ(f.snr_db, r.snr_db);
    EXPECT_EQ(f.ph_len, static_cast<int>(G2p(r.text, lexicon).size()));
    EXPECT_NEAR(f.ppl, lm.Perplexity(Tokenize(r.text)), 1e-9 * f.ppl);
    EXPECT_GE(f.stoi, -1.0);
    EXPECT_LE(f.stoi, 1.0);
    stoi_by_snr[f.snr_db].first += f.stoi;
    stoi_by_snr[f.snr_db].second += 1;
  }
  // Measured intelligibility falls as the noise gets louder.
  auto mean = [&](double snr) {
    return stoi_by_snr[snr].first / stoi_by_snr[snr].second;
  };
  EXPECT_GT(mean(5), mean(0));
  EXPECT_GT(mean(0), mean(-5));

  std::string summary =
      Cli({"analyze", "--dataset", pin, "--lexicon", kLexicon, "--out",
           P("analysis")});
  EXPECT_EQ(SplitString(Trim(summary), '\n').size(), 10u);

  for (const char *response : {"sent_int", "gain"})
    for (const char *snr : {"5", "0", "-5"}) {
      std::string tsv = Cli({"regress", "--features", P("features.csv"),
                             "--dataset", pin, "--lexicon", kLexicon,
                             "--response", response, "--snr", snr});
      auto lines = SplitString(Trim(tsv), '\n');
      ASSERT_EQ(lines.size(), 6u) << response << " " << snr;
      for (size_t i = 2; i < lines.size(); ++i) {
        double p = ParseDouble(SplitString(lines[i], '\t')[4], "p");
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0);
      }
    }

  Cli({"train-rank", "--features", P("features.csv"), "--dataset", pin,
       "--lexicon", kLexicon, "--snr", "-5", "--subset", "phLen,ppl,STOI",
       "--out", P("model.json")});
  EXPECT_TRUE(fs::exists(P("model.json")));

  std::string table = Cli({"eval-rank", "--dataset", pin, "--features",
                           P("features.csv"), "--lexicon", kLexicon,
                           "--table4"});
  EXPECT_EQ(SplitString(Trim(table), '\n').size(), 8u);

  // The one-shot pipeline reproduces the step-by-step feature table.
  std::string report =
      Cli({"reproduce", "--dataset", pin, "--lexicon", kLexicon,
           "--lm-corpus", pin + "/lm-corpus.txt", "--out", P("repro")});
  EXPECT_EQ(Slurp(P("repro/features.csv")), Slurp(P("features.csv")));
  EXPECT_EQ(Slurp(P("repro/summary.tsv")), Slurp(P("analysis/summary.tsv")));
  Table checks = [&] {
    std::istringstream is(report);
    return Table::Parse(is, '\t', "report");
  }();
  size_t c_crit = checks.Column("criterion"), c_status = checks.Column("status");
  int count_checks = 0;
  for (const auto &row : checks.rows()) {
    EXPECT_TRUE(row.fields[c_status] == "PASS" ||
                row.fields[c_status] == "FAIL" ||
                row.fields[c_status] == "REPORTED");
    if (row.fields[c_crit] == "5") {
      ++count_checks;
      EXPECT_EQ(row.fields[c_status], "PASS");
    }
  }
  EXPECT_EQ(count_checks, 12);

  // Identical inputs and flags give byte-identical outputs.
  Cli({"reproduce", "--dataset", pin, "--lexicon", kLexicon, "--lm-corpus",
       pin + "/lm-corpus.txt", "--out", P("repro2"), "--jobs", "1"});
  for (const auto &e : fs::directory_iterator(P("repro"))) {
    std::string name = e.path().filename().string();
    if (name == "manifest.json") continue;
    EXPECT_EQ(Slurp(e.path()), Slurp(fs::path(P("repro2")) / name)) << name;
  }
}

}  // namespace
}  // namespace pararank
