// cli/commands.cc

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

#include "cli/commands.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "audio/noise-mixing.h"
#include "audio/wav-io.h"
#include "base/pararank-error.h"
#include "base/text-utils.h"
#include "cli/pipeline.h"
#include "cli/reproduce.h"
#include "cli/run-manifest.h"
#include "json.hpp"
#include "lm/tokenizer.h"
#include "phonetics/g2p.h"
#include "stoi/stoi.h"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace pararank {

namespace {

const char kLexiconEnv[] = "PARARANK_LEXICON";

std::string RequireLexicon(const std::string &path) {
  if (path.empty())
    throw Error(std::string("no lexicon given: pass --lexicon <path> or set ") +
                kLexiconEnv);
  return path;
}

void RequireFile(const std::string &path, const std::string &flag) {
  if (!fs::is_regular_file(path))
    throw Error(flag + ": no such file: " + path);
}

// Records every long option of `cmd` with its resolved value.
void RecordFlags(const CLI::App &cmd, RunManifest *m) {
  for (const CLI::Option *o : cmd.get_options()) {
    if (o->get_lnames().empty()) continue;
    const std::string &name = o->get_lnames()[0];
    if (name == "help") continue;
    std::string value;
    if (o->count() > 0) {
      value = o->get_type_size() == 0 ? "true" : JoinStrings(o->results(), ",");
    } else {
      value = o->get_type_size() == 0 ? "false" : o->get_default_str();
      if (value == "{}" || value == "[]") value.clear();  // empty container
    }
    m->AddFlag(name, value);
  }
}

void WriteOutputFile(const std::string &path,
                     const std::function<void(std::ostream &)> &body) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  body(out);
  out.close();
  if (!out) throw Error("write failed: " + path);
}

PinData LoadScored(const std::string &dir, const Lexicon &lexicon,
                   bool check_counts, int jobs) {
  PinLoadOptions lo;
  lo.check_counts = check_counts;
  PinData data = LoadPin(dir, lo);
  ScoreRecords(&data, lexicon, jobs);
  return data;
}

void AddDatasetInputs(const std::string &dir, RunManifest *m) {
  m->AddInput((fs::path(dir) / "records.tsv").string());
  m->AddInput((fs::path(dir) / "annotations.tsv").string());
}

Json CoefficientsJson(const RegressionResult &r) {
  Json j;
  j["response"] = ResponseName(r.response);
  j["snr"] = r.snr_db;
  j["subset"] = PinSubsetName(r.subset);
  j["scaled"] = r.scaled;
  j["n"] = r.num_rows;
  j["excluded_ties"] = r.excluded_ties;
  j["residual_df"] = r.fit.residual_df;
  j["r_squared"] = r.fit.r_squared;
  j["coefficients"] = Json::array();
  for (const auto &c : r.fit.coefficients)
    j["coefficients"].push_back({{"term", c.name},
                                 {"estimate", c.estimate},
                                 {"std_error", c.std_error},
                                 {"t_value", c.t_value},
                                 {"p_value", c.p_value}});
  return j;
}

Json RankingJson(const RankingTable &t) {
  Json j;
  j["snrs"] = t.snrs;
  j["rows"] = Json::array();
  for (size_t row = 0; row < t.reports.at(0).rows.size(); ++row) {
    Json r;
    r["features"] = t.reports[0].rows[row].name;
    r["cells"] = Json::array();
    for (size_t s = 0; s < t.snrs.size(); ++s) {
      const EvalRow &e = t.reports[s].rows[row];
      Json c = {{"snr", t.snrs[s]},
                {"mean", e.ci.mean},
                {"ci95", e.ci.halfwidth},
                {"accuracies", e.accuracies}};
      if (!e.is_baseline) {
        c["p_vs_majority"] = e.vs_majority.p_value;
        c["p_vs_uniform"] = e.vs_uniform.p_value;
        c["significant"] = e.significant();
      }
      r["cells"].push_back(std::move(c));
    }
    j["rows"].push_back(std::move(r));
  }
  return j;
}

Json SummaryJson(const PinSummary &s) {
  Json j = Json::array();
  for (const auto &c : s.conditions) {
    Json r = {{"subset", PinSubsetName(c.subset)},
              {"snr", c.snr_db},
              {"pairs", c.num_pairs},
              {"utterances", c.num_utterances},
              {"mean_sent_int", c.mean_sent_int},
              {"mean_abs_diff", c.mean_abs_diff},
              {"ties", c.num_ties},
              {"oracle_gain", c.oracle_gain},
              {"histogram", c.histogram}};
    if (c.diff_test)
      r["diff_test"] = {{"t", c.diff_test->statistic},
                        {"df", c.diff_test->df},
                        {"p", c.diff_test->p_value}};
    j.push_back(std::move(r));
  }
  return j;
}

// Options shared by the commands that read the dataset.
struct DatasetFlags {
  std::string dataset;
  std::string lexicon;
  bool no_count_check = false;

  void Add(CLI::App *cmd, bool dataset_required = true) {
    auto *d = cmd->add_option("--dataset", dataset,
                              "dataset directory (records.tsv, annotations.tsv)");
    if (dataset_required) d->required();
    cmd->add_option("--lexicon", lexicon, "pronouncing dictionary")
        ->envname(kLexiconEnv);
    cmd->add_flag("--no-count-check", no_count_check,
                  "accept corpora without the published pair counts");
  }
};

}  // namespace

int RunParaRank(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err) {
  CLI::App app{"Paraphrase intelligibility analysis and ranking in noise.",
               "para-rank"};
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", PARARANK_VERSION);
  app.require_subcommand(1);

  int jobs = 0;
  bool json = false;
  auto add_jobs = [&](CLI::App *c) {
    c->add_option("--jobs", jobs, "worker threads (0: all cores)")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_json = [&](CLI::App *c) {
    c->add_flag("--json", json, "print JSON instead of TSV");
  };

  std::vector<std::pair<CLI::App *, std::function<void()>>> commands;

  // g2p
  {
    auto *c = app.add_subcommand("g2p", "print the phonemes of a sentence");
    auto o = std::make_shared<std::pair<std::string, std::string>>();
    c->add_option("--lexicon", o->first, "pronouncing dictionary")
        ->envname(kLexiconEnv);
    c->add_option("--text", o->second, "sentence")->required();
    add_json(c);
    commands.emplace_back(c, [o, &out, &json] {
      Lexicon lex = Lexicon::Load(RequireLexicon(o->first));
      PhonemeSequence seq = G2p(o->second, lex);
      if (json) {
        std::vector<std::string> ph;
        for (Phoneme p : seq.phonemes) ph.emplace_back(PhonemeName(p));
        out << Json{{"text", o->second}, {"phonemes", ph},
                    {"length", seq.size()}}.dump()
            << "\n";
      } else {
        out << seq.ToString() << "\n";
      }
    });
  }

  // mix
  {
    struct Opts {
      std::string speech, noise, out, encoding = "float32";
      double snr = 0.0;
      long long offset = -1;
      uint64_t seed = 1;
    };
    auto o = std::make_shared<Opts>();
    auto *c = app.add_subcommand("mix", "add noise to speech at a target SNR");
    c->add_option("--speech", o->speech, "clean speech wav")->required();
    c->add_option("--noise", o->noise, "noise wav")->required();
    c->add_option("--snr", o->snr, "target SNR in dB")->required();
    c->add_option("--offset", o->offset,
                  "noise start sample (default: drawn with --seed)");
    c->add_option("--seed", o->seed, "seed for the noise offset");
    c->add_option("--out", o->out, "output wav")->required();
    c->add_option("--encoding", o->encoding, "output sample format")
        ->check(CLI::IsMember({"float32", "pcm16"}));
    add_json(c);
    commands.emplace_back(c, [o, c, &out, &json] {
      RunManifest m("mix");
      RecordFlags(*c, &m);
      m.AddInput(o->speech);
      m.AddInput(o->noise);
      Waveform speech = ReadWav(o->speech), noise = ReadWav(o->noise);
      if (noise.empty()) throw Error("--noise: empty waveform");
      size_t offset;
      if (o->offset >= 0) {
        offset = static_cast<size_t>(o->offset);
      } else {
        offset = RandomNoiseOffset(noise.size(), o->seed);
        m.AddSeed("offset", o->seed);
      }
      MixResult mix = MixAtSnr(speech, noise, o->snr, offset);
      Waveform seg = NoiseSegment(noise, mix.noise_offset, speech.size());
      std::vector<double> scaled(seg.samples());
      for (double &x : scaled) x *= mix.noise_scale;
      double measured =
          MeasureSnr(speech, Waveform(seg.sample_rate(), std::move(scaled)));
      WriteWav(o->out, mix.mixture,
               o->encoding == "pcm16" ? WavEncoding::kPcm16
                                      : WavEncoding::kFloat32);
      m.AddOutput(o->out);
      m.extra()["noise_scale"] = mix.noise_scale;
      m.extra()["noise_offset"] = mix.noise_offset;
      m.extra()["post_gain"] = mix.post_gain;
      m.extra()["measured_snr_db"] = measured;
      m.Write(ManifestPathFor(o->out));
      if (json) {
        out << m.extra().dump() << "\n";
      } else {
        out << "noise_scale\t" << FormatDouble(mix.noise_scale) << "\n"
            << "noise_offset\t" << mix.noise_offset << "\n"
            << "post_gain\t" << FormatDouble(mix.post_gain) << "\n"
            << "measured_snr_db\t" << FormatDouble(measured) << "\n";
      }
    });
  }

  // stoi
  {
    auto o = std::make_shared<std::pair<std::string, std::string>>();
    auto *c = app.add_subcommand("stoi", "STOI of a degraded signal");
    c->add_option("--clean", o->first, "clean reference wav")->required();
    c->add_option("--degraded", o->second, "degraded wav")->required();
    add_json(c);
    commands.emplace_back(c, [o, &out, &json] {
      Waveform clean = ReadWav(o->first);
      Waveform degraded = ReadWav(o->second);
      double v = Stoi(clean, degraded);
      if (json)
        out << Json{{"stoi", v}}.dump() << "\n";
      else
        out << FormatFixed(v, 6) << "\n";
    });
  }

  // lm-train
  {
    struct Opts {
      std::string corpus, out;
      int order = 3;
      std::vector<double> discounts;
    };
    auto o = std::make_shared<Opts>();
    auto *c = app.add_subcommand("lm-train",
                                 "train a Kneser-Ney n-gram model");
    c->add_option("--corpus", o->corpus, "text, one sentence per line")
        ->required();
    c->add_option("--order", o->order, "n-gram order")
        ->check(CLI::Range(1, 10));
    c->add_option("--discounts", o->discounts,
                  "per-order discounts, lowest order first (default: "
                  "estimated)")
        ->delimiter(',');
    c->add_option("--out", o->out, "model file")->required();
    commands.emplace_back(c, [o, c, &out] {
      RunManifest m("lm-train");
      RecordFlags(*c, &m);
      m.AddInput(o->corpus);
      NGramModel model =
          NGramModel::Train(ReadLmCorpus(o->corpus), {o->order, o->discounts});
      model.Save(o->out);
      m.AddOutput(o->out);
      m.Write(ManifestPathFor(o->out));
      std::vector<std::string> d;
      for (double x : model.discounts()) d.push_back(FormatDouble(x));
      out << "order\t" << model.order() << "\n"
          << "vocab\t" << model.vocab().size() << "\n"
          << "discounts\t" << JoinStrings(d, ",") << "\n";
    });
  }

  // ppl
  {
    auto o = std::make_shared<std::pair<std::string, std::string>>();
    auto *c = app.add_subcommand("ppl", "perplexity of a sentence");
    c->add_option("--model", o->first, "n-gram model file")->required();
    c->add_option("--text", o->second, "sentence")->required();
    add_json(c);
    commands.emplace_back(c, [o, &out, &json] {
      NGramModel model = NGramModel::Load(o->first);
      auto tokens = Tokenize(o->second);
      double v = model.Perplexity(tokens);
      if (json)
        out << Json{{"ppl", v}, {"tokens", tokens.size()}}.dump() << "\n";
      else
        out << FormatFixed(v, 6) << "\n";
    });
  }

  // features
  {
    struct Opts {
      DatasetFlags ds;
      std::string lm, stoi, out;
    };
    auto o = std::make_shared<Opts>();
    auto *c = app.add_subcommand("features",
                                 "per-utterance phLen, ppl and STOI table");
    o->ds.Add(c);
    c->add_option("--lm", o->lm, "n-gram model, or utterance_id,ppl CSV")
        ->required();
    c->add_option("--stoi", o->stoi,
                  "utterance_id,stoi CSV (default: measure clean/ against "
                  "noisy/ wavs)");
    c->add_option("--out", o->out, "feature CSV")->required();
    add_jobs(c);
    commands.emplace_back(c, [o, c, &out, &jobs] {
      RunManifest m("features");
      RecordFlags(*c, &m);
      Lexicon lex = Lexicon::Load(RequireLexicon(o->ds.lexicon));
      PinLoadOptions lo;
      lo.check_counts = !o->ds.no_count_check;
      PinData data = LoadPin(o->ds.dataset, lo);
      AddDatasetInputs(o->ds.dataset, &m);
      m.AddInput(o->ds.lexicon);
      m.AddInput(o->lm);
      if (!o->stoi.empty()) {
        m.AddInput(o->stoi);
      } else {
        for (const auto &r : data.records)
          for (const char *sub : {"clean", "noisy"})
            m.AddInput((fs::path(o->ds.dataset) / sub /
                        (r.utterance_id + ".wav")).string());
      }
      LoadedPpl ppl = LoadedPpl::Load(o->lm);
      auto v = ComputeFeatures(data, o->ds.dataset, lex, ppl.source(), o->stoi,
                               jobs);
      WriteOutputFile(o->out, [&](std::ostream &os) { WriteFeatureTable(os, v); });
      m.AddOutput(o->out);
      m.extra()["ppl_source"] = ppl.external() ? "external" : "ngram";
      m.Write(ManifestPathFor(o->out));
      out << "wrote " << v.size() << " feature rows to " << o->out << "\n";
    });
  }

  // regress
  {
    struct Opts {
      DatasetFlags ds;
      std::string features, response, pairs = "PiN";
      double snr = 0.0;
      bool raw = false;
    };
    auto o = std::make_shared<Opts>();
    auto *c = app.add_subcommand(
        "regress", "OLS of Sent-Int or Sent-Int gain on the features");
    c->add_option("--features", o->features, "feature CSV")->required();
    o->ds.Add(c);
    c->add_option("--response", o->response, "sent_int or gain")
        ->required()
        ->check(CLI::IsMember({"sent_int", "gain"}));
    c->add_option("--snr", o->snr, "SNR condition in dB")->required();
    c->add_option("--pairs", o->pairs, "PiN, PiN_both or PiN_either");
    c->add_flag("--raw", o->raw, "do not z-score the predictors");
    add_jobs(c);
    add_json(c);
    commands.emplace_back(c, [o, &out, &jobs, &json] {
      Lexicon lex = Lexicon::Load(RequireLexicon(o->ds.lexicon));
      PinData data = LoadScored(o->ds.dataset, lex, !o->ds.no_count_check, jobs);
      FeatureIndex f = IndexFeatures(ReadFeatureTable(o->features), data);
      RegressionResult r =
          RunRegression(data, f, ParseResponse(o->response), o->snr,
                        ParsePinSubset(o->pairs), !o->raw);
      if (json)
        out << CoefficientsJson(r).dump(2) << "\n";
      else
        WriteRegressionTsv(out, r);
    });
  }

  // analyze
  {
    struct Opts {
      DatasetFlags ds;
      std::string out;
    };
    auto o = std::make_shared<Opts>();
    auto *c = app.add_subcommand(
        "analyze", "Sent-Int scores, pair differences, tests and histograms");
    o->ds.Add(c);
    c->add_option("--out", o->out, "output directory")->required();
    add_jobs(c);
    add_json(c);
    commands.emplace_back(c, [o, c, &out, &jobs, &json] {
      RunManifest m("analyze");
      RecordFlags(*c, &m);
      Lexicon lex = Lexicon::Load(RequireLexicon(o->ds.lexicon));
      AddDatasetInputs(o->ds.dataset, &m);
      m.AddInput(o->ds.lexicon);
      PinData data = LoadScored(o->ds.dataset, lex, !o->ds.no_count_check, jobs);
      PinSummary summary = SummarizePin(data);
      for (const auto &p : WriteAnalysisFiles(o->out, data, summary))
        m.AddOutput(p);
      m.Write((fs::path(o->out) / "manifest.json").string());
      if (json)
        out << SummaryJson(summary).dump(2) << "\n";
      else
        WriteSummaryTsv(out, summary);
    });
  }

  // train-rank and eval-rank share the ranking options.
  struct RankFlags {
    double c = 1.0;
    bool select_c = false;
    int folds = 5;
    bool raw = false;
    std::string pairs = "PiN";

    void Add(CLI::App *cmd) {
      cmd->add_option("--c", c, "SVM regularisation constant")
          ->check(CLI::PositiveNumber);
      cmd->add_flag("--select-c", select_c,
                    "choose C from {0.01, 0.1, 1, 10} by cross-validation");
      cmd->add_option("--folds", folds, "cross-validation folds")
          ->check(CLI::Range(2, 100));
      cmd->add_flag("--raw", raw, "do not z-score the features");
      cmd->add_option("--pairs", pairs, "PiN, PiN_both or PiN_either");
    }
    RankOptions Options(uint64_t seed) const {
      RankOptions r;
      r.c = c;
      r.select_c = select_c;
      r.cv_folds = folds;
      r.scale = !raw;
      r.seed = seed;
      return r;
    }
  };

  // train-rank
  {
    struct Opts {
      DatasetFlags ds;
      RankFlags rank;
      std::string features, subset = "phLen,ppl,STOI", out;
      double snr = 0.0;
      uint64_t seed = 1;
    };
    auto o = std::make_shared<Opts>();
    auto *c = app.add_subcommand("train-rank",
                                 "train a pairwise ranking model");
    c->add_option("--features", o->features, "feature CSV")->required();
    o->ds.Add(c);
    c->add_option("--snr", o->snr, "SNR condition in dB")->required();
    c->add_option("--subset", o->subset, "comma-separated features");
    c->add_option("--seed", o->seed, "seed for cross-validation folds");
    o->rank.Add(c);
    c->add_option("--out", o->out, "model JSON")->required();
    add_jobs(c);
    commands.emplace_back(c, [o, c, &out, &jobs] {
      RunManifest m("train-rank");
      RecordFlags(*c, &m);
      Lexicon lex = Lexicon::Load(RequireLexicon(o->ds.lexicon));
      AddDatasetInputs(o->ds.dataset, &m);
      m.AddInput(o->ds.lexicon);
      m.AddInput(o->features);
      m.AddSeed("folds", o->seed);
      PinData data = LoadScored(o->ds.dataset, lex, !o->ds.no_count_check, jobs);
      FeatureIndex f = IndexFeatures(ReadFeatureTable(o->features), data);
      auto pairs =
          BuildRankPairs(data, f, o->snr, ParsePinSubset(o->rank.pairs));
      RankModel model = TrainRankModel(pairs, ParseFeatureList(o->subset),
                                       o->rank.Options(o->seed));
      fs::path p(o->out);
      if (p.has_parent_path()) fs::create_directories(p.parent_path());
      model.Save(o->out);
      m.AddOutput(o->out);
      m.Write(ManifestPathFor(o->out));
      std::vector<std::string> w;
      for (double x : model.weights) w.push_back(FormatDouble(x));
      out << "features\t" << FeatureListName(model.features) << "\n"
          << "weights\t" << JoinStrings(w, ",") << "\n"
          << "tau\t" << FormatDouble(model.tau) << "\n"
          << "c\t" << FormatDouble(model.c) << "\n"
          << "pairs\t" << pairs.size() << "\n";
    });
  }

  // eval-rank
  {
    struct Opts {
      DatasetFlags ds;
      RankFlags rank;
      std::string features, out;
      std::vector<double> snrs;
      std::vector<uint64_t> seeds = DefaultSplitSeeds();
      double train_fraction = 0.8;
      bool table4 = false;
    };
    auto o = std::make_shared<Opts>();
    auto *c = app.add_subcommand(
        "eval-rank", "seeded train/test evaluation of the ranking models");
    o->ds.Add(c);
    c->add_option("--features", o->features,
                  "feature CSV (default: <dataset>/features.csv)");
    c->add_option("--snr", o->snrs,
                  "SNR conditions in dB (default: all in the dataset)")
        ->delimiter(',');
    c->add_flag("--table4", o->table4,
                "one row per model, one mean +/- CI cell per SNR");
    c->add_option("--seeds", o->seeds, "split seeds")->delimiter(',');
    c->add_option("--train-fraction", o->train_fraction,
                  "share of pairs used for training")
        ->check(CLI::Range(0.0, 1.0));
    o->rank.Add(c);
    c->add_option("--out", o->out, "write the TSV here instead of stdout");
    add_jobs(c);
    add_json(c);
    commands.emplace_back(c, [o, c, &out, &jobs, &json] {
      RunManifest m("eval-rank");
      RecordFlags(*c, &m);
      std::string features = o->features.empty()
          ? (fs::path(o->ds.dataset) / "features.csv").string()
          : o->features;
      RequireFile(features, "--features");
      Lexicon lex = Lexicon::Load(RequireLexicon(o->ds.lexicon));
      PinData data = LoadScored(o->ds.dataset, lex, !o->ds.no_count_check, jobs);
      FeatureIndex f = IndexFeatures(ReadFeatureTable(features), data);
      EvalOptions eo;
      eo.seeds = o->seeds;
      eo.train_fraction = o->train_fraction;
      eo.rank = o->rank.Options(1);
      eo.jobs = jobs;
      std::vector<double> snrs = o->snrs.empty() ? data.Snrs() : o->snrs;
      RankingTable table = RunRankingTable(data, f, snrs,
                                           ParsePinSubset(o->rank.pairs), eo);
      auto body = [&](std::ostream &os) {
        if (json)
          os << RankingJson(table).dump(2) << "\n";
        else if (o->table4)
          WriteRankingTableTsv(os, table);
        else
          WriteRankingRunsTsv(os, table);
      };
      if (o->out.empty()) {
        body(out);
        return;
      }
      AddDatasetInputs(o->ds.dataset, &m);
      m.AddInput(o->ds.lexicon);
      m.AddInput(features);
      for (uint64_t s : o->seeds) m.AddSeed("split", s);
      WriteOutputFile(o->out, body);
      m.AddOutput(o->out);
      m.Write(ManifestPathFor(o->out));
    });
  }

  // reproduce
  {
    auto o = std::make_shared<ReproduceOptions>();
    auto no_count_check = std::make_shared<bool>(false);
    auto rank = std::make_shared<RankFlags>();
    auto *c = app.add_subcommand(
        "reproduce",
        "analyze, features, regress and eval-rank in one run, with a report "
        "against the published numbers");
    c->add_option("--dataset", o->dataset_dir, "dataset directory")->required();
    c->add_option("--lexicon", o->lexicon, "pronouncing dictionary")
        ->envname(kLexiconEnv);
    c->add_option("--out", o->out_dir, "output directory")->required();
    c->add_option("--ppl", o->ppl_csv, "utterance_id,ppl CSV");
    c->add_option("--lm", o->lm_model, "n-gram model file");
    c->add_option("--lm-corpus", o->lm_corpus,
                  "text to train an n-gram model on");
    c->add_option("--order", o->lm_order, "n-gram order for --lm-corpus")
        ->check(CLI::Range(1, 10));
    c->add_option("--stoi", o->stoi_table, "utterance_id,stoi CSV");
    c->add_option("--seeds", o->eval.seeds, "split seeds")->delimiter(',');
    c->add_flag("--no-count-check", *no_count_check,
                "accept corpora without the published pair counts");
    rank->Add(c);
    add_jobs(c);
    commands.emplace_back(c, [o, c, no_count_check, rank, &out, &err, &jobs] {
      if (o->lexicon.empty()) RequireLexicon(o->lexicon);
      if (rank->pairs != "PiN")
        throw Error("--pairs: reproduce always ranks the PiN pairs");
      o->check_counts = !*no_count_check;
      o->jobs = jobs;
      o->eval.rank = rank->Options(1);
      RunManifest m("reproduce");
      RecordFlags(*c, &m);
      if (fs::is_regular_file(fs::path(o->dataset_dir) / "records.tsv"))
        AddDatasetInputs(o->dataset_dir, &m);
      for (const std::string *p : {&o->lexicon, &o->ppl_csv, &o->lm_model,
                                   &o->lm_corpus, &o->stoi_table})
        if (!p->empty() && fs::is_regular_file(*p)) m.AddInput(*p);
      for (uint64_t s : o->eval.seeds) m.AddSeed("split", s);
      ReproduceResult r = Reproduce(*o, err);
      for (const auto &p : r.outputs) m.AddOutput(p);
      m.extra()["ppl_source"] = r.external_ppl ? "external" : "ngram";
      m.Write((fs::path(o->out_dir) / "manifest.json").string());
      WriteChecksTsv(out, r.checks);
    });
  }

  std::vector<const char *> argv{"para-rank"};
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "para-rank: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  for (auto &[cmd, action] : commands) {
    if (!cmd->parsed()) continue;
    try {
      action();
      return kExitOk;
    } catch (const std::exception &e) {
      err << "para-rank " << cmd->get_name() << ": error: " << e.what() << "\n";
      return kExitFailure;
    }
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace pararank
