// cli/reproduce.cc

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

#include "cli/reproduce.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include "base/pararank-error.h"
#include "base/text-utils.h"

namespace fs = std::filesystem;

namespace pararank {

namespace {

template <typename Fn>
auto RunStage(int stage, const std::string &name, std::ostream &log, Fn &&fn)
    -> decltype(fn()) {
  log << "[" << stage << "/5] " << name << "\n";
  try {
    return fn();
  } catch (const StageError &) {
    throw;
  } catch (const std::exception &e) {
    throw StageError(stage, name, e.what());
  }
}

std::string WriteFile(const fs::path &path,
                      const std::function<void(std::ostream &)> &body) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  body(out);
  if (!out) throw Error("write failed: " + path.string());
  return path.string();
}

}  // namespace

ReproduceResult Reproduce(const ReproduceOptions &opts, std::ostream &log) {
  int sources = !opts.ppl_csv.empty() + !opts.lm_model.empty() +
                !opts.lm_corpus.empty();
  if (sources != 1)
    throw Error("give exactly one of --ppl, --lm and --lm-corpus");
  if (opts.lexicon.empty()) throw Error("no lexicon given (--lexicon)");
  if (opts.out_dir.empty()) throw Error("no output directory given (--out)");

  ReproduceResult result;
  fs::path out(opts.out_dir);
  Lexicon lexicon = Lexicon::Load(opts.lexicon);

  PinData data;
  PinSummary summary;
  RunStage(1, "analyze", log, [&] {
    PinLoadOptions lo;
    lo.check_counts = opts.check_counts;
    data = LoadPin(opts.dataset_dir, lo);
    ScoreRecords(&data, lexicon, opts.jobs);
    summary = SummarizePin(data);
    fs::create_directories(out);
    for (auto &p : WriteAnalysisFiles(out.string(), data, summary))
      result.outputs.push_back(p);
    return 0;
  });

  FeatureIndex features;
  RunStage(2, "features", log, [&] {
    LoadedPpl ppl = !opts.ppl_csv.empty() ? LoadedPpl::Load(opts.ppl_csv)
                    : !opts.lm_model.empty()
                        ? LoadedPpl::Load(opts.lm_model)
                        : LoadedPpl::FromModel(NGramModel::Train(
                              ReadLmCorpus(opts.lm_corpus),
                              NGramOptions{opts.lm_order, {}}));
    result.external_ppl = ppl.external();
    auto v = ComputeFeatures(data, opts.dataset_dir, lexicon, ppl.source(),
                             opts.stoi_table, opts.jobs);
    result.outputs.push_back(WriteFile(
        out / "features.csv", [&](std::ostream &os) { WriteFeatureTable(os, v); }));
    features = IndexFeatures(v, data);
    return 0;
  });

  std::vector<RegressionResult> models;
  RunStage(3, "regress", log, [&] {
    for (Response r : {Response::kSentInt, Response::kGain})
      for (double snr : data.Snrs())
        models.push_back(
            RunRegression(data, features, r, snr, PinSubset::kAll, true));
    result.outputs.push_back(
        WriteFile(out / "regression.tsv", [&](std::ostream &os) {
          os << "response\tsnr\tterm\testimate\tstd_error\tt_value\tp_value\t"
                "n\tr_squared\n";
          for (const auto &m : models)
            for (const auto &c : m.fit.coefficients)
              os << ResponseName(m.response) << '\t' << FormatSnr(m.snr_db)
                 << '\t' << c.name << '\t' << FormatDouble(c.estimate) << '\t'
                 << FormatDouble(c.std_error) << '\t'
                 << FormatDouble(c.t_value) << '\t' << FormatDouble(c.p_value)
                 << '\t' << m.num_rows << '\t'
                 << FormatDouble(m.fit.r_squared) << "\n";
        }));
    return 0;
  });

  RankingTable table;
  RunStage(4, "eval-rank", log, [&] {
    EvalOptions eo = opts.eval;
    eo.jobs = opts.jobs;
    table = RunRankingTable(data, features, data.Snrs(), PinSubset::kAll, eo);
    result.outputs.push_back(WriteFile(
        out / "table4.tsv", [&](std::ostream &os) { WriteRankingTableTsv(os, table); }));
    result.outputs.push_back(WriteFile(
        out / "table4-runs.tsv", [&](std::ostream &os) { WriteRankingRunsTsv(os, table); }));
    return 0;
  });

  RunStage(5, "report", log, [&] {
    auto add = [&](std::vector<TargetCheck> v) {
      result.checks.insert(result.checks.end(), v.begin(), v.end());
    };
    add(CheckCorpusSummary(summary));
    add(CheckPairCounts(data));
    add(CheckRegressionSigns(models, result.external_ppl));
    add(CheckRankingTable(table, result.external_ppl));
    result.outputs.push_back(WriteFile(out / "report.tsv", [&](std::ostream &os) {
      os << "# ppl_source=" << (result.external_ppl ? "external" : "ngram")
         << "\n";
      WriteChecksTsv(os, result.checks);
    }));
    return 0;
  });
  return result;
}

}  // namespace pararank
