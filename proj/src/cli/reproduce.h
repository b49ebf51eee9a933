// cli/reproduce.h

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

#ifndef PARARANK_CLI_REPRODUCE_H_
#define PARARANK_CLI_REPRODUCE_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "base/pararank-error.h"
#include "cli/published-targets.h"

namespace pararank {

struct ReproduceOptions {
  std::string dataset_dir;
  std::string lexicon;
  std::string out_dir;
  // Exactly one perplexity source: a utterance_id,ppl CSV, an n-gram model
  // file, or a text corpus to train a model on.
  std::string ppl_csv;
  std::string lm_model;
  std::string lm_corpus;
  int lm_order = 3;
  std::string stoi_table;  // optional; audio under the dataset otherwise
  bool check_counts = true;
  EvalOptions eval;
  int jobs = 0;
};

// Thrown when a stage fails; what() names the stage.
class StageError : public Error {
 public:
  StageError(int stage, const std::string &stage_name,
             const std::string &message)
      : Error("stage " + std::to_string(stage) + " (" + stage_name +
              ") failed: " + message),
        stage_(stage) {}
  int stage() const { return stage_; }

 private:
  int stage_;
};

struct ReproduceResult {
  bool external_ppl = false;
  std::vector<TargetCheck> checks;
  std::vector<std::string> outputs;
};

// analyze -> features -> regress (Sent-Int and gain at every SNR) ->
// eval-rank, then compares against the published targets. Writes every
// intermediate table plus report.tsv into out_dir; progress goes to `log`.
ReproduceResult Reproduce(const ReproduceOptions &opts, std::ostream &log);

}  // namespace pararank

#endif  // PARARANK_CLI_REPRODUCE_H_
