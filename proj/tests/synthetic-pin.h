// tests/synthetic-pin.h

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

#ifndef PARARANK_TESTS_SYNTHETIC_PIN_H_
#define PARARANK_TESTS_SYNTHETIC_PIN_H_

#include <cstdint>
#include <string>

namespace pararank {

struct SyntheticPinOptions {
  uint64_t seed = 1;
  int triplets_per_snr = 100;
  // Annotator flags reproduce the published subset sizes; needs 100
  // triplets per SNR.
  bool published_annotations = true;
  // Writes clean/<id>.wav and noisy/<id>.wav (10 kHz) plus noise.wav.
  bool with_audio = false;
  // Writes features.csv (STOI drawn, not measured) and ppl.csv.
  bool with_features = true;
  // Writes lm-corpus.txt, one sentence per line.
  bool with_lm_corpus = true;
};

// Writes a PiN-shaped corpus into `dir` (created if needed): records.tsv,
// annotations.tsv and the optional side files. Listener transcripts are
// drawn from a latent intelligibility that rises with STOI and falls with
// phoneme length and perplexity, so the usual analyses have signal.
void WriteSyntheticPin(const std::string &dir, const SyntheticPinOptions &opts);

}  // namespace pararank

#endif  // PARARANK_TESTS_SYNTHETIC_PIN_H_
