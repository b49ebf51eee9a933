// lm/external-ppl.h

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

#ifndef PARARANK_LM_EXTERNAL_PPL_H_
#define PARARANK_LM_EXTERNAL_PPL_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace pararank {

struct PplRecord {
  std::string utterance_id;
  double ppl = 0.0;
};

// Reads a CSV with columns utterance_id,ppl (extra columns are ignored).
// Perplexities must be finite and positive; ids must be unique.
std::vector<PplRecord> LoadExternalPpl(const std::string &path);
std::vector<PplRecord> ParseExternalPpl(std::istream &is,
                                        const std::string &source);

}  // namespace pararank

#endif  // PARARANK_LM_EXTERNAL_PPL_H_
