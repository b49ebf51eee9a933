// lm/tokenizer.h

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

#ifndef PARARANK_LM_TOKENIZER_H_
#define PARARANK_LM_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace pararank {

// Lowercases and splits on whitespace and punctuation. Letters, digits,
// bytes >= 0x80 and word-internal apostrophes are token characters;
// everything else separates tokens and is dropped. "Don't stop!" gives
// {"don't", "stop"}.
std::vector<std::string> Tokenize(std::string_view text);

}  // namespace pararank

#endif  // PARARANK_LM_TOKENIZER_H_
