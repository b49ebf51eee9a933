// lm/tokenizer.cc

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

#include "lm/tokenizer.h"

#include <cctype>

namespace pararank {

namespace {

bool IsTokenChar(unsigned char c) {
  return std::isalnum(c) || c >= 0x80;
}

void Flush(std::string *cur, std::vector<std::string> *out) {
  while (!cur->empty() && cur->back() == '\'') cur->pop_back();
  if (!cur->empty()) out->push_back(*cur);
  cur->clear();
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (IsTokenChar(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (c == '\'' && !cur.empty() && i + 1 < text.size() &&
               IsTokenChar(static_cast<unsigned char>(text[i + 1]))) {
      cur.push_back('\'');
    } else {
      Flush(&cur, &out);
    }
  }
  Flush(&cur, &out);
  return out;
}

}  // namespace pararank
