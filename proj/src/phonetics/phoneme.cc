// phonetics/phoneme.cc

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

#include "phonetics/phoneme.h"

#include <array>

#include "base/pararank-error.h"
#include "base/text-utils.h"

namespace pararank {

namespace {

constexpr std::array<std::string_view, kNumPhonemes> kNames = {
    "AA", "AE", "AH", "AO", "AW", "AY", "B",  "CH", "D",  "DH",
    "EH", "ER", "EY", "F",  "G",  "HH", "IH", "IY", "JH", "K",
    "L",  "M",  "N",  "NG", "OW", "OY", "P",  "R",  "S",  "SH",
    "T",  "TH", "UH", "UW", "V",  "W",  "Y",  "Z",  "ZH"};

}  // namespace

std::string_view PhonemeName(Phoneme p) {
  return kNames[static_cast<size_t>(p)];
}

std::optional<Phoneme> ParsePhoneme(std::string_view symbol) {
  for (size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == symbol) return static_cast<Phoneme>(i);
  return std::nullopt;
}

std::optional<Phoneme> ParseArpabet(std::string_view symbol) {
  if (!symbol.empty() && symbol.back() >= '0' && symbol.back() <= '2')
    symbol.remove_suffix(1);
  return ParsePhoneme(symbol);
}

std::string PhonemeSequence::ToString() const {
  std::string out;
  for (size_t i = 0; i < phonemes.size(); ++i) {
    if (i > 0) out += ' ';
    out += PhonemeName(phonemes[i]);
  }
  return out;
}

PhonemeSequence PhonemeSequence::FromString(std::string_view symbols) {
  PhonemeSequence seq;
  seq.source_text = std::string(symbols);
  for (const std::string &tok : SplitWhitespace(symbols)) {
    if (tok == "-") continue;
    auto p = ParseArpabet(tok);
    if (!p) throw Error("unknown ARPAbet symbol '" + tok + "'");
    seq.phonemes.push_back(*p);
  }
  return seq;
}

}  // namespace pararank
