// phonetics/phoneme.h

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

#ifndef PARARANK_PHONETICS_PHONEME_H_
#define PARARANK_PHONETICS_PHONEME_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pararank {

// The 39-symbol stress-free ARPAbet inventory (CMU dictionary phone set).
enum class Phoneme : uint8_t {
  kAA, kAE, kAH, kAO, kAW, kAY, kB, kCH, kD, kDH, kEH, kER, kEY,
  kF, kG, kHH, kIH, kIY, kJH, kK, kL, kM, kN, kNG, kOW, kOY,
  kP, kR, kS, kSH, kT, kTH, kUH, kUW, kV, kW, kY, kZ, kZH
};

inline constexpr int kNumPhonemes = 39;

std::string_view PhonemeName(Phoneme p);

// Parses a bare ARPAbet symbol ("AH"). Lexical stress digits are not
// accepted here; see ParseArpabet.
std::optional<Phoneme> ParsePhoneme(std::string_view symbol);

// Parses a dictionary symbol, dropping a trailing stress digit ("AH0").
std::optional<Phoneme> ParseArpabet(std::string_view symbol);

// The phonemic transcript of one utterance: a flat sequence with no word
// boundary markers.
struct PhonemeSequence {
  std::vector<Phoneme> phonemes;
  std::string source_text;

  size_t size() const { return phonemes.size(); }
  bool empty() const { return phonemes.empty(); }

  // Space-separated symbols.
  std::string ToString() const;

  // Parses space-separated symbols; stress digits are stripped and the
  // readability dashes used in printed transcripts are ignored. Throws on an
  // unknown symbol.
  static PhonemeSequence FromString(std::string_view symbols);
};

}  // namespace pararank

#endif  // PARARANK_PHONETICS_PHONEME_H_
