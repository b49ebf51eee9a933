// phonetics/g2p.h

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

#ifndef PARARANK_PHONETICS_G2P_H_
#define PARARANK_PHONETICS_G2P_H_

#include <string>
#include <string_view>
#include <vector>

#include "phonetics/lexicon.h"
#include "phonetics/phoneme.h"

namespace pararank {

// Splits a sentence or listener transcript into lexicon keys: lowercased,
// split at whitespace, hyphens and slashes, punctuation stripped (inner
// apostrophes kept), unintelligible-word placeholders ("(...)", "...")
// dropped, and digit runs spelled out as English number words.
std::vector<std::string> NormalizeWords(std::string_view text);

// Grapheme-to-phoneme conversion of a whole utterance. In-lexicon words
// take their first pronunciation; other words go through the letter rules.
// Word pronunciations are concatenated without boundary symbols.
PhonemeSequence G2p(std::string_view text, const Lexicon &lexicon);

// "0" -> "zero", "1995" -> "one thousand nine hundred ninety five".
// Digit strings longer than nine digits are read digit by digit.
std::vector<std::string> SpellNumber(std::string_view digits);

}  // namespace pararank

#endif  // PARARANK_PHONETICS_G2P_H_
