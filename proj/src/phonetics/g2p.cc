// phonetics/g2p.cc

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

#include "phonetics/g2p.h"

#include <array>

#include "base/text-utils.h"

namespace pararank {

namespace {

constexpr std::array<const char *, 20> kOnes = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
constexpr std::array<const char *, 10> kTens = {
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
    "eighty", "ninety"};

void SpellBelowThousand(int n, std::vector<std::string> *out) {
  if (n >= 100) {
    out->push_back(kOnes[n / 100]);
    out->push_back("hundred");
    n %= 100;
    if (n == 0) return;
  }
  if (n >= 20) {
    out->push_back(kTens[n / 10]);
    if (n % 10 != 0) out->push_back(kOnes[n % 10]);
  } else {
    out->push_back(kOnes[n]);
  }
}

bool IsWordChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\'';
}

// Drops the "(...)" and "..." placeholders (and the UTF-8 ellipsis) by
// turning them into spaces.
std::string DropPlaceholders(std::string text) {
  for (const std::string_view pat : {std::string_view("(...)"),
                                     std::string_view("..."),
                                     std::string_view("\xE2\x80\xA6")}) {
    size_t pos;
    while ((pos = text.find(pat)) != std::string::npos)
      text.replace(pos, pat.size(), " ");
  }
  return text;
}

}  // namespace

std::vector<std::string> SpellNumber(std::string_view digits) {
  std::vector<std::string> out;
  if (digits.empty()) return out;
  if (digits.size() > 9) {
    for (char c : digits) out.push_back(kOnes[c - '0']);
    return out;
  }
  long n = 0;
  for (char c : digits) n = n * 10 + (c - '0');
  if (n == 0) {
    out.push_back("zero");
    return out;
  }
  const std::array<std::pair<long, const char *>, 2> scales = {
      std::pair<long, const char *>{1000000, "million"},
      std::pair<long, const char *>{1000, "thousand"}};
  for (const auto &[scale, name] : scales) {
    if (n >= scale) {
      SpellBelowThousand(static_cast<int>(n / scale), &out);
      out.push_back(name);
      n %= scale;
    }
  }
  if (n > 0) SpellBelowThousand(static_cast<int>(n), &out);
  return out;
}

std::vector<std::string> NormalizeWords(std::string_view text) {
  std::string lowered = DropPlaceholders(ToLower(text));
  size_t quote;
  while ((quote = lowered.find("\xE2\x80\x99")) != std::string::npos)
    lowered.replace(quote, 3, "'");
  for (char &c : lowered)
    if (c == '-' || c == '/') c = ' ';
  std::vector<std::string> words;
  for (const std::string &raw : SplitWhitespace(lowered)) {
    std::string tok;
    for (char c : raw)
      if (IsWordChar(c)) tok += c;
    // Quote marks around a word are not part of it.
    while (!tok.empty() && tok.front() == '\'') tok.erase(0, 1);
    while (!tok.empty() && tok.back() == '\'') tok.pop_back();
    if (tok.empty()) continue;
    // Separate digit runs from letter runs ("2nd" -> "two", "nd").
    size_t i = 0;
    while (i < tok.size()) {
      bool digit = tok[i] >= '0' && tok[i] <= '9';
      size_t j = i;
      while (j < tok.size() && ((tok[j] >= '0' && tok[j] <= '9') == digit)) ++j;
      std::string piece = tok.substr(i, j - i);
      if (digit) {
        for (auto &w : SpellNumber(piece)) words.push_back(std::move(w));
      } else {
        words.push_back(std::move(piece));
      }
      i = j;
    }
  }
  return words;
}

PhonemeSequence G2p(std::string_view text, const Lexicon &lexicon) {
  PhonemeSequence seq;
  seq.source_text = std::string(text);
  for (const std::string &word : NormalizeWords(text)) {
    const std::vector<Phoneme> *pron = lexicon.Find(word);
    if (pron != nullptr) {
      seq.phonemes.insert(seq.phonemes.end(), pron->begin(), pron->end());
      continue;
    }
    std::vector<Phoneme> guessed = lexicon.rules().Apply(word);
    seq.phonemes.insert(seq.phonemes.end(), guessed.begin(), guessed.end());
  }
  return seq;
}

}  // namespace pararank
