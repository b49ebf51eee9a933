// phonetics/lexicon.h

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

#ifndef PARARANK_PHONETICS_LEXICON_H_
#define PARARANK_PHONETICS_LEXICON_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "phonetics/phoneme.h"

namespace pararank {

// Longest-match letter-to-phoneme rules used for out-of-vocabulary words.
class LetterRules {
 public:
  // Rule file format: "<graphemes> <phonemes...>", ';;;' comments, '-' for
  // silent graphemes, trailing '$' anchors to the word end.
  static LetterRules Parse(std::istream &is, const std::string &source);
  static LetterRules Load(const std::string &path);

  // The rule table shipped in data/g2p/letter-rules.txt, compiled in.
  static const LetterRules &Default();

  // Converts the letters a-z of `word`; any other byte is skipped.
  std::vector<Phoneme> Apply(std::string_view word) const;

  size_t size() const { return rules_.size(); }

 private:
  struct Rule {
    std::string graphemes;
    bool anchored_end = false;
    std::vector<Phoneme> phonemes;
  };
  // Sorted longest-first, anchored before unanchored at equal length.
  std::vector<Rule> rules_;
};

// Pronouncing dictionary in CMU format: "WORD  PH1 PH2 ...", where alternate
// pronunciations are written "WORD(2)". Lookups are case-insensitive on
// punctuation-stripped keys and return the first pronunciation listed.
class Lexicon {
 public:
  explicit Lexicon(LetterRules rules = LetterRules::Default())
      : rules_(std::move(rules)) {}

  static Lexicon Parse(std::istream &is, const std::string &source,
                       LetterRules rules = LetterRules::Default());
  static Lexicon Load(const std::string &path,
                      LetterRules rules = LetterRules::Default());

  // Adds a pronunciation unless the key already has one. Entries spelled
  // with punctuation ("i.s") only answer lookups that no plain entry ("is")
  // answers.
  void Add(std::string_view word, std::vector<Phoneme> pronunciation);

  // nullptr when the word is not in the dictionary.
  const std::vector<Phoneme> *Find(std::string_view word) const;

  const LetterRules &rules() const { return rules_; }
  size_t size() const { return entries_.size() + stripped_entries_.size(); }

  // Lowercases and keeps only [a-z0-9'].
  static std::string NormalizeKey(std::string_view word);

 private:
  LetterRules rules_;
  std::unordered_map<std::string, std::vector<Phoneme>> entries_;
  std::unordered_map<std::string, std::vector<Phoneme>> stripped_entries_;
};

}  // namespace pararank

#endif  // PARARANK_PHONETICS_LEXICON_H_
