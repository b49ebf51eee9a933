// phonetics/lexicon.cc

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

#include "phonetics/lexicon.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "base/pararank-error.h"
#include "base/text-utils.h"

namespace pararank {

extern const char kDefaultLetterRules[];

LetterRules LetterRules::Parse(std::istream &is, const std::string &source) {
  LetterRules out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::vector<std::string> toks = SplitWhitespace(line);
    if (toks.empty() || toks[0].rfind(";;;", 0) == 0) continue;
    if (toks.size() < 2)
      throw Error(source + ":" + std::to_string(lineno) +
                  ": rule needs graphemes and phonemes");
    Rule rule;
    rule.graphemes = ToLower(toks[0]);
    if (rule.graphemes.size() > 1 && rule.graphemes.back() == '$') {
      rule.anchored_end = true;
      rule.graphemes.pop_back();
    }
    for (char c : rule.graphemes)
      if (c < 'a' || c > 'z')
        throw Error(source + ":" + std::to_string(lineno) +
                    ": graphemes must be letters a-z");
    if (!(toks.size() == 2 && toks[1] == "-")) {
      for (size_t i = 1; i < toks.size(); ++i) {
        auto p = ParseArpabet(toks[i]);
        if (!p)
          throw Error(source + ":" + std::to_string(lineno) +
                      ": unknown phoneme '" + toks[i] + "'");
        rule.phonemes.push_back(*p);
      }
    }
    out.rules_.push_back(std::move(rule));
  }
  std::stable_sort(out.rules_.begin(), out.rules_.end(),
                   [](const Rule &a, const Rule &b) {
                     if (a.graphemes.size() != b.graphemes.size())
                       return a.graphemes.size() > b.graphemes.size();
                     return a.anchored_end && !b.anchored_end;
                   });
  return out;
}

LetterRules LetterRules::Load(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open letter rules " + path);
  return Parse(is, path);
}

const LetterRules &LetterRules::Default() {
  static const LetterRules rules = [] {
    std::istringstream is(kDefaultLetterRules);
    return Parse(is, "<builtin letter rules>");
  }();
  return rules;
}

std::vector<Phoneme> LetterRules::Apply(std::string_view word) const {
  std::string letters;
  for (char c : ToLower(word))
    if (c >= 'a' && c <= 'z') letters += c;
  std::vector<Phoneme> out;
  size_t pos = 0;
  while (pos < letters.size()) {
    const Rule *match = nullptr;
    for (const Rule &r : rules_) {
      size_t len = r.graphemes.size();
      if (pos + len > letters.size()) continue;
      if (r.anchored_end && pos + len != letters.size()) continue;
      if (letters.compare(pos, len, r.graphemes) == 0) {
        match = &r;
        break;
      }
    }
    if (match == nullptr) {
      ++pos;  // letter without any rule: silent
      continue;
    }
    out.insert(out.end(), match->phonemes.begin(), match->phonemes.end());
    pos += match->graphemes.size();
  }
  return out;
}

std::string Lexicon::NormalizeKey(std::string_view word) {
  std::string key;
  for (char c : ToLower(word))
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\'')
      key += c;
  return key;
}

void Lexicon::Add(std::string_view word, std::vector<Phoneme> pronunciation) {
  std::string key = NormalizeKey(word);
  if (key.empty()) return;
  auto &table = key == ToLower(word) ? entries_ : stripped_entries_;
  table.try_emplace(std::move(key), std::move(pronunciation));
}

const std::vector<Phoneme> *Lexicon::Find(std::string_view word) const {
  std::string key = NormalizeKey(word);
  auto it = entries_.find(key);
  if (it != entries_.end()) return &it->second;
  it = stripped_entries_.find(key);
  return it == stripped_entries_.end() ? nullptr : &it->second;
}

Lexicon Lexicon::Parse(std::istream &is, const std::string &source,
                       LetterRules rules) {
  Lexicon lex(std::move(rules));
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.rfind(";;;", 0) == 0) continue;
    size_t hash = line.find(" #");
    if (hash != std::string::npos) line.resize(hash);
    std::vector<std::string> toks = SplitWhitespace(line);
    if (toks.empty()) continue;
    std::string word = toks[0];
    // Strip an alternate-pronunciation marker "(2)".
    size_t paren = word.find('(');
    if (paren != std::string::npos && paren > 0 && word.back() == ')')
      word.resize(paren);
    std::vector<Phoneme> pron;
    pron.reserve(toks.size() - 1);
    for (size_t i = 1; i < toks.size(); ++i) {
      auto p = ParseArpabet(toks[i]);
      if (!p)
        throw Error(source + ":" + std::to_string(lineno) +
                    ": unknown phoneme '" + toks[i] + "'");
      pron.push_back(*p);
    }
    if (pron.empty())
      throw Error(source + ":" + std::to_string(lineno) +
                  ": entry without pronunciation");
    lex.Add(word, std::move(pron));
  }
  if (lex.size() == 0) throw Error(source + ": lexicon has no entries");
  return lex;
}

Lexicon Lexicon::Load(const std::string &path, LetterRules rules) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open lexicon " + path);
  return Parse(is, path, std::move(rules));
}

}  // namespace pararank
