// lm/ngram-model.cc

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

#include "lm/ngram-model.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "base/pararank-error.h"
#include "base/text-utils.h"

namespace pararank {

size_t NGramModel::VecHash::operator()(const std::vector<int> &v) const {
  size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

NGramModel NGramModel::Train(
    const std::vector<std::vector<std::string>> &corpus,
    const NGramOptions &opts) {
  if (opts.order < 1) throw Error("n-gram order must be >= 1");
  if (!opts.discounts.empty() &&
      static_cast<int>(opts.discounts.size()) != opts.order)
    throw Error("need one discount per order");

  NGramModel m;
  m.order_ = opts.order;
  std::set<std::string> types;
  size_t num_sentences = 0;
  for (const auto &s : corpus) {
    if (s.empty()) continue;
    ++num_sentences;
    for (const auto &w : s) {
      if (w == "<s>" || w == "</s>" || w == "<unk>")
        throw Error("reserved token in corpus: " + w);
      if (w.empty() || w.find_first_of(" \t\n\r") != std::string::npos)
        throw Error("corpus token is empty or contains whitespace");
      types.insert(w);
    }
  }
  if (num_sentences == 0) throw Error("empty corpus");

  m.words_ = {"<unk>", "</s>", "<s>"};
  m.words_.insert(m.words_.end(), types.begin(), types.end());
  for (size_t i = 0; i < m.words_.size(); ++i)
    m.ids_[m.words_[i]] = static_cast<int>(i);

  m.raw_.assign(m.order_, CountMap());
  std::vector<int> seq;
  for (const auto &s : corpus) {
    if (s.empty()) continue;
    seq.assign(1, kBos);
    for (const auto &w : s) seq.push_back(m.ids_.at(w));
    seq.push_back(kEos);
    for (size_t j = 1; j < seq.size(); ++j) {
      for (int k = 1; k <= m.order_ && static_cast<size_t>(k) <= j + 1; ++k) {
        std::vector<int> gram(seq.begin() + (j + 1 - k), seq.begin() + j + 1);
        ++m.raw_[k - 1][gram];
      }
    }
  }
  m.Finalize(opts.discounts);
  return m;
}

void NGramModel::Finalize(const std::vector<double> &discounts) {
  adjusted_.assign(order_, CountMap());
  adjusted_[order_ - 1] = raw_[order_ - 1];
  for (int k = order_ - 1; k >= 1; --k) {
    CountMap &adj = adjusted_[k - 1];
    for (const auto &[gram, count] : raw_[k - 1])
      if (gram[0] == kBos) adj[gram] = count;
    // Continuation count: distinct left extensions in the raw (k+1)-grams.
    for (const auto &entry : raw_[k]) {
      const std::vector<int> &longer = entry.first;
      std::vector<int> suffix(longer.begin() + 1, longer.end());
      ++adj[suffix];
    }
  }

  discounts_ = discounts;
  if (discounts_.empty()) {
    for (int k = 1; k <= order_; ++k) {
      long long n1 = 0, n2 = 0;
      for (const auto &entry : adjusted_[k - 1]) {
        if (entry.second == 1) ++n1;
        if (entry.second == 2) ++n2;
      }
      discounts_.push_back(n1 == 0 ? 0.5
                                   : static_cast<double>(n1) / (n1 + 2 * n2));
    }
  }
  for (double d : discounts_)
    if (!(d >= 0.0 && d <= 1.0)) throw Error("discount outside [0, 1]");

  contexts_.assign(order_, ContextMap());
  for (int k = 1; k <= order_; ++k) {
    for (const auto &[gram, count] : adjusted_[k - 1]) {
      std::vector<int> ctx(gram.begin(), gram.end() - 1);
      ContextStats &st = contexts_[k - 1][ctx];
      st.total += count;
      st.types += 1;
    }
  }
}

int NGramModel::Id(const std::string &word) const {
  auto it = ids_.find(word);
  return it == ids_.end() ? kUnk : it->second;
}

double NGramModel::Prob(int token, const std::vector<int> &context) const {
  if (token < 0 || token >= static_cast<int>(words_.size()) || token == kBos)
    throw Error("token id cannot be predicted");
  size_t hist = std::min(context.size(), static_cast<size_t>(order_ - 1));
  double p = 1.0 / num_predictable();
  std::vector<int> key;
  for (size_t k = 1; k <= hist + 1; ++k) {
    key.assign(context.end() - (k - 1), context.end());
    auto cit = contexts_[k - 1].find(key);
    if (cit == contexts_[k - 1].end()) continue;
    const ContextStats &st = cit->second;
    key.push_back(token);
    auto git = adjusted_[k - 1].find(key);
    long long c = git == adjusted_[k - 1].end() ? 0 : git->second;
    double d = discounts_[k - 1];
    double total = static_cast<double>(st.total);
    p = std::max(c - d, 0.0) / total + d * st.types / total * p;
  }
  return p;
}

double NGramModel::LogProb(const std::string &token,
                           const std::vector<std::string> &context) const {
  std::vector<int> ctx;
  ctx.reserve(context.size());
  for (const auto &w : context) ctx.push_back(Id(w));
  return std::log(Prob(Id(token), ctx));
}

double NGramModel::Perplexity(const std::vector<std::string> &tokens) const {
  if (tokens.empty()) throw Error("empty utterance");
  std::vector<int> hist{kBos};
  double sum = 0.0;
  for (const auto &w : tokens) {
    int id = Id(w);
    sum += std::log(Prob(id, hist));
    hist.push_back(id);
  }
  return std::exp(-sum / static_cast<double>(tokens.size()));
}

void NGramModel::Write(std::ostream &os) const {
  os << "pararank-ngram " << kVersion << "\n";
  os << "order " << order_ << "\n";
  os << "discounts";
  for (double d : discounts_) os << ' ' << FormatDouble(d);
  os << "\nvocab " << words_.size() << "\n";
  for (const auto &w : words_) os << w << "\n";
  for (int k = 1; k <= order_; ++k) {
    std::vector<std::pair<std::vector<int>, long long>> grams(
        raw_[k - 1].begin(), raw_[k - 1].end());
    std::sort(grams.begin(), grams.end());
    os << "ngrams " << k << ' ' << grams.size() << "\n";
    for (const auto &[gram, count] : grams) {
      for (int id : gram) os << id << ' ';
      os << count << "\n";
    }
  }
  if (!os) throw Error("failed writing n-gram model");
}

namespace {

std::string ExpectLine(std::istream &is, const char *what) {
  std::string line;
  if (!std::getline(is, line))
    throw Error(std::string("n-gram model truncated before ") + what);
  return line;
}

std::vector<std::string> ExpectFields(std::istream &is, const char *keyword,
                                      size_t min_fields) {
  auto f = SplitWhitespace(ExpectLine(is, keyword));
  if (f.size() < min_fields || f[0] != keyword)
    throw Error(std::string("n-gram model: expected '") + keyword + "'");
  return f;
}

}  // namespace

NGramModel NGramModel::Read(std::istream &is) {
  auto magic = ExpectFields(is, "pararank-ngram", 2);
  if (ParseInt(magic[1], "model version") != kVersion)
    throw Error("unsupported n-gram model version " + magic[1]);
  NGramModel m;
  m.order_ = static_cast<int>(
      ParseInt(ExpectFields(is, "order", 2)[1], "order"));
  if (m.order_ < 1) throw Error("n-gram model: bad order");
  auto dl = ExpectFields(is, "discounts", 1);
  if (static_cast<int>(dl.size()) != m.order_ + 1)
    throw Error("n-gram model: discount count does not match order");
  std::vector<double> discounts;
  for (size_t i = 1; i < dl.size(); ++i)
    discounts.push_back(ParseDouble(dl[i], "discount"));
  long long nv = ParseInt(ExpectFields(is, "vocab", 2)[1], "vocab size");
  if (nv < 3) throw Error("n-gram model: vocabulary too small");
  for (long long i = 0; i < nv; ++i) {
    std::string w = Trim(ExpectLine(is, "vocabulary entry"));
    if (w.empty()) throw Error("n-gram model: empty vocabulary entry");
    if (!m.ids_.emplace(w, static_cast<int>(i)).second)
      throw Error("n-gram model: duplicate vocabulary entry " + w);
    m.words_.push_back(w);
  }
  if (m.words_[kUnk] != "<unk>" || m.words_[kEos] != "</s>" ||
      m.words_[kBos] != "<s>")
    throw Error("n-gram model: reserved symbols out of place");
  m.raw_.assign(m.order_, CountMap());
  for (int k = 1; k <= m.order_; ++k) {
    auto hdr = ExpectFields(is, "ngrams", 3);
    if (ParseInt(hdr[1], "n-gram order") != k)
      throw Error("n-gram model: n-gram sections out of order");
    long long n = ParseInt(hdr[2], "n-gram count");
    for (long long i = 0; i < n; ++i) {
      auto f = SplitWhitespace(ExpectLine(is, "n-gram entry"));
      if (static_cast<int>(f.size()) != k + 1)
        throw Error("n-gram model: malformed " + std::to_string(k) +
                    "-gram entry");
      std::vector<int> gram;
      for (int j = 0; j < k; ++j) {
        long long id = ParseInt(f[j], "token id");
        if (id < 0 || id >= nv) throw Error("n-gram model: token id range");
        gram.push_back(static_cast<int>(id));
      }
      long long count = ParseInt(f[k], "n-gram count");
      if (count < 1) throw Error("n-gram model: non-positive count");
      m.raw_[k - 1][gram] = count;
    }
  }
  m.Finalize(discounts);
  return m;
}

NGramModel NGramModel::Load(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open n-gram model " + path);
  try {
    return Read(is);
  } catch (const Error &e) {
    throw Error(path + ": " + e.what());
  }
}

void NGramModel::Save(const std::string &path) const {
  std::ofstream os(path);
  if (!os) throw Error("cannot write n-gram model " + path);
  Write(os);
}

}  // namespace pararank
