// lm/ngram-model.h

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

#ifndef PARARANK_LM_NGRAM_MODEL_H_
#define PARARANK_LM_NGRAM_MODEL_H_

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace pararank {

struct NGramOptions {
  int order = 3;
  // Per-order absolute discounts, lowest order first. Empty means estimate
  // each as n1 / (n1 + 2 n2) from the count-of-counts. Values must lie in
  // [0, 1]; 0 turns smoothing off at that order.
  std::vector<double> discounts;
};

// Interpolated Kneser-Ney n-gram model over a closed vocabulary plus a
// single <unk> type. Sentences are wrapped as <s> w1 .. wn </s>; <s> is
// only ever conditioned on, never predicted. The lowest order interpolates
// with the uniform distribution over all predictable types (words, </s>,
// <unk>), so every probability is positive when all discounts are.
//
// Immutable after construction; concurrent scoring is safe.
class NGramModel {
 public:
  static constexpr int kVersion = 1;
  static constexpr int kUnk = 0;
  static constexpr int kEos = 1;
  static constexpr int kBos = 2;

  // Each sentence is a token list without boundary symbols. Empty sentences
  // are skipped; throws if nothing remains.
  static NGramModel Train(const std::vector<std::vector<std::string>> &corpus,
                          const NGramOptions &opts);

  static NGramModel Read(std::istream &is);
  static NGramModel Load(const std::string &path);
  void Write(std::ostream &os) const;
  void Save(const std::string &path) const;

  int order() const { return order_; }
  const std::vector<double> &discounts() const { return discounts_; }
  // Includes <unk>, </s> and <s>.
  const std::vector<std::string> &vocab() const { return words_; }
  // Number of types that can be predicted (vocab minus <s>).
  int num_predictable() const { return static_cast<int>(words_.size()) - 1; }

  int Id(const std::string &word) const;

  // Natural-log probability of `token` after `context`; only the last
  // order-1 context tokens are used. Out-of-vocabulary words map to <unk>.
  double LogProb(const std::string &token,
                 const std::vector<std::string> &context) const;
  double Prob(int token, const std::vector<int> &context) const;

  // exp(-(1/t) sum_i log p(u_i | <s> u_1 .. u_{i-1})) over the t tokens.
  // </s> is not scored and does not count towards t. Throws on empty input.
  double Perplexity(const std::vector<std::string> &tokens) const;

 private:
  struct VecHash {
    size_t operator()(const std::vector<int> &v) const;
  };
  using CountMap = std::unordered_map<std::vector<int>, long long, VecHash>;
  struct ContextStats {
    long long total = 0;
    long long types = 0;
  };
  using ContextMap =
      std::unordered_map<std::vector<int>, ContextStats, VecHash>;

  NGramModel() = default;
  void Finalize(const std::vector<double> &discounts);

  int order_ = 0;
  std::vector<std::string> words_;
  std::unordered_map<std::string, int> ids_;
  std::vector<double> discounts_;
  // raw_[k - 1]: raw counts of k-grams; adjusted_[k - 1]: the counts used
  // for estimation (continuation counts below the top order, except for
  // n-grams starting with <s>).
  std::vector<CountMap> raw_;
  std::vector<CountMap> adjusted_;
  std::vector<ContextMap> contexts_;
};

}  // namespace pararank

#endif  // PARARANK_LM_NGRAM_MODEL_H_
