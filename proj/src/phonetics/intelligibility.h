// phonetics/intelligibility.h

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

#ifndef PARARANK_PHONETICS_INTELLIGIBILITY_H_
#define PARARANK_PHONETICS_INTELLIGIBILITY_H_

#include <compare>
#include <cstdint>
#include <vector>

#include "phonetics/phoneme.h"

namespace pararank {

// Phoneme recognition rate of one listening instance:
//   1 - Lev(target, perceived) / |target|,
// clamped below at 0 so that long spurious transcripts cannot push the
// score negative. Throws on an empty target ("undefined recognition rate").
double RecogRate(const PhonemeSequence &target,
                 const PhonemeSequence &perceived);

// Non-negative rational number with exact ordering.
struct Fraction {
  int64_t numerator = 0;
  int64_t denominator = 1;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  friend bool operator==(const Fraction &a, const Fraction &b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
  }
  friend std::strong_ordering operator<=>(const Fraction &a,
                                          const Fraction &b) {
    return a.numerator * b.denominator <=> b.numerator * a.denominator;
  }
};

// Sentence-level intelligibility: the mean recognition rate over the
// listeners' transcripts. Every rate is a rational with denominator
// |target|, so the mean is kept exact; paraphrase orderings compare these
// values without an epsilon. Throws on an empty listener list.
Fraction SentIntExact(const PhonemeSequence &target,
                      const std::vector<PhonemeSequence> &perceived);

inline double SentInt(const PhonemeSequence &target,
                      const std::vector<PhonemeSequence> &perceived) {
  return SentIntExact(target, perceived).value();
}

}  // namespace pararank

#endif  // PARARANK_PHONETICS_INTELLIGIBILITY_H_
