// phonetics/intelligibility.cc

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

#include "phonetics/intelligibility.h"

#include <algorithm>

#include "base/pararank-error.h"
#include "phonetics/edit-distance.h"

namespace pararank {

namespace {

// |target| - Lev, floored at zero: the numerator of the clamped rate.
int64_t RecognizedCount(const PhonemeSequence &target,
                        const PhonemeSequence &perceived) {
  if (target.empty())
    throw Error("undefined recognition rate: empty target transcript '" +
                target.source_text + "'");
  int64_t n = static_cast<int64_t>(target.size());
  int64_t lev = static_cast<int64_t>(LevenshteinDistance(target, perceived));
  return std::max<int64_t>(0, n - lev);
}

}  // namespace

double RecogRate(const PhonemeSequence &target,
                 const PhonemeSequence &perceived) {
  return static_cast<double>(RecognizedCount(target, perceived)) /
         static_cast<double>(target.size());
}

Fraction SentIntExact(const PhonemeSequence &target,
                      const std::vector<PhonemeSequence> &perceived) {
  if (perceived.empty())
    throw Error("sentence intelligibility needs at least one listener");
  int64_t sum = 0;
  for (const auto &p : perceived) sum += RecognizedCount(target, p);
  return Fraction{sum, static_cast<int64_t>(target.size()) *
                           static_cast<int64_t>(perceived.size())};
}

}  // namespace pararank
