// phonetics/edit-distance.h

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

#ifndef PARARANK_PHONETICS_EDIT_DISTANCE_H_
#define PARARANK_PHONETICS_EDIT_DISTANCE_H_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "phonetics/phoneme.h"

namespace pararank {

// Unit-cost Levenshtein distance (insertions, deletions, substitutions).
// Two-row dynamic program, O(|a|·|b|) time and O(|b|) memory.
template <typename T>
size_t LevenshteinDistance(std::span<const T> a, std::span<const T> b) {
  std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), size_t{0});
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

inline size_t LevenshteinDistance(const PhonemeSequence &a,
                                  const PhonemeSequence &b) {
  return LevenshteinDistance<Phoneme>(a.phonemes, b.phonemes);
}

}  // namespace pararank

#endif  // PARARANK_PHONETICS_EDIT_DISTANCE_H_
