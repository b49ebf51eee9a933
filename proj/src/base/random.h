// base/random.h

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

#ifndef PARARANK_BASE_RANDOM_H_
#define PARARANK_BASE_RANDOM_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace pararank {

// Seeded generator whose derived draws do not depend on the standard
// library's distribution implementations, so sequences are identical
// across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform integer in [0, n); n > 0. Rejection sampling, no modulo bias.
  uint64_t UniformInt(uint64_t n);

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform();

  // Standard normal via Box-Muller.
  double Gaussian();

  template <typename T>
  void Shuffle(std::vector<T> *items) {
    for (size_t i = items->size(); i > 1; --i) {
      size_t j = static_cast<size_t>(UniformInt(i));
      std::swap((*items)[i - 1], (*items)[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace pararank

#endif  // PARARANK_BASE_RANDOM_H_
