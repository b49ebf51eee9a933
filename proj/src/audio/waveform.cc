// audio/waveform.cc

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

#include "audio/waveform.h"

#include <cmath>
#include <string>

#include "base/pararank-error.h"

namespace pararank {

Waveform::Waveform(int sample_rate, std::vector<double> samples)
    : sample_rate_(sample_rate), samples_(std::move(samples)) {
  if (sample_rate_ <= 0)
    throw Error("sample rate must be positive, got " +
                std::to_string(sample_rate_));
  for (size_t i = 0; i < samples_.size(); ++i)
    if (!std::isfinite(samples_[i]))
      throw Error("non-finite sample at index " + std::to_string(i));
}

}  // namespace pararank
