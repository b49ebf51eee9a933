// audio/waveform.h

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

#ifndef PARARANK_AUDIO_WAVEFORM_H_
#define PARARANK_AUDIO_WAVEFORM_H_

#include <span>
#include <vector>

namespace pararank {

// Mono signal with its sampling rate. Samples are nominally in [-1, 1]
// (full scale); the constructor enforces a positive rate and finite values.
class Waveform {
 public:
  Waveform() = default;
  Waveform(int sample_rate, std::vector<double> samples);

  int sample_rate() const { return sample_rate_; }
  const std::vector<double> &samples() const { return samples_; }
  std::span<const double> view() const { return samples_; }
  size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  double duration_seconds() const {
    return static_cast<double>(samples_.size()) / sample_rate_;
  }

 private:
  int sample_rate_ = 1;
  std::vector<double> samples_;
};

}  // namespace pararank

#endif  // PARARANK_AUDIO_WAVEFORM_H_
