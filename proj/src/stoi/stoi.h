// stoi/stoi.h

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

#ifndef PARARANK_STOI_STOI_H_
#define PARARANK_STOI_STOI_H_

#include <utility>
#include <vector>

#include "audio/waveform.h"

namespace pararank {

// Constants of the short-time objective intelligibility measure. These are
// part of the score's definition; changing any of them changes what the
// number means, so the struct carries a version.
struct StoiConfig {
  static constexpr int kVersion = 1;

  int target_rate = 10000;           // Hz
  int frame_len = 256;               // samples
  int frame_hop = 128;               // samples, frame_len / 2
  int fft_len = 512;
  int num_bands = 15;
  double lowest_center_freq = 150.0;  // Hz; centres at 150 · 2^(k/3)
  int segment_frames = 30;            // 384 ms analysis window
  double clip_bound_db = -15.0;       // lower signal-to-distortion bound
  double silence_range_db = 40.0;

  void Validate() const;
};

// [num_bands x num_frames] non-negative band magnitudes.
class BandEnvelope {
 public:
  BandEnvelope(int num_bands, int num_frames)
      : num_bands_(num_bands), num_frames_(num_frames),
        data_(static_cast<size_t>(num_bands) * num_frames, 0.0) {}

  int num_bands() const { return num_bands_; }
  int num_frames() const { return num_frames_; }
  double operator()(int band, int frame) const {
    return data_[static_cast<size_t>(band) * num_frames_ + frame];
  }
  double &operator()(int band, int frame) {
    return data_[static_cast<size_t>(band) * num_frames_ + frame];
  }

 private:
  int num_bands_;
  int num_frames_;
  std::vector<double> data_;
};

// [low, high) edges in Hz of each one-third-octave band.
std::vector<std::pair<double, double>> ThirdOctaveBandEdges(
    const StoiConfig &cfg);

// Drops every frame whose Hann-windowed clean energy lies more than
// silence_range_db below the loudest clean frame, from both signals, and
// overlap-adds the surviving windowed frames back together. Frame
// selection looks at `clean` only.
std::pair<Waveform, Waveform> RemoveSilentFrames(const Waveform &clean,
                                                 const Waveform &degraded,
                                                 const StoiConfig &cfg);

// Magnitude STFT (Hann frame_len, hop frame_hop, zero-padded to fft_len)
// pooled into one-third-octave bands: sqrt of the summed squared bin
// magnitudes of every bin whose centre frequency lies in the band.
BandEnvelope ThirdOctaveEnvelope(const Waveform &w, const StoiConfig &cfg);

// Mean over bands and over every segment_frames-long window of the
// correlation between the clean envelope and the normalised, clipped
// degraded envelope. Both inputs are resampled to target_rate first.
// Result lies in [-1, 1].
double Stoi(const Waveform &clean, const Waveform &degraded,
            const StoiConfig &cfg = StoiConfig());

}  // namespace pararank

#endif  // PARARANK_STOI_STOI_H_
