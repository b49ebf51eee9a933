// audio/noise-mixing.h

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

#ifndef PARARANK_AUDIO_NOISE_MIXING_H_
#define PARARANK_AUDIO_NOISE_MIXING_H_

#include <cstddef>
#include <cstdint>

#include "audio/waveform.h"

namespace pararank {

// Mean squared amplitude. Throws on an empty waveform.
double Power(const Waveform &w);

// 10·log10(P_speech / P_noise). Inputs must have equal length and rate and
// non-zero power.
double MeasureSnr(const Waveform &speech, const Waveform &noise);

// Amplitude factor a such that P_speech / (a² · P_noise) = 10^(snr_db/10).
double NoiseScaleForSnr(double speech_power, double noise_power, double snr_db);

// `length` samples of `noise` starting at `offset` (taken modulo the noise
// length), wrapping around cyclically.
Waveform NoiseSegment(const Waveform &noise, size_t offset, size_t length);

// Offset drawn uniformly from [0, noise_length) by a seeded generator.
size_t RandomNoiseOffset(size_t noise_length, uint64_t seed);

struct MixResult {
  Waveform mixture;
  double noise_scale = 1.0;  // a, applied to the noise segment
  size_t noise_offset = 0;
  // 1 unless the mixture peaked above full scale, in which case the whole
  // mixture was multiplied by this factor instead of being clipped.
  double post_gain = 1.0;
};

// Additive mixing at a target SNR measured over the whole utterance:
// mixture = speech + a · noise[offset : offset + len(speech)].
MixResult MixAtSnr(const Waveform &speech, const Waveform &noise,
                   double snr_db, size_t noise_offset = 0);

}  // namespace pararank

#endif  // PARARANK_AUDIO_NOISE_MIXING_H_
