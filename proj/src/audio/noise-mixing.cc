// audio/noise-mixing.cc

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

#include "audio/noise-mixing.h"

#include <cmath>
#include <string>
#include <vector>

#include "base/pararank-error.h"
#include "base/random.h"

namespace pararank {

double Power(const Waveform &w) {
  if (w.empty()) throw Error("power of an empty waveform");
  double sum = 0.0;
  for (double s : w.samples()) sum += s * s;
  return sum / static_cast<double>(w.size());
}

double MeasureSnr(const Waveform &speech, const Waveform &noise) {
  if (speech.size() != noise.size())
    throw Error("SNR needs equal lengths (" + std::to_string(speech.size()) +
                " vs " + std::to_string(noise.size()) + ")");
  if (speech.sample_rate() != noise.sample_rate())
    throw Error("SNR needs equal sample rates");
  double ps = Power(speech), pn = Power(noise);
  if (ps <= 0.0) throw Error("SNR undefined: speech has zero power");
  if (pn <= 0.0) throw Error("SNR undefined: noise has zero power");
  return 10.0 * std::log10(ps / pn);
}

double NoiseScaleForSnr(double speech_power, double noise_power,
                        double snr_db) {
  if (!std::isfinite(snr_db)) throw Error("SNR must be finite");
  return std::sqrt(speech_power / (noise_power * std::pow(10.0, snr_db / 10.0)));
}

Waveform NoiseSegment(const Waveform &noise, size_t offset, size_t length) {
  if (noise.empty()) throw Error("noise waveform is empty");
  std::vector<double> seg(length);
  const auto &n = noise.samples();
  size_t pos = offset % n.size();
  for (size_t i = 0; i < length; ++i) {
    seg[i] = n[pos];
    if (++pos == n.size()) pos = 0;
  }
  return Waveform(noise.sample_rate(), std::move(seg));
}

size_t RandomNoiseOffset(size_t noise_length, uint64_t seed) {
  if (noise_length == 0) throw Error("noise waveform is empty");
  Rng rng(seed);
  return static_cast<size_t>(rng.UniformInt(noise_length));
}

MixResult MixAtSnr(const Waveform &speech, const Waveform &noise,
                   double snr_db, size_t noise_offset) {
  if (speech.sample_rate() != noise.sample_rate())
    throw Error("sample-rate mismatch: speech " +
                std::to_string(speech.sample_rate()) + " Hz, noise " +
                std::to_string(noise.sample_rate()) + " Hz");
  double ps = Power(speech);
  if (ps <= 0.0) throw Error("cannot mix: speech is silent");
  Waveform seg = NoiseSegment(noise, noise_offset, speech.size());
  double pn = Power(seg);
  if (pn <= 0.0) throw Error("cannot mix: noise segment is silent");

  MixResult result;
  result.noise_scale = NoiseScaleForSnr(ps, pn, snr_db);
  result.noise_offset = noise_offset % noise.size();
  std::vector<double> mix(speech.size());
  double peak = 0.0;
  for (size_t i = 0; i < mix.size(); ++i) {
    mix[i] = speech.samples()[i] + result.noise_scale * seg.samples()[i];
    peak = std::max(peak, std::abs(mix[i]));
  }
  if (peak > 1.0) {
    result.post_gain = 1.0 / peak;
    for (double &s : mix) s *= result.post_gain;
  }
  result.mixture = Waveform(speech.sample_rate(), std::move(mix));
  return result;
}

}  // namespace pararank
