// audio/audio-test.cc

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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "audio/noise-mixing.h"
#include "audio/wav-io.h"
#include "base/pararank-error.h"
#include "base/random.h"

namespace pararank {
namespace {

Waveform Sine(int rate, double freq, size_t n, double amp = 1.0) {
  std::vector<double> s(n);
  for (size_t i = 0; i < n; ++i)
    s[i] = amp * std::sin(2.0 * std::numbers::pi * freq * i / rate);
  return Waveform(rate, std::move(s));
}

Waveform RandomSignal(Rng *rng, size_t n, double amp) {
  std::vector<double> s(n);
  for (auto &x : s) x = amp * rng->Gaussian();
  return Waveform(16000, std::move(s));
}

std::string WavBytes(uint16_t format, uint16_t channels, uint16_t bits,
                     const std::string &payload) {
  auto u32 = [](uint32_t v) {
    std::string s;
    for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>(v >> (8 * i)));
    return s;
  };
  auto u16 = [](uint16_t v) {
    return std::string{static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
  };
  std::string out = "RIFF" + u32(36 + payload.size()) + "WAVEfmt " + u32(16) +
                    u16(format) + u16(channels) + u32(8000) +
                    u32(8000 * channels * bits / 8) +
                    u16(channels * bits / 8) + u16(bits) + "data" +
                    u32(payload.size()) + payload;
  return out;
}

TEST(Waveform, RejectsBadRateAndNonFinite) {
  EXPECT_THROW(Waveform(0, {0.0}), Error);
  EXPECT_THROW(Waveform(8000, {0.0, std::nan("")}), Error);
}

TEST(WavIo, Float32RoundTripIsBitExact) {
  Waveform sine = Sine(10000, 1000.0, 1234, 0.8);
  std::vector<double> as_float;
  for (double s : sine.samples()) as_float.push_back(static_cast<float>(s));
  Waveform w(10000, as_float);
  std::stringstream ss;
  WriteWav(ss, w, WavEncoding::kFloat32);
  Waveform back = ReadWav(ss, "mem");
  EXPECT_EQ(back.sample_rate(), 10000);
  EXPECT_EQ(back.samples(), w.samples());
}

TEST(WavIo, Pcm16Scale) {
  std::string payload = {static_cast<char>(0x00), static_cast<char>(0x80),
                         static_cast<char>(0xFF), static_cast<char>(0x7F)};
  std::istringstream is(WavBytes(1, 1, 16, payload));
  Waveform w = ReadWav(is, "mem");
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w.samples()[0], -1.0);
  EXPECT_EQ(w.samples()[1], 32767.0 / 32768.0);

  std::stringstream ss;
  WriteWav(ss, Waveform(8000, {-1.0, 0.5, 2.0}), WavEncoding::kPcm16);
  Waveform back = ReadWav(ss, "mem");
  EXPECT_EQ(back.samples()[0], -1.0);
  EXPECT_EQ(back.samples()[1], 0.5);
  EXPECT_EQ(back.samples()[2], 32767.0 / 32768.0);  // saturated
}

TEST(WavIo, Errors) {
  std::istringstream stereo(WavBytes(1, 2, 16, std::string(8, '\0')));
  try {
    ReadWav(stereo, "mem");
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("mono required"), std::string::npos);
  }
  std::istringstream pcm24(WavBytes(1, 1, 24, std::string(6, '\0')));
  EXPECT_THROW(ReadWav(pcm24, "mem"), Error);
  std::istringstream junk("RIFX....WAVE");
  EXPECT_THROW(ReadWav(junk, "mem"), Error);
  EXPECT_THROW(ReadWav("/nonexistent/file.wav"), Error);
}

TEST(Power, Examples) {
  EXPECT_EQ(Power(Waveform(8000, std::vector<double>(100, 0.0))), 0.0);
  EXPECT_EQ(Power(Waveform(8000, std::vector<double>(100, 0.5))), 0.25);
  // 1 kHz at 10 kHz: 10 samples per period, 50 whole periods.
  EXPECT_NEAR(Power(Sine(10000, 1000.0, 500)), 0.5, 1e-12);
  EXPECT_THROW(Power(Waveform(8000, {})), Error);
}

TEST(MeasureSnr, Examples) {
  Rng rng(1);
  Waveform s = RandomSignal(&rng, 1000, 0.1);
  EXPECT_NEAR(MeasureSnr(s, s), 0.0, 1e-12);
  std::vector<double> tenth;
  for (double x : s.samples()) tenth.push_back(x / 10.0);
  EXPECT_NEAR(MeasureSnr(s, Waveform(16000, tenth)), 20.0, 1e-9);
  EXPECT_THROW(MeasureSnr(s, Waveform(16000, std::vector<double>(1000, 0.0))),
               Error);
  EXPECT_THROW(MeasureSnr(s, Waveform(16000, std::vector<double>(10, 0.1))),
               Error);
}

TEST(MeasureSnr, RatioInvariance) {
  Rng rng(2);
  Waveform s = RandomSignal(&rng, 500, 0.2), n = RandomSignal(&rng, 500, 0.05);
  std::vector<double> s3, n3;
  for (double x : s.samples()) s3.push_back(3.0 * x);
  for (double x : n.samples()) n3.push_back(3.0 * x);
  EXPECT_NEAR(MeasureSnr(s, n),
              MeasureSnr(Waveform(16000, s3), Waveform(16000, n3)), 1e-12);
}

TEST(MixAtSnr, EqualPowersAtZeroDbUseUnitScale) {
  Waveform s(8000, std::vector<double>(100, 0.5));
  Waveform n(8000, std::vector<double>(100, -0.5));
  MixResult r = MixAtSnr(s, n, 0.0);
  EXPECT_DOUBLE_EQ(r.noise_scale, 1.0);
  EXPECT_EQ(r.post_gain, 1.0);
}

TEST(MixAtSnr, RoundTripOnRandomPairs) {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    size_t len = 200 + rng.UniformInt(2000);
    Waveform s = RandomSignal(&rng, len, 0.01 + 0.2 * rng.Uniform());
    Waveform n = RandomSignal(&rng, 100 + rng.UniformInt(3000),
                              0.01 + 0.2 * rng.Uniform());
    double snr = -10.0 + 20.0 * rng.Uniform();
    size_t offset = rng.UniformInt(5000);
    MixResult r = MixAtSnr(s, n, snr, offset);
    Waveform seg = NoiseSegment(n, offset, len);
    std::vector<double> scaled;
    for (double x : seg.samples()) scaled.push_back(r.noise_scale * x);
    EXPECT_NEAR(MeasureSnr(s, Waveform(16000, scaled)), snr, 1e-6);
    EXPECT_EQ(r.mixture.size(), s.size());
  }
}

TEST(MixAtSnr, NoiseScaleGrowsAsSnrDrops) {
  Rng rng(9);
  Waveform s = RandomSignal(&rng, 1000, 0.1), n = RandomSignal(&rng, 3000, 0.1);
  double a5 = MixAtSnr(s, n, 5.0).noise_scale;
  double a0 = MixAtSnr(s, n, 0.0).noise_scale;
  double am5 = MixAtSnr(s, n, -5.0).noise_scale;
  EXPECT_LT(a5, a0);
  EXPECT_LT(a0, am5);
}

TEST(MixAtSnr, HomogeneousInSpeechAndDeterministic) {
  Rng rng(4);
  Waveform s = RandomSignal(&rng, 800, 0.05), n = RandomSignal(&rng, 900, 0.05);
  MixResult r1 = MixAtSnr(s, n, 3.0, 123);
  MixResult r2 = MixAtSnr(s, n, 3.0, 123);
  EXPECT_EQ(r1.mixture.samples(), r2.mixture.samples());
  std::vector<double> s2;
  for (double x : s.samples()) s2.push_back(2.0 * x);
  MixResult r3 = MixAtSnr(Waveform(16000, s2), n, 3.0, 123);
  EXPECT_NEAR(r3.noise_scale, 2.0 * r1.noise_scale, 1e-12);
  for (size_t i = 0; i < s.size(); ++i)
    EXPECT_NEAR(r3.mixture.samples()[i], 2.0 * r1.mixture.samples()[i], 1e-12);
}

TEST(MixAtSnr, CyclicNoiseWrap) {
  Waveform n(8000, {1.0, 2.0, 3.0});
  Waveform seg = NoiseSegment(n, 5, 5);
  EXPECT_EQ(seg.samples(), (std::vector<double>{3.0, 1.0, 2.0, 3.0, 1.0}));
  EXPECT_EQ(RandomNoiseOffset(1000, 7), RandomNoiseOffset(1000, 7));
  EXPECT_LT(RandomNoiseOffset(1000, 7), 1000u);
}

TEST(MixAtSnr, PeakNormalizesInsteadOfClipping) {
  Waveform s(8000, std::vector<double>(50, 0.9));
  Waveform n(8000, std::vector<double>(50, 0.9));
  MixResult r = MixAtSnr(s, n, 0.0);
  EXPECT_NEAR(r.post_gain, 1.0 / 1.8, 1e-12);
  for (double x : r.mixture.samples()) EXPECT_LE(std::abs(x), 1.0 + 1e-12);
}

TEST(MixAtSnr, Errors) {
  Waveform s(8000, std::vector<double>(10, 0.1));
  EXPECT_THROW(MixAtSnr(s, Waveform(16000, std::vector<double>(10, 0.1)), 0.0),
               Error);
  EXPECT_THROW(MixAtSnr(Waveform(8000, std::vector<double>(10, 0.0)), s, 0.0),
               Error);
  EXPECT_THROW(MixAtSnr(s, Waveform(8000, std::vector<double>(10, 0.0)), 0.0),
               Error);
  EXPECT_THROW(MixAtSnr(s, s, std::numeric_limits<double>::infinity()), Error);
}

}  // namespace
}  // namespace pararank
