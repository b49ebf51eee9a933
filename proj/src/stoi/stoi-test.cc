// stoi/stoi-test.cc

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

#include "audio/noise-mixing.h"
#include "audio/wav-io.h"
#include "base/pararank-error.h"
#include "base/random.h"
#include "base/table-io.h"
#include "base/text-utils.h"
#include "stoi/resample.h"
#include "stoi/stoi.h"

namespace pararank {
namespace {

Waveform Tone(int rate, double freq, size_t n, double amp = 0.5) {
  std::vector<double> s(n);
  for (size_t i = 0; i < n; ++i)
    s[i] = amp * std::sin(2.0 * std::numbers::pi * freq * i / rate);
  return Waveform(rate, std::move(s));
}

Waveform Noise(uint64_t seed, int rate, size_t n, double amp) {
  Rng rng(seed);
  std::vector<double> s(n);
  for (auto &x : s) x = amp * rng.Gaussian();
  return Waveform(rate, std::move(s));
}

// Amplitude-modulated noise: crude stand-in for a speech envelope.
Waveform ModulatedNoise(uint64_t seed, int rate, size_t n) {
  Rng rng(seed);
  std::vector<double> s(n);
  for (size_t i = 0; i < n; ++i) {
    double env = 0.5 + 0.5 * std::sin(2.0 * std::numbers::pi * 4.0 * i / rate);
    s[i] = 0.2 * env * env * rng.Gaussian();
  }
  return Waveform(rate, std::move(s));
}

TEST(Resample, SameRateIsIdentity) {
  Waveform w = Noise(1, 10000, 1000, 0.1);
  Waveform r = Resample(w, 10000);
  EXPECT_EQ(r.samples(), w.samples());
}

TEST(Resample, DownsampledToneKeepsAmplitude) {
  Waveform w = Tone(20000, 1000.0, 20000, 0.5);
  Waveform r = Resample(w, 10000);
  ASSERT_EQ(r.sample_rate(), 10000);
  // Least-squares fit of a·sin + b·cos on the interior, away from edges.
  double ss = 0, cc = 0, sc = 0, ys = 0, yc = 0;
  for (size_t n = 500; n + 500 < r.size(); ++n) {
    double ph = 2.0 * std::numbers::pi * 1000.0 * n / 10000.0;
    double s = std::sin(ph), c = std::cos(ph), y = r.samples()[n];
    ss += s * s;
    cc += c * c;
    sc += s * c;
    ys += y * s;
    yc += y * c;
  }
  double det = ss * cc - sc * sc;
  double a = (ys * cc - yc * sc) / det, b = (yc * ss - ys * sc) / det;
  EXPECT_NEAR(std::hypot(a, b), 0.5, 0.005);
}

TEST(Resample, PreservesDuration) {
  Waveform w = Noise(2, 44100, 44100 * 2 + 17, 0.1);
  Waveform r = Resample(w, 10000);
  double expected = static_cast<double>(w.size()) * 10000.0 / 44100.0;
  EXPECT_LE(std::abs(static_cast<double>(r.size()) - expected), 1.0);
  Waveform up = Resample(Noise(3, 8000, 8001, 0.1), 10000);
  EXPECT_LE(std::abs(static_cast<double>(up.size()) - 8001 * 1.25), 1.0);
}

TEST(Resample, RejectsAboveCutoff) {
  // 4.9 kHz is above 0.9 × 5 kHz: it must be strongly attenuated.
  Waveform r = Resample(Tone(20000, 4900.0, 20000, 0.5), 10000);
  double peak = 0;
  for (size_t n = 500; n + 500 < r.size(); ++n)
    peak = std::max(peak, std::abs(r.samples()[n]));
  EXPECT_LT(peak, 0.05);
}

TEST(RemoveSilentFrames, LoudSignalIsUnchangedInInterior) {
  StoiConfig cfg;
  Waveform x = Tone(10000, 440.0, 128 * 40 + 256);
  Waveform y = Noise(4, 10000, x.size(), 0.3);
  auto [xs, ys] = RemoveSilentFrames(x, y, cfg);
  ASSERT_EQ(xs.size(), x.size());
  for (size_t i = 128; i + 128 < xs.size(); ++i) {
    EXPECT_NEAR(xs.samples()[i], x.samples()[i], 1e-6);
    EXPECT_NEAR(ys.samples()[i], y.samples()[i], 1e-6);
  }
}

TEST(RemoveSilentFrames, DropsPaddingBasedOnCleanOnly) {
  StoiConfig cfg;
  const size_t pad = 128 * 20;
  std::vector<double> x(pad, 0.0);
  Waveform burst = Tone(10000, 500.0, 128 * 30);
  x.insert(x.end(), burst.samples().begin(), burst.samples().end());
  x.insert(x.end(), pad, 0.0);
  Waveform clean(10000, x);
  // Degraded is loud everywhere, including the clean padding.
  Waveform degraded = Noise(5, 10000, clean.size(), 0.5);
  auto [xs, ys] = RemoveSilentFrames(clean, degraded, cfg);
  EXPECT_LT(xs.size(), clean.size());
  EXPECT_EQ(xs.size(), ys.size());
  // 29 full-burst frames plus the two straddling each edge.
  EXPECT_LE(xs.size(), 128u * 33 + 256);
  EXPECT_GE(xs.size(), 128u * 28 + 256);
}

TEST(RemoveSilentFrames, Errors) {
  StoiConfig cfg;
  Waveform zeros(10000, std::vector<double>(5000, 0.0));
  try {
    RemoveSilentFrames(zeros, zeros, cfg);
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("no speech content"),
              std::string::npos);
  }
  EXPECT_THROW(RemoveSilentFrames(Tone(10000, 440, 1000),
                                  Tone(10000, 440, 999), cfg),
               Error);
}

TEST(ThirdOctaveEnvelope, ZeroSignal) {
  StoiConfig cfg;
  BandEnvelope env =
      ThirdOctaveEnvelope(Waveform(10000, std::vector<double>(2000, 0.0)), cfg);
  EXPECT_EQ(env.num_bands(), 15);
  EXPECT_EQ(env.num_frames(), (2000 - 256) / 128 + 1);
  for (int b = 0; b < env.num_bands(); ++b)
    for (int f = 0; f < env.num_frames(); ++f) EXPECT_EQ(env(b, f), 0.0);
}

TEST(ThirdOctaveEnvelope, ToneAt150HzDominatesFirstBand) {
  StoiConfig cfg;
  BandEnvelope env = ThirdOctaveEnvelope(Tone(10000, 150.0, 10000), cfg);
  std::vector<double> share(env.num_bands(), 0.0);
  double total = 0;
  for (int b = 0; b < env.num_bands(); ++b)
    for (int f = 0; f < env.num_frames(); ++f) {
      double e = env(b, f) * env(b, f);
      share[b] += e;
      total += e;
    }
  // Band 0 spans only two FFT bins, narrower than the Hann main lobe, so
  // the rest leaks into band 1. pystoi's thirdoct/stft give 0.7197 here.
  EXPECT_NEAR(share[0] / total, 0.7197, 0.01);
  for (int b = 1; b < env.num_bands(); ++b)
    EXPECT_GT(share[0], 2.0 * share[b]) << "band " << b;
}

TEST(ThirdOctaveEnvelope, WhiteNoiseFillsEveryBand) {
  StoiConfig cfg;
  BandEnvelope env = ThirdOctaveEnvelope(Noise(6, 10000, 10000, 0.1), cfg);
  for (int b = 0; b < env.num_bands(); ++b) {
    double sum = 0;
    for (int f = 0; f < env.num_frames(); ++f) sum += env(b, f);
    EXPECT_GT(sum, 0.0) << "band " << b;
  }
}

TEST(ThirdOctaveEnvelope, BandEdgesAndErrors) {
  StoiConfig cfg;
  auto edges = ThirdOctaveBandEdges(cfg);
  ASSERT_EQ(edges.size(), 15u);
  EXPECT_NEAR(edges[0].first, 150.0 * std::pow(2.0, -1.0 / 6), 1e-9);
  EXPECT_NEAR(edges[14].second, 150.0 * std::pow(2.0, 29.0 / 6), 1e-9);
  EXPECT_THROW(ThirdOctaveEnvelope(Tone(10000, 150, 255), cfg), Error);
  EXPECT_THROW(ThirdOctaveEnvelope(Tone(16000, 150, 5000), cfg), Error);
}

TEST(Stoi, IdenticalSignalsScoreOne) {
  Waveform x = ModulatedNoise(7, 10000, 20000);
  EXPECT_NEAR(Stoi(x, x), 1.0, 1e-6);
}

TEST(Stoi, ScaleInvariantInDegraded) {
  Waveform x = ModulatedNoise(8, 10000, 20000);
  MixResult m = MixAtSnr(x, Noise(9, 10000, 30000, 0.1), 0.0);
  double base = Stoi(x, m.mixture);
  for (double c : {0.01, 0.5, 3.0, 250.0}) {
    std::vector<double> scaled;
    for (double s : m.mixture.samples()) scaled.push_back(c * s);
    EXPECT_NEAR(Stoi(x, Waveform(10000, scaled)), base, 1e-9) << c;
  }
}

TEST(Stoi, MoreNoiseLowersScore) {
  Waveform x = ModulatedNoise(10, 16000, 40000);
  Waveform n = Noise(11, 16000, 60000, 0.1);
  double hi = Stoi(x, MixAtSnr(x, n, 5.0).mixture);
  double lo = Stoi(x, MixAtSnr(x, n, -5.0).mixture);
  EXPECT_LT(lo, hi);
  EXPECT_GE(lo, -1.0);
  EXPECT_LE(hi, 1.0);
}

TEST(Stoi, DeterministicAndBounded) {
  Waveform x = ModulatedNoise(12, 10000, 15000);
  Waveform y = Noise(13, 10000, 15000, 0.2);
  double a = Stoi(x, y), b = Stoi(x, y);
  EXPECT_EQ(a, b);
  EXPECT_GE(a, -1.0);
  EXPECT_LE(a, 1.0);
}

TEST(Stoi, SilentDegradedBandsContributeZero) {
  Waveform x = ModulatedNoise(14, 10000, 15000);
  Waveform y(10000, std::vector<double>(15000, 0.0));
  EXPECT_EQ(Stoi(x, y), 0.0);
}

TEST(Stoi, Errors) {
  Waveform x = ModulatedNoise(15, 10000, 3000);  // < 30 frames
  EXPECT_THROW(Stoi(x, x), Error);
  Waveform a = ModulatedNoise(16, 10000, 20000);
  EXPECT_THROW(Stoi(a, ModulatedNoise(16, 10000, 19999)), Error);
  EXPECT_THROW(Stoi(a, ModulatedNoise(16, 16000, 20000)), Error);
}

TEST(Stoi, MatchesReferenceVectors) {
  std::string dir = PARARANK_TEST_DIR;
  Table ref = Table::Read(dir + "/stoi_reference.csv", ',');
  ASSERT_EQ(ref.rows().size(), 20u);
  for (const auto &row : ref.rows()) {
    Waveform clean = ReadWav(dir + "/" + row.fields[ref.Column("clean_path")]);
    Waveform deg = ReadWav(dir + "/" + row.fields[ref.Column("degraded_path")]);
    double expected =
        ParseDouble(row.fields[ref.Column("expected_score")], "expected_score");
    EXPECT_NEAR(Stoi(clean, deg), expected, 0.01)
        << row.fields[ref.Column("degraded_path")];
  }
}

}  // namespace
}  // namespace pararank
