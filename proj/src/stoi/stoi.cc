// stoi/stoi.cc

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

#include "stoi/stoi.h"

#include <fftw3.h>

#include <cfloat>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <string>

#include "base/pararank-error.h"
#include "stoi/resample.h"

namespace pararank {

namespace {

// The FFTW planner is not thread-safe; executing an existing plan is.
std::mutex &FftwPlannerMutex() {
  static std::mutex m;
  return m;
}

// Real-to-complex FFT of a fixed size over FFTW-owned buffers.
class RealFft {
 public:
  explicit RealFft(int n)
      : n_(n),
        in_(fftw_alloc_real(static_cast<size_t>(n)), fftw_free),
        out_(fftw_alloc_complex(static_cast<size_t>(n / 2 + 1)), fftw_free) {
    std::lock_guard<std::mutex> lock(FftwPlannerMutex());
    plan_ = fftw_plan_dft_r2c_1d(n_, in_.get(), out_.get(), FFTW_ESTIMATE);
    if (plan_ == nullptr) throw Error("FFTW planning failed");
  }
  ~RealFft() {
    std::lock_guard<std::mutex> lock(FftwPlannerMutex());
    fftw_destroy_plan(plan_);
  }
  RealFft(const RealFft &) = delete;
  RealFft &operator=(const RealFft &) = delete;

  double *input() { return in_.get(); }
  void Execute() { fftw_execute(plan_); }
  // |X_k|^2 for k = 0..n/2.
  double PowerAt(int k) const {
    const fftw_complex &c = out_.get()[k];
    return c[0] * c[0] + c[1] * c[1];
  }

 private:
  int n_;
  std::unique_ptr<double, decltype(&fftw_free)> in_;
  std::unique_ptr<fftw_complex, decltype(&fftw_free)> out_;
  fftw_plan plan_ = nullptr;
};

// Periodic Hann: overlap-adding at 50% hop sums to exactly one.
std::vector<double> HannWindow(int n) {
  std::vector<double> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * i / n);
  return w;
}

size_t NumFrames(size_t len, const StoiConfig &cfg) {
  size_t fl = static_cast<size_t>(cfg.frame_len);
  if (len < fl) return 0;
  return (len - fl) / static_cast<size_t>(cfg.frame_hop) + 1;
}

// Pearson correlation; 0 when either vector has no variance.
double Correlation(const double *x, const double *y, int n) {
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0, rx = 0.0, ry = 0.0;
  for (int i = 0; i < n; ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
    rx += x[i] * x[i];
    ry += y[i] * y[i];
  }
  // Centered norms at rounding level of the raw norms count as constant.
  const double kRel = 1e-24;
  if (sxx <= kRel * rx || syy <= kRel * ry || sxx == 0.0 || syy == 0.0)
    return 0.0;
  double r = sxy / std::sqrt(sxx * syy);
  return std::max(-1.0, std::min(1.0, r));
}

}  // namespace

void StoiConfig::Validate() const {
  if (target_rate <= 0 || frame_len <= 0 || frame_hop <= 0 || fft_len <= 0 ||
      num_bands <= 0 || lowest_center_freq <= 0.0 || segment_frames <= 0 ||
      silence_range_db <= 0.0)
    throw Error("STOI configuration values must be positive");
  if (frame_hop * 2 != frame_len)
    throw Error("STOI frame hop must be half the frame length");
  if (fft_len < frame_len) throw Error("STOI FFT shorter than the frame");
}

std::vector<std::pair<double, double>> ThirdOctaveBandEdges(
    const StoiConfig &cfg) {
  std::vector<std::pair<double, double>> edges;
  for (int k = 0; k < cfg.num_bands; ++k) {
    double center = cfg.lowest_center_freq * std::pow(2.0, k / 3.0);
    edges.emplace_back(center * std::pow(2.0, -1.0 / 6.0),
                       center * std::pow(2.0, 1.0 / 6.0));
  }
  return edges;
}

std::pair<Waveform, Waveform> RemoveSilentFrames(const Waveform &clean,
                                                 const Waveform &degraded,
                                                 const StoiConfig &cfg) {
  cfg.Validate();
  if (clean.size() != degraded.size())
    throw Error("clean and degraded signals differ in length (" +
                std::to_string(clean.size()) + " vs " +
                std::to_string(degraded.size()) + ")");
  const size_t frames = NumFrames(clean.size(), cfg);
  if (frames == 0) throw Error("signal shorter than one STOI frame");
  const size_t fl = static_cast<size_t>(cfg.frame_len);
  const size_t hop = static_cast<size_t>(cfg.frame_hop);
  const std::vector<double> window = HannWindow(cfg.frame_len);
  const auto &x = clean.samples();
  const auto &y = degraded.samples();

  std::vector<double> energy_db(frames);
  double max_norm = 0.0;
  for (size_t f = 0; f < frames; ++f) {
    double sum = 0.0;
    for (size_t i = 0; i < fl; ++i) {
      double v = window[i] * x[f * hop + i];
      sum += v * v;
    }
    double norm = std::sqrt(sum);
    max_norm = std::max(max_norm, norm);
    energy_db[f] = 20.0 * std::log10(norm + DBL_EPSILON);
  }
  if (max_norm == 0.0) throw Error("no speech content: clean signal is silent");
  double max_db = *std::max_element(energy_db.begin(), energy_db.end());

  std::vector<size_t> kept;
  for (size_t f = 0; f < frames; ++f)
    if (energy_db[f] > max_db - cfg.silence_range_db) kept.push_back(f);

  size_t out_len = (kept.size() - 1) * hop + fl;
  std::vector<double> xo(out_len, 0.0), yo(out_len, 0.0);
  for (size_t j = 0; j < kept.size(); ++j) {
    size_t src = kept[j] * hop, dst = j * hop;
    for (size_t i = 0; i < fl; ++i) {
      xo[dst + i] += window[i] * x[src + i];
      yo[dst + i] += window[i] * y[src + i];
    }
  }
  return {Waveform(clean.sample_rate(), std::move(xo)),
          Waveform(degraded.sample_rate(), std::move(yo))};
}

BandEnvelope ThirdOctaveEnvelope(const Waveform &w, const StoiConfig &cfg) {
  cfg.Validate();
  if (w.sample_rate() != cfg.target_rate)
    throw Error("envelope expects " + std::to_string(cfg.target_rate) +
                " Hz input, got " + std::to_string(w.sample_rate()));
  const size_t frames = NumFrames(w.size(), cfg);
  if (frames == 0) throw Error("signal shorter than one STOI frame");

  // Bin k belongs to band b when k·fs/nfft lies in [low_b, high_b).
  const int num_bins = cfg.fft_len / 2 + 1;
  std::vector<int> bin_band(static_cast<size_t>(num_bins), -1);
  const auto edges = ThirdOctaveBandEdges(cfg);
  for (int k = 0; k < num_bins; ++k) {
    double f = static_cast<double>(k) * cfg.target_rate / cfg.fft_len;
    for (int b = 0; b < cfg.num_bands; ++b) {
      if (f >= edges[b].first && f < edges[b].second) {
        bin_band[k] = b;
        break;
      }
    }
  }

  const std::vector<double> window = HannWindow(cfg.frame_len);
  RealFft fft(cfg.fft_len);
  BandEnvelope env(cfg.num_bands, static_cast<int>(frames));
  const auto &x = w.samples();
  std::vector<double> band_power(static_cast<size_t>(cfg.num_bands));
  for (size_t f = 0; f < frames; ++f) {
    double *in = fft.input();
    size_t start = f * static_cast<size_t>(cfg.frame_hop);
    for (int i = 0; i < cfg.fft_len; ++i)
      in[i] = i < cfg.frame_len ? window[i] * x[start + i] : 0.0;
    fft.Execute();
    std::fill(band_power.begin(), band_power.end(), 0.0);
    for (int k = 0; k < num_bins; ++k)
      if (bin_band[k] >= 0) band_power[bin_band[k]] += fft.PowerAt(k);
    for (int b = 0; b < cfg.num_bands; ++b)
      env(b, static_cast<int>(f)) = std::sqrt(band_power[b]);
  }
  return env;
}

double Stoi(const Waveform &clean, const Waveform &degraded,
            const StoiConfig &cfg) {
  cfg.Validate();
  if (clean.sample_rate() != degraded.sample_rate())
    throw Error("clean and degraded sample rates differ");
  if (clean.size() != degraded.size())
    throw Error("clean and degraded signals differ in length (" +
                std::to_string(clean.size()) + " vs " +
                std::to_string(degraded.size()) + ")");
  Waveform x = Resample(clean, cfg.target_rate);
  Waveform y = Resample(degraded, cfg.target_rate);
  auto [xs, ys] = RemoveSilentFrames(x, y, cfg);
  BandEnvelope xe = ThirdOctaveEnvelope(xs, cfg);
  BandEnvelope ye = ThirdOctaveEnvelope(ys, cfg);

  const int n = cfg.segment_frames;
  const int frames = xe.num_frames();
  if (frames < n)
    throw Error("not enough speech for STOI: " + std::to_string(frames) +
                " frames after silence removal, need " + std::to_string(n));
  const double clip_factor = 1.0 + std::pow(10.0, -cfg.clip_bound_db / 20.0);

  std::vector<double> xv(static_cast<size_t>(n)), yv(static_cast<size_t>(n));
  double total = 0.0;
  long cells = 0;
  for (int b = 0; b < cfg.num_bands; ++b) {
    for (int m = n; m <= frames; ++m) {
      double xn = 0.0, yn = 0.0;
      for (int i = 0; i < n; ++i) {
        xv[i] = xe(b, m - n + i);
        yv[i] = ye(b, m - n + i);
        xn += xv[i] * xv[i];
        yn += yv[i] * yv[i];
      }
      double alpha = yn > 0.0 ? std::sqrt(xn / yn) : 0.0;
      for (int i = 0; i < n; ++i)
        yv[i] = std::min(alpha * yv[i], clip_factor * xv[i]);
      total += Correlation(xv.data(), yv.data(), n);
      ++cells;
    }
  }
  return total / static_cast<double>(cells);
}

}  // namespace pararank
