// stoi/resample.cc

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

#include "stoi/resample.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "base/pararank-error.h"

namespace pararank {

namespace {

constexpr double kCutoffFraction = 0.9;
constexpr double kZeroCrossings = 64.0;
constexpr double kKaiserBeta = 8.6;
// Above this many distinct phases the kernel is evaluated per sample.
constexpr long kMaxPolyphase = 4096;

double Sinc(double x) {
  if (x == 0.0) return 1.0;
  double px = M_PI * x;
  return std::sin(px) / px;
}

class KernelDesign {
 public:
  KernelDesign(int source_rate, int target_rate) {
    double cutoff_hz =
        kCutoffFraction * 0.5 * std::min(source_rate, target_rate);
    cutoff_ = cutoff_hz / source_rate;  // cycles per input sample
    half_width_ = kZeroCrossings / (2.0 * cutoff_);
    i0_beta_ = std::cyl_bessel_i(0.0, kKaiserBeta);
  }

  double half_width() const { return half_width_; }

  // Kernel taps for an output position `t` (in input samples): fills
  // `taps` for inputs first..first+taps.size()-1, normalised to sum 1.
  void Taps(double t, long *first, std::vector<double> *taps) const {
    long lo = static_cast<long>(std::ceil(t - half_width_));
    long hi = static_cast<long>(std::floor(t + half_width_));
    *first = lo;
    taps->assign(static_cast<size_t>(hi - lo + 1), 0.0);
    double sum = 0.0;
    for (long k = lo; k <= hi; ++k) {
      double tau = t - static_cast<double>(k);
      double r = tau / half_width_;
      double window = 0.0;
      if (std::abs(r) < 1.0)
        window = std::cyl_bessel_i(0.0, kKaiserBeta * std::sqrt(1.0 - r * r)) /
                 i0_beta_;
      double h = 2.0 * cutoff_ * Sinc(2.0 * cutoff_ * tau) * window;
      (*taps)[static_cast<size_t>(k - lo)] = h;
      sum += h;
    }
    if (sum != 0.0)
      for (double &h : *taps) h /= sum;
  }

 private:
  double cutoff_ = 0.0;
  double half_width_ = 0.0;
  double i0_beta_ = 1.0;
};

double Convolve(const std::vector<double> &x, long first,
                const std::vector<double> &taps) {
  double acc = 0.0;
  const long n = static_cast<long>(x.size());
  for (size_t j = 0; j < taps.size(); ++j) {
    long k = first + static_cast<long>(j);
    if (k >= 0 && k < n) acc += taps[j] * x[static_cast<size_t>(k)];
  }
  return acc;
}

}  // namespace

Waveform Resample(const Waveform &w, int target_rate) {
  if (target_rate <= 0) throw Error("target rate must be positive");
  const int source_rate = w.sample_rate();
  if (source_rate == target_rate) return w;

  const long g = std::gcd(source_rate, target_rate);
  const long up = target_rate / g;     // output samples per period
  const long down = source_rate / g;   // input samples per period
  const size_t out_len = static_cast<size_t>(
      (static_cast<long long>(w.size()) * up + down - 1) / down);
  const std::vector<double> &x = w.samples();
  KernelDesign design(source_rate, target_rate);
  std::vector<double> out(out_len);

  if (up <= kMaxPolyphase) {
    // Output n sits at input position n·down/up; its fractional part
    // depends only on n mod up.
    std::vector<std::vector<double>> phase_taps(static_cast<size_t>(up));
    std::vector<long> phase_first(static_cast<size_t>(up));
    for (long p = 0; p < up; ++p) {
      long whole = (p * down) / up;
      double t = static_cast<double>(p * down) / up - static_cast<double>(whole);
      long first;
      design.Taps(t, &first, &phase_taps[static_cast<size_t>(p)]);
      phase_first[static_cast<size_t>(p)] = first;
    }
    for (size_t n = 0; n < out_len; ++n) {
      long long num = static_cast<long long>(n) * down;
      long whole = static_cast<long>(num / up);
      size_t p = static_cast<size_t>(n % static_cast<size_t>(up));
      out[n] = Convolve(x, whole + phase_first[p], phase_taps[p]);
    }
  } else {
    std::vector<double> taps;
    for (size_t n = 0; n < out_len; ++n) {
      double t = static_cast<double>(n) * source_rate / target_rate;
      long first;
      design.Taps(t, &first, &taps);
      out[n] = Convolve(x, first, taps);
    }
  }
  return Waveform(target_rate, std::move(out));
}

}  // namespace pararank
