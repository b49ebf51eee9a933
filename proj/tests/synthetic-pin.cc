// tests/synthetic-pin.cc

// Copyright 2026  The para-rank Authors

// See ../COPYING for clarification regarding multiple authors
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

#include "synthetic-pin.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <vector>

#include "audio/noise-mixing.h"
#include "audio/wav-io.h"
#include "base/pararank-error.h"
#include "base/random.h"
#include "base/text-utils.h"

namespace pararank {

namespace {

const char *const kWords[] = {
    "the",    "a",      "big",    "one",    "you",   "never",  "hear",
    "about",  "it",     "really", "in",     "we",    "went",   "to",
    "see",    "house",  "car",    "dog",    "cat",   "red",    "blue",
    "good",   "time",   "day",    "night",  "water", "food",   "go",
    "come",   "think",  "know",   "want",   "like",  "people", "world",
    "little", "small",  "large",  "old",    "new",   "school", "work",
    "home",   "city",   "morning", "table", "window", "friend", "music",
    "story"};
constexpr int kNumWords = sizeof(kWords) / sizeof(kWords[0]);

struct Utterance {
  std::string id, triplet, text;
  int position = 0;
  double snr = 0.0;
  double stoi = 0.0;
  double ppl = 0.0;
  std::vector<std::string> words;
  std::vector<std::string> transcripts;
};

double Logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::string Transcribe(const std::vector<std::string> &words, double q,
                       Rng *rng) {
  std::vector<std::string> out;
  for (const auto &w : words) {
    double u = rng->Uniform();
    if (u < q) {
      out.push_back(w);
    } else if (u < q + (1 - q) * 0.5) {
      out.push_back("(...)");
    } else if (u < q + (1 - q) * 0.8) {
      out.push_back(kWords[rng->UniformInt(kNumWords)]);
    }
  }
  return JoinStrings(out, " ");
}

// Speech-like test signal: noise under a syllable-rate envelope.
Waveform SpeechLike(Rng *rng, size_t n, int rate) {
  std::vector<double> s(n);
  double f = 3.0 + 2.0 * rng->Uniform();
  double lp = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double env = std::sin(std::numbers::pi * f * i / rate);
    lp = 0.7 * lp + 0.3 * rng->Gaussian();
    s[i] = 0.3 * env * env * lp;
  }
  return Waveform(rate, s);
}

Waveform Babble(Rng *rng, size_t n, int rate) {
  std::vector<double> s(n, 0.0);
  for (int talker = 0; talker < 6; ++talker) {
    Waveform t = SpeechLike(rng, n, rate);
    for (size_t i = 0; i < n; ++i) s[i] += t.samples()[i] / 6.0;
  }
  return Waveform(rate, s);
}

void Assign(std::vector<int> *flags_a, std::vector<int> *flags_b, int both,
            int either, Rng *rng) {
  const int n = static_cast<int>(flags_a->size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  rng->Shuffle(&idx);
  for (int k = 0; k < n; ++k) {
    int i = idx[k];
    if (k < both) {
      (*flags_a)[i] = (*flags_b)[i] = 1;
    } else if (k < either) {
      bool a = rng->UniformInt(2) == 0;
      (*flags_a)[i] = a;
      (*flags_b)[i] = !a;
    }
  }
}

}  // namespace

void WriteSyntheticPin(const std::string &dir, const SyntheticPinOptions &opts) {
  namespace fs = std::filesystem;
  if (opts.published_annotations && opts.triplets_per_snr != 100)
    throw Error("published annotation counts need 100 triplets per SNR");
  fs::create_directories(dir);
  Rng rng(opts.seed);
  const double snrs[] = {5.0, 0.0, -5.0};
  const double stoi_mean[] = {0.92, 0.84, 0.66};
  const double offset[] = {4.2, 3.4, 1.2};
  const int published_both[] = {104, 123, 105};
  const int published_either[] = {195, 205, 196};

  std::vector<Utterance> utts;
  for (int s = 0; s < 3; ++s) {
    for (int t = 0; t < opts.triplets_per_snr; ++t) {
      std::string trip = "t" + std::to_string(s * 1000 + t);
      std::vector<std::string> base;
      int len = 5 + static_cast<int>(rng.UniformInt(6));
      for (int i = 0; i < len; ++i)
        base.push_back(kWords[rng.UniformInt(kNumWords)]);
      for (int pos = 1; pos <= 3; ++pos) {
        Utterance u;
        u.triplet = trip;
        u.position = pos;
        u.id = trip + "_s" + std::to_string(pos);
        u.snr = snrs[s];
        u.words = base;
        // Paraphrase: drop or add a couple of words.
        int edits = static_cast<int>(rng.UniformInt(4));
        for (int e = 0; e < edits; ++e) {
          if (u.words.size() > 3 && rng.UniformInt(2) == 0)
            u.words.erase(u.words.begin() + rng.UniformInt(u.words.size()));
          else
            u.words.insert(u.words.begin() + rng.UniformInt(u.words.size() + 1),
                           kWords[rng.UniformInt(kNumWords)]);
        }
        u.text = JoinStrings(u.words, " ");
        u.stoi = std::clamp(stoi_mean[s] + 0.06 * rng.Gaussian(), 0.05, 0.99);
        u.ppl = 40.0 * std::exp(0.5 * rng.Gaussian());
        double q = Logistic(offset[s] + 14.0 * (u.stoi - stoi_mean[s]) -
                            0.12 * (static_cast<double>(u.words.size()) - 8) -
                            0.8 * std::log(u.ppl / 40.0));
        for (int l = 0; l < 6; ++l)
          u.transcripts.push_back(Transcribe(u.words, q, &rng));
        utts.push_back(std::move(u));
      }
    }
  }

  std::ofstream rec(fs::path(dir) / "records.tsv");
  rec << "utterance_id\ttriplet_id\tposition\tsnr_db\ttext";
  for (int l = 1; l <= 6; ++l) rec << "\ttranscript_" << l;
  rec << "\n";
  for (const auto &u : utts) {
    rec << u.id << '\t' << u.triplet << "\ts" << u.position << '\t'
        << FormatDouble(u.snr) << '\t' << u.text;
    for (const auto &t : u.transcripts) rec << '\t' << t;
    rec << "\n";
  }

  std::ofstream ann(fs::path(dir) / "annotations.tsv");
  ann << "pair_id\tannotator_a\tannotator_b\n";
  for (int s = 0; s < 3; ++s) {
    int n = opts.triplets_per_snr * 3;
    std::vector<int> fa(n, 0), fb(n, 0);
    if (opts.published_annotations)
      Assign(&fa, &fb, published_both[s], published_either[s], &rng);
    else
      Assign(&fa, &fb, n / 3, 2 * n / 3, &rng);
    static const char *kPairs[] = {"s1-s2", "s2-s3", "s1-s3"};
    for (int t = 0; t < opts.triplets_per_snr; ++t)
      for (int k = 0; k < 3; ++k) {
        int i = t * 3 + k;
        ann << "t" << s * 1000 + t << ':' << kPairs[k] << '\t' << fa[i]
            << '\t' << fb[i] << "\n";
      }
  }

  if (opts.with_features) {
    std::ofstream f(fs::path(dir) / "features.csv");
    std::ofstream p(fs::path(dir) / "ppl.csv");
    f << "utterance_id,snr,phLen,ppl,stoi\n";
    p << "utterance_id,ppl\n";
    for (const auto &u : utts) {
      // phLen approximated as 3.2 phonemes per word; exact value is
      // recomputed by the features command when it runs G2P.
      int ph = static_cast<int>(std::lround(3.2 * u.words.size()));
      f << u.id << ',' << FormatDouble(u.snr) << ',' << ph << ','
        << FormatDouble(u.ppl) << ',' << FormatDouble(u.stoi) << "\n";
      p << u.id << ',' << FormatDouble(u.ppl) << "\n";
    }
  }

  if (opts.with_lm_corpus) {
    std::ofstream c(fs::path(dir) / "lm-corpus.txt");
    for (int i = 0; i < 400; ++i) {
      int len = 4 + static_cast<int>(rng.UniformInt(8));
      std::vector<std::string> w;
      for (int j = 0; j < len; ++j) w.push_back(kWords[rng.UniformInt(kNumWords / 2)]);
      c << JoinStrings(w, " ") << "\n";
    }
  }

  if (opts.with_audio) {
    const int rate = 10000;
    fs::create_directories(fs::path(dir) / "clean");
    fs::create_directories(fs::path(dir) / "noisy");
    Waveform noise = Babble(&rng, rate * 6, rate);
    WriteWav((fs::path(dir) / "noise.wav").string(), noise, WavEncoding::kFloat32);
    for (const auto &u : utts) {
      size_t n = static_cast<size_t>(rate * (0.25 * u.words.size() + 0.2));
      Waveform clean = SpeechLike(&rng, n, rate);
      size_t offset = RandomNoiseOffset(noise.size(), rng.UniformInt(1u << 30));
      MixResult m = MixAtSnr(clean, noise, u.snr, offset);
      WriteWav((fs::path(dir) / "clean" / (u.id + ".wav")).string(), clean,
               WavEncoding::kFloat32);
      WriteWav((fs::path(dir) / "noisy" / (u.id + ".wav")).string(), m.mixture,
               WavEncoding::kFloat32);
    }
  }
}

}  // namespace pararank
