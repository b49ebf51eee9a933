// audio/wav-io.cc

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

#include "audio/wav-io.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "base/pararank-error.h"

namespace pararank {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint32_t ReadU32(const unsigned char *p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t ReadU16(const unsigned char *p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void PutU32(std::string *out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void PutU16(std::string *out, uint16_t v) {
  out->push_back(static_cast<char>(v & 0xFF));
  out->push_back(static_cast<char>((v >> 8) & 0xFF));
}

}  // namespace

Waveform ReadWav(std::istream &is, const std::string &source) {
  std::vector<unsigned char> data((std::istreambuf_iterator<char>(is)),
                                  std::istreambuf_iterator<char>());
  auto fail = [&](const std::string &why) -> Error {
    return Error(source + ": " + why);
  };
  if (data.size() < 12 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
      std::memcmp(data.data() + 8, "WAVE", 4) != 0)
    throw fail("malformed header (not RIFF/WAVE)");

  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  const unsigned char *pcm = nullptr;
  size_t pcm_bytes = 0;
  size_t pos = 12;
  while (pos + 8 <= data.size()) {
    const unsigned char *chunk = data.data() + pos;
    uint32_t size = ReadU32(chunk + 4);
    size_t body = pos + 8;
    size_t avail = data.size() - body;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16 || size > avail) throw fail("malformed fmt chunk");
      format = ReadU16(chunk + 8);
      channels = ReadU16(chunk + 10);
      rate = ReadU32(chunk + 12);
      bits = ReadU16(chunk + 22);
      if (format == kFormatExtensible) {
        if (size < 40) throw fail("malformed extensible fmt chunk");
        format = ReadU16(chunk + 8 + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      pcm = chunk + 8;
      // Tolerate a data size that overruns a truncated file.
      pcm_bytes = std::min<size_t>(size, avail);
    }
    pos = body + size + (size & 1);
  }
  if (!have_fmt) throw fail("malformed header (no fmt chunk)");
  if (pcm == nullptr) throw fail("malformed header (no data chunk)");
  if (channels != 1)
    throw fail("mono required, found " + std::to_string(channels) +
               " channels");
  if (rate == 0) throw fail("malformed header (zero sample rate)");

  std::vector<double> samples;
  if (format == kFormatPcm && bits == 16) {
    samples.resize(pcm_bytes / 2);
    for (size_t i = 0; i < samples.size(); ++i) {
      int16_t v = static_cast<int16_t>(ReadU16(pcm + 2 * i));
      samples[i] = v / 32768.0;
    }
  } else if (format == kFormatFloat && bits == 32) {
    samples.resize(pcm_bytes / 4);
    for (size_t i = 0; i < samples.size(); ++i) {
      uint32_t bitsv = ReadU32(pcm + 4 * i);
      float f;
      std::memcpy(&f, &bitsv, sizeof(f));
      samples[i] = f;
    }
  } else {
    throw fail("unsupported encoding (format " + std::to_string(format) +
               ", " + std::to_string(bits) +
               " bits); need 16-bit PCM or 32-bit float");
  }
  return Waveform(static_cast<int>(rate), std::move(samples));
}

Waveform ReadWav(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open " + path);
  return ReadWav(is, path);
}

void WriteWav(std::ostream &os, const Waveform &wave, WavEncoding encoding) {
  const bool pcm = encoding == WavEncoding::kPcm16;
  const uint16_t bytes_per_sample = pcm ? 2 : 4;
  const uint32_t data_bytes =
      static_cast<uint32_t>(wave.size() * bytes_per_sample);
  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  PutU32(&out, 36 + data_bytes);
  out += "WAVEfmt ";
  PutU32(&out, 16);
  PutU16(&out, pcm ? kFormatPcm : kFormatFloat);
  PutU16(&out, 1);
  PutU32(&out, static_cast<uint32_t>(wave.sample_rate()));
  PutU32(&out, static_cast<uint32_t>(wave.sample_rate()) * bytes_per_sample);
  PutU16(&out, bytes_per_sample);
  PutU16(&out, static_cast<uint16_t>(8 * bytes_per_sample));
  out += "data";
  PutU32(&out, data_bytes);
  for (double s : wave.samples()) {
    if (pcm) {
      double scaled = std::round(s * 32768.0);
      scaled = std::clamp(scaled, -32768.0, 32767.0);
      PutU16(&out, static_cast<uint16_t>(static_cast<int16_t>(scaled)));
    } else {
      float f = static_cast<float>(s);
      uint32_t bits;
      std::memcpy(&bits, &f, sizeof(bits));
      PutU32(&out, bits);
    }
  }
  os.write(out.data(), static_cast<std::streamsize>(out.size()));
}

void WriteWav(const std::string &path, const Waveform &wave,
              WavEncoding encoding) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write " + path);
  WriteWav(os, wave, encoding);
  if (!os) throw Error("write failed for " + path);
}

}  // namespace pararank
