// audio/wav-io.h

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

#ifndef PARARANK_AUDIO_WAV_IO_H_
#define PARARANK_AUDIO_WAV_IO_H_

#include <iosfwd>
#include <string>

#include "audio/waveform.h"

namespace pararank {

enum class WavEncoding { kPcm16, kFloat32 };

// Reads a mono RIFF/WAVE file with 16-bit PCM or 32-bit IEEE float samples
// (WAVE_FORMAT_EXTENSIBLE with either subformat is accepted). PCM samples
// are scaled by 1/32768, so -32768 reads as -1.0.
Waveform ReadWav(const std::string &path);
Waveform ReadWav(std::istream &is, const std::string &source);

// Float32 output reproduces float-representable samples bit-exactly on
// read. Pcm16 output rounds and saturates to [-32768, 32767].
void WriteWav(const std::string &path, const Waveform &wave,
              WavEncoding encoding = WavEncoding::kFloat32);
void WriteWav(std::ostream &os, const Waveform &wave, WavEncoding encoding);

}  // namespace pararank

#endif  // PARARANK_AUDIO_WAV_IO_H_
