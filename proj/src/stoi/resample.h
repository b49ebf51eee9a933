// stoi/resample.h

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

#ifndef PARARANK_STOI_RESAMPLE_H_
#define PARARANK_STOI_RESAMPLE_H_

#include "audio/waveform.h"

namespace pararank {

// Band-limited resampling with a Kaiser-windowed sinc kernel. The cutoff
// sits at 0.9 of the lower Nyquist frequency; each interpolation phase is
// normalised to unit DC gain. The output has ceil(N · target / source)
// samples. A waveform already at `target_rate` is returned unchanged.
Waveform Resample(const Waveform &w, int target_rate);

}  // namespace pararank

#endif  // PARARANK_STOI_RESAMPLE_H_
