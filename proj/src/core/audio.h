// src/core/audio.h

// Copyright 2026  NyTT Authors

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

#ifndef NYTT_CORE_AUDIO_H_
#define NYTT_CORE_AUDIO_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nytt {

constexpr int kDefaultSampleRate = 16000;

// Mono discrete-time signal. The universal signal currency of the library:
// clean speech, noise, mixtures and enhanced outputs are all AudioClips.
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = kDefaultSampleRate;
  std::string id;

  int64_t length() const { return static_cast<int64_t>(samples.size()); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// Checks the AudioClip invariants: length >= 1, sample_rate > 0, all samples
// finite. Throws on violation; `what` names the clip in the message.
void ValidateClip(const AudioClip &clip, const std::string &what);

// Order-independent sums: fixed pairwise recursion so that parallel callers
// aggregating per-clip results reproduce serial numbers bit-exactly.
double PairwiseSum(std::span<const double> v);
double PairwiseDot(std::span<const double> a, std::span<const double> b);

double MeanSquare(std::span<const double> v);
double Rms(std::span<const double> v);

// Mean squared difference over two equal-length signals.
double TimeMse(const AudioClip &a, const AudioClip &b);

// Scales the clip so its full-length RMS equals target_rms exactly.
void NormalizeRms(AudioClip *clip, double target_rms);

}  // namespace nytt

#endif  // NYTT_CORE_AUDIO_H_
