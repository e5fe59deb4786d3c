// src/core/synth.h

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

#ifndef NYTT_CORE_SYNTH_H_
#define NYTT_CORE_SYNTH_H_

#include <cstdint>
#include <string>

#include "core/audio.h"

namespace nytt {

// Every synthetic source is RMS-normalized to this value; it keeps mixtures
// inside [-1, 1] down to -5 dB SNR with high probability.
constexpr double kSynthRms = 0.05;

enum class NoiseFamily {
  kWhite,
  kPink,
  kMachinery,
  kBabbleProxy,
};

const char *NoiseFamilyName(NoiseFamily family);
NoiseFamily ParseNoiseFamily(const std::string &name);

struct NoiseFamilySpec {
  NoiseFamily family = NoiseFamily::kWhite;
  uint64_t seed = 0;
  double duration_s = 1.0;
  int sample_rate = kDefaultSampleRate;
};

// Pseudo-speech: harmonic excitation with a wandering F0 in [80, 300] Hz,
// three resonant formants on slow random trajectories, and a syllable-rate
// envelope with silent gaps. Bit-identical for equal (seed, duration, rate).
// duration_s must lie in [0.5, 60].
AudioClip SynthSpeech(uint64_t seed, double duration_s,
                      int sample_rate = kDefaultSampleRate);

// Deterministic noise generator. Families are pairwise distinguishable by
// long-term spectral shape: kWhite is flat, kPink falls ~3 dB per octave,
// kMachinery is tonal low-frequency hum plus narrowband noise, kBabbleProxy
// is a sum of eight pseudo-speech voices.
AudioClip SynthNoise(const NoiseFamilySpec &spec);

}  // namespace nytt

#endif  // NYTT_CORE_SYNTH_H_
