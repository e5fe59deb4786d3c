// src/core/mixing.h

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

#ifndef NYTT_CORE_MIXING_H_
#define NYTT_CORE_MIXING_H_

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "core/audio.h"
#include "core/rng.h"

namespace nytt {

// Bookkeeping for one SNR-controlled mix. Re-mixing the referenced clips
// with noise_scale at noise_offset reproduces the mixture bit-exactly.
struct MixtureRecord {
  std::string clean_id;
  std::string noise_id;
  std::string mixture_id;
  double snr_db = 0.0;
  double noise_scale = 0.0;
  int64_t noise_offset = 0;
};

struct MixResult {
  AudioClip mixture;
  MixtureRecord record;
};

// mixture = clean + g * noise[offset : offset + len(clean)] with
// g = sqrt(P_clean / (P_segment * 10^(snr_db / 10))), powers taken as mean
// squared amplitude over the full signal. The offset is drawn from rng; the
// noise must be at least as long as the clean signal (no looping).
// "Clean" is whatever signal plays the target role: more-noisy synthesis
// passes the noisy target here.
MixResult MixAtSnr(const AudioClip &clean, const AudioClip &noise,
                   double snr_db, Rng *rng);

// SNR of (reference, scaled noise) in dB, both measured over full length.
double MeasureSnrDb(const AudioClip &reference, const AudioClip &scaled_noise);

// RAII marker for code that implements a training strategy. While at least
// one scope is alive on the current thread, reading the clean component of a
// noisy-target item trips the provenance guard.
class TrainingScope {
 public:
  TrainingScope();
  ~TrainingScope();
  TrainingScope(const TrainingScope &) = delete;
  TrainingScope &operator=(const TrainingScope &) = delete;

  static bool InTrainingScope();
};

// One noisy target: x = s + g * n_obs. The clean component is retained for
// diagnostics only and sits behind the guard above.
struct NoisyTargetItem {
  AudioClip x;
  MixtureRecord record;
  int clean_index = 0;  // index into the builder's clean list

  const AudioClip &noisy() const { return x; }

  // Diagnostics-only accessor. Throws (and counts a violation) when called
  // from inside a TrainingScope.
  const AudioClip &clean() const;

  static int64_t guard_violations();
  static void reset_guard_violations();

 private:
  friend class NoisyTargetSetBuilder;
  AudioClip clean_;
  static std::atomic<int64_t> guard_violations_;
};

struct NoisyTargetSet {
  std::vector<NoisyTargetItem> items;
  std::string id;
};

class NoisyTargetSetBuilder {
 public:
  static NoisyTargetItem MakeItem(AudioClip x, AudioClip clean,
                                  MixtureRecord record, int clean_index);
};

// One mixture per clean clip, SNR drawn uniformly from snr_choices_db, noise
// segment cropped from noise_pool. Item i uses the stream derived from
// (seed, kTagObsMix, i), so parallel and serial builds agree bit-exactly.
NoisyTargetSet BuildNoisyTargetSet(const std::vector<AudioClip> &cleans,
                                   const AudioClip &noise_pool,
                                   const std::vector<double> &snr_choices_db,
                                   uint64_t seed);

}  // namespace nytt

#endif  // NYTT_CORE_MIXING_H_
