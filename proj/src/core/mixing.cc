// src/core/mixing.cc

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

#include "core/mixing.h"

#include <cmath>

#include "core/error.h"

namespace nytt {

namespace {

thread_local int g_training_scope_depth = 0;

}  // namespace

MixResult MixAtSnr(const AudioClip &clean, const AudioClip &noise,
                   double snr_db, Rng *rng) {
  ValidateClip(clean, "MixAtSnr(clean)");
  ValidateClip(noise, "MixAtSnr(noise)");
  RequireArg(clean.sample_rate == noise.sample_rate,
             "MixAtSnr: sample rates differ");
  RequireArg(noise.length() >= clean.length(),
             "MixAtSnr: noise must be at least as long as the target");

  const int64_t len = clean.length();
  const int64_t offset =
      static_cast<int64_t>(rng->Index(noise.length() - len + 1));
  std::span<const double> segment(noise.samples.data() + offset,
                                  static_cast<size_t>(len));

  const double p_clean = MeanSquare(clean.samples);
  const double p_noise = MeanSquare(segment);
  Require(p_clean > 0.0, StatusCode::kDegenerateInput,
          "MixAtSnr: target signal has zero power");
  Require(p_noise > 0.0, StatusCode::kDegenerateInput,
          "MixAtSnr: noise segment has zero power");

  const double g =
      std::sqrt(p_clean / (p_noise * std::pow(10.0, snr_db / 10.0)));

  MixResult result;
  result.mixture.sample_rate = clean.sample_rate;
  result.mixture.samples.resize(len);
  for (int64_t i = 0; i < len; ++i) {
    result.mixture.samples[i] = clean.samples[i] + g * segment[i];
  }
  result.mixture.id = clean.id + "+" + noise.id;
  result.record.clean_id = clean.id;
  result.record.noise_id = noise.id;
  result.record.mixture_id = result.mixture.id;
  result.record.snr_db = snr_db;
  result.record.noise_scale = g;
  result.record.noise_offset = offset;
  return result;
}

double MeasureSnrDb(const AudioClip &reference,
                    const AudioClip &scaled_noise) {
  RequireArg(reference.samples.size() == scaled_noise.samples.size(),
             "MeasureSnrDb: length mismatch");
  double p_ref = MeanSquare(reference.samples);
  double p_noise = MeanSquare(scaled_noise.samples);
  Require(p_ref > 0.0 && p_noise > 0.0, StatusCode::kDegenerateInput,
          "MeasureSnrDb: zero-power input");
  return 10.0 * std::log10(p_ref / p_noise);
}

TrainingScope::TrainingScope() { ++g_training_scope_depth; }
TrainingScope::~TrainingScope() { --g_training_scope_depth; }
bool TrainingScope::InTrainingScope() { return g_training_scope_depth > 0; }

std::atomic<int64_t> NoisyTargetItem::guard_violations_{0};

const AudioClip &NoisyTargetItem::clean() const {
  if (TrainingScope::InTrainingScope()) {
    guard_violations_.fetch_add(1, std::memory_order_relaxed);
    throw Error(StatusCode::kStateError,
                "provenance guard: training strategies must not read the "
                "clean component of a noisy target");
  }
  return clean_;
}

int64_t NoisyTargetItem::guard_violations() {
  return guard_violations_.load(std::memory_order_relaxed);
}

void NoisyTargetItem::reset_guard_violations() {
  guard_violations_.store(0, std::memory_order_relaxed);
}

NoisyTargetItem NoisyTargetSetBuilder::MakeItem(AudioClip x, AudioClip clean,
                                                MixtureRecord record,
                                                int clean_index) {
  NoisyTargetItem item;
  item.x = std::move(x);
  item.clean_ = std::move(clean);
  item.record = std::move(record);
  item.clean_index = clean_index;
  return item;
}

NoisyTargetSet BuildNoisyTargetSet(const std::vector<AudioClip> &cleans,
                                   const AudioClip &noise_pool,
                                   const std::vector<double> &snr_choices_db,
                                   uint64_t seed) {
  RequireArg(!cleans.empty(), "BuildNoisyTargetSet: empty clean set");
  RequireArg(!snr_choices_db.empty(),
             "BuildNoisyTargetSet: empty SNR choice set");
  ValidateClip(noise_pool, "BuildNoisyTargetSet(noise_pool)");

  NoisyTargetSet set;
  set.id = "noisy-" + noise_pool.id + "-" + std::to_string(seed);
  set.items.reserve(cleans.size());
  for (size_t i = 0; i < cleans.size(); ++i) {
    Rng rng(DeriveSeed({seed, kTagObsMix, static_cast<uint64_t>(i)}));
    double snr = snr_choices_db[rng.Index(snr_choices_db.size())];
    MixResult mixed = MixAtSnr(cleans[i], noise_pool, snr, &rng);
    mixed.mixture.id = "x-" + std::to_string(i);
    mixed.record.mixture_id = mixed.mixture.id;
    set.items.push_back(NoisyTargetSetBuilder::MakeItem(
        std::move(mixed.mixture), cleans[i], std::move(mixed.record),
        static_cast<int>(i)));
  }
  return set;
}

}  // namespace nytt
