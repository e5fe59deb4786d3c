// src/core/audio.cc

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

#include "core/audio.h"

#include <cmath>

#include "core/error.h"

namespace nytt {

void ValidateClip(const AudioClip &clip, const std::string &what) {
  Require(!clip.samples.empty(), StatusCode::kInvalidArgument,
          what + ": clip must contain at least one sample");
  Require(clip.sample_rate > 0, StatusCode::kInvalidArgument,
          what + ": sample_rate must be positive");
  for (double s : clip.samples) {
    Require(std::isfinite(s), StatusCode::kInvalidArgument,
            what + ": clip contains a non-finite sample");
  }
}

namespace {

double PairwiseSumImpl(const double *v, size_t n) {
  if (n <= 32) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += v[i];
    return acc;
  }
  size_t half = n / 2;
  return PairwiseSumImpl(v, half) + PairwiseSumImpl(v + half, n - half);
}

double PairwiseDotImpl(const double *a, const double *b, size_t n) {
  if (n <= 32) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
  }
  size_t half = n / 2;
  return PairwiseDotImpl(a, b, half) +
         PairwiseDotImpl(a + half, b + half, n - half);
}

}  // namespace

double PairwiseSum(std::span<const double> v) {
  return PairwiseSumImpl(v.data(), v.size());
}

double PairwiseDot(std::span<const double> a, std::span<const double> b) {
  Require(a.size() == b.size(), StatusCode::kInvalidArgument,
          "PairwiseDot: length mismatch");
  return PairwiseDotImpl(a.data(), b.data(), a.size());
}

double MeanSquare(std::span<const double> v) {
  if (v.empty()) return 0.0;
  return PairwiseDotImpl(v.data(), v.data(), v.size()) /
         static_cast<double>(v.size());
}

double Rms(std::span<const double> v) { return std::sqrt(MeanSquare(v)); }

double TimeMse(const AudioClip &a, const AudioClip &b) {
  Require(a.samples.size() == b.samples.size(), StatusCode::kInvalidArgument,
          "TimeMse: length mismatch");
  const size_t n = a.samples.size();
  std::vector<double> diff(n);
  for (size_t i = 0; i < n; ++i) diff[i] = a.samples[i] - b.samples[i];
  return MeanSquare(diff);
}

void NormalizeRms(AudioClip *clip, double target_rms) {
  RequireArg(target_rms > 0.0, "NormalizeRms: target_rms must be positive");
  double rms = Rms(clip->samples);
  Require(rms > 0.0, StatusCode::kDegenerateInput,
          "NormalizeRms: clip has zero power");
  double scale = target_rms / rms;
  for (double &s : clip->samples) s *= scale;
}

}  // namespace nytt
