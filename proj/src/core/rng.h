// src/core/rng.h

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

#ifndef NYTT_CORE_RNG_H_
#define NYTT_CORE_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace nytt {

// All randomness in the library flows through this header. Distributions are
// implemented by hand on top of std::mt19937_64 so that a given seed yields
// the same stream on every platform and standard library.

uint64_t SplitMix64(uint64_t x);

// Folds a list of 64-bit parts into one derived seed. Used to give every
// dataset item, epoch and layer its own independent stream:
//   DeriveSeed({base, kTagSomething, index}).
uint64_t DeriveSeed(std::initializer_list<uint64_t> parts);

// Stream separation tags (arbitrary distinct constants).
enum : uint64_t {
  kTagSynthVoice = 0x01,
  kTagNoisePool = 0x02,
  kTagObsMix = 0x03,
  kTagTestMix = 0x04,
  kTagEpochShuffle = 0x05,
  kTagTrainMix = 0x06,
  kTagInitLayer = 0x07,
  kTagProbeMix = 0x08,
  kTagCleanClip = 0x09,
};

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Uint64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Real01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Real01(); }

  // Standard normal via Box-Muller (one value per call, no cached spare).
  double Normal();

  // Uniform index in [0, n).
  size_t Index(size_t n);

  template <typename T>
  void Shuffle(std::vector<T> *v) {
    for (size_t i = v->size(); i > 1; --i) {
      size_t j = Index(i);
      std::swap((*v)[i - 1], (*v)[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nytt

#endif  // NYTT_CORE_RNG_H_
