// src/core/rng.cc

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

#include "core/rng.h"

#include <cmath>

namespace nytt {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t DeriveSeed(std::initializer_list<uint64_t> parts) {
  uint64_t h = 0x6a09e667f3bcc909ULL;
  for (uint64_t p : parts) h = SplitMix64(h ^ p);
  return h;
}

double Rng::Normal() {
  // Box-Muller, cosine branch. u1 kept away from 0 so log stays finite.
  double u1, u2;
  do {
    u1 = Real01();
  } while (u1 <= 0.0);
  u2 = Real01();
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

size_t Rng::Index(size_t n) {
  // Multiply-shift bound; bias is below 2^-64 * n which is irrelevant here.
  if (n == 0) return 0;
  unsigned __int128 wide = static_cast<unsigned __int128>(Uint64());
  return static_cast<size_t>((wide * n) >> 64);
}

}  // namespace nytt
