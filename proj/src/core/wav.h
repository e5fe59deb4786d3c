// src/core/wav.h

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

#ifndef NYTT_CORE_WAV_H_
#define NYTT_CORE_WAV_H_

#include <cstdint>
#include <string>

#include "core/audio.h"

namespace nytt {

// Reads a RIFF/WAVE file. Only PCM, 16-bit, mono is accepted; anything else
// raises an unsupported-format error naming the offending field. Samples are
// scaled to [-1, 1) as s / 32768.
AudioClip ReadWav(const std::string &path);

// Writes 16-bit PCM mono little-endian. Samples are rounded to the nearest
// integer level; values outside [-1, 1] are clipped and counted. Returns the
// number of clipped samples.
int64_t WriteWav(const AudioClip &clip, const std::string &path);

}  // namespace nytt

#endif  // NYTT_CORE_WAV_H_
