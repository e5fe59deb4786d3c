// src/core/wav.cc

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

#include "core/wav.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

#include "core/error.h"

namespace nytt {

namespace {

constexpr uint16_t kFormatPcm = 1;

void PutU16(std::vector<uint8_t> *out, uint16_t v) {
  out->push_back(static_cast<uint8_t>(v & 0xff));
  out->push_back(static_cast<uint8_t>(v >> 8));
}

void PutU32(std::vector<uint8_t> *out, uint32_t v) {
  out->push_back(static_cast<uint8_t>(v & 0xff));
  out->push_back(static_cast<uint8_t>((v >> 8) & 0xff));
  out->push_back(static_cast<uint8_t>((v >> 16) & 0xff));
  out->push_back(static_cast<uint8_t>((v >> 24) & 0xff));
}

uint16_t GetU16(const uint8_t *p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

uint32_t GetU32(const uint8_t *p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

}  // namespace

AudioClip ReadWav(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  Require(in.good(), StatusCode::kIoError, "ReadWav: cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  Require(bytes.size() >= 12, StatusCode::kUnsupportedFormat,
          "ReadWav: file too short for a RIFF header: " + path);
  Require(std::memcmp(bytes.data(), "RIFF", 4) == 0,
          StatusCode::kUnsupportedFormat,
          "ReadWav: missing RIFF magic in " + path);
  Require(std::memcmp(bytes.data() + 8, "WAVE", 4) == 0,
          StatusCode::kUnsupportedFormat,
          "ReadWav: RIFF form type is not WAVE in " + path);

  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  const uint8_t *data = nullptr;
  uint32_t data_len = 0;

  // Walk chunks; fmt must precede data per the spec, tolerate extra chunks.
  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const uint8_t *hdr = bytes.data() + pos;
    uint32_t chunk_len = GetU32(hdr + 4);
    size_t body = pos + 8;
    Require(body + chunk_len <= bytes.size(), StatusCode::kUnsupportedFormat,
            "ReadWav: truncated chunk in " + path);
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      Require(chunk_len >= 16, StatusCode::kUnsupportedFormat,
              "ReadWav: fmt chunk too short in " + path);
      format = GetU16(bytes.data() + body);
      channels = GetU16(bytes.data() + body + 2);
      sample_rate = GetU32(bytes.data() + body + 4);
      bits = GetU16(bytes.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = bytes.data() + body;
      data_len = chunk_len;
    }
    pos = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  Require(have_fmt, StatusCode::kUnsupportedFormat,
          "ReadWav: no fmt chunk in " + path);
  Require(format == kFormatPcm, StatusCode::kUnsupportedFormat,
          "ReadWav: audio format " + std::to_string(format) +
              " is not PCM in " + path);
  Require(channels == 1, StatusCode::kUnsupportedFormat,
          "ReadWav: channels = " + std::to_string(channels) +
              ", only mono is supported: " + path);
  Require(bits == 16, StatusCode::kUnsupportedFormat,
          "ReadWav: bits_per_sample = " + std::to_string(bits) +
              ", only 16-bit is supported: " + path);
  Require(data != nullptr, StatusCode::kUnsupportedFormat,
          "ReadWav: no data chunk in " + path);
  Require(data_len % 2 == 0, StatusCode::kUnsupportedFormat,
          "ReadWav: odd data chunk size in " + path);

  AudioClip clip;
  clip.sample_rate = static_cast<int>(sample_rate);
  clip.id = std::filesystem::path(path).stem().string();
  size_t n = data_len / 2;
  clip.samples.resize(n);
  for (size_t i = 0; i < n; ++i) {
    int16_t v = static_cast<int16_t>(GetU16(data + 2 * i));
    clip.samples[i] = static_cast<double>(v) / 32768.0;
  }
  Require(!clip.samples.empty(), StatusCode::kUnsupportedFormat,
          "ReadWav: empty data chunk in " + path);
  return clip;
}

int64_t WriteWav(const AudioClip &clip, const std::string &path) {
  ValidateClip(clip, "WriteWav");
  const size_t n = clip.samples.size();
  int64_t clipped = 0;
  std::vector<uint8_t> out;
  out.reserve(44 + 2 * n);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  PutU32(&out, static_cast<uint32_t>(36 + 2 * n));
  out.insert(out.end(), {'W', 'A', 'V', 'E'});
  out.insert(out.end(), {'f', 'm', 't', ' '});
  PutU32(&out, 16);
  PutU16(&out, kFormatPcm);
  PutU16(&out, 1);  // mono
  PutU32(&out, static_cast<uint32_t>(clip.sample_rate));
  PutU32(&out, static_cast<uint32_t>(clip.sample_rate) * 2);  // byte rate
  PutU16(&out, 2);   // block align
  PutU16(&out, 16);  // bits per sample
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  PutU32(&out, static_cast<uint32_t>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    double scaled = std::nearbyint(clip.samples[i] * 32768.0);
    if (scaled > 32767.0) {
      scaled = 32767.0;
      ++clipped;
    } else if (scaled < -32768.0) {
      scaled = -32768.0;
      ++clipped;
    }
    PutU16(&out, static_cast<uint16_t>(static_cast<int16_t>(scaled)));
  }

  std::ofstream of(path, std::ios::binary | std::ios::trunc);
  Require(of.good(), StatusCode::kIoError, "WriteWav: cannot open " + path);
  of.write(reinterpret_cast<const char *>(out.data()),
           static_cast<std::streamsize>(out.size()));
  Require(of.good(), StatusCode::kIoError, "WriteWav: write failed: " + path);
  return clipped;
}

}  // namespace nytt
