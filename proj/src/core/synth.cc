// src/core/synth.cc

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

#include "core/synth.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "core/error.h"
#include "core/rng.h"

namespace nytt {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Direct-form biquad; bandpass coefficients per the usual cookbook recipe
// (constant 0 dB peak gain).
struct Biquad {
  double b0 = 0, b1 = 0, b2 = 0, a1 = 0, a2 = 0;
  double z1 = 0, z2 = 0;

  void SetBandpass(double fc, double bw, double fs) {
    double q = fc / bw;
    double w = kTwoPi * fc / fs;
    double alpha = std::sin(w) / (2.0 * q);
    double a0 = 1.0 + alpha;
    b0 = alpha / a0;
    b1 = 0.0;
    b2 = -alpha / a0;
    a1 = -2.0 * std::cos(w) / a0;
    a2 = (1.0 - alpha) / a0;
  }

  double Step(double x) {
    double y = b0 * x + z1;
    z1 = b1 * x - a1 * y + z2;
    z2 = b2 * x - a2 * y;
    return y;
  }
};

struct FormantTrack {
  double center = 0;   // base center frequency, Hz
  double depth = 0;    // relative modulation depth
  double rate = 0;     // modulation rate, Hz
  double phase = 0;
  double bandwidth = 0;
  double gain = 0;
  Biquad filter;

  double CenterAt(double t) const {
    return center * (1.0 + depth * std::sin(kTwoPi * rate * t + phase));
  }
};

// Builds the syllable-rate amplitude envelope: voiced spans of 220-380 ms
// separated by hard gaps of 70-150 ms, with 20 ms raised-cosine edges.
std::vector<double> SyllableEnvelope(int64_t n, int sample_rate, Rng *rng) {
  std::vector<double> env(n, 0.0);
  const int64_t ramp = sample_rate / 50;  // 20 ms
  int64_t cursor = 0;
  while (cursor < n) {
    int64_t voiced = static_cast<int64_t>(
        std::llround(rng->Uniform(0.22, 0.38) * sample_rate));
    int64_t gap = static_cast<int64_t>(
        std::llround(rng->Uniform(0.07, 0.15) * sample_rate));
    double level = rng->Uniform(0.7, 1.0);
    for (int64_t i = 0; i < voiced && cursor + i < n; ++i) {
      double shape = 1.0;
      if (i < ramp) {
        shape = 0.5 - 0.5 * std::cos(kTwoPi * 0.5 * i / ramp);
      } else if (voiced - i <= ramp) {
        shape = 0.5 - 0.5 * std::cos(kTwoPi * 0.5 * (voiced - i) / ramp);
      }
      env[cursor + i] = level * shape;
    }
    cursor += voiced + gap;
  }
  return env;
}

AudioClip SynthVoice(uint64_t stream_seed, int64_t n, int sample_rate) {
  Rng rng(stream_seed);
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.assign(n, 0.0);

  std::vector<double> env = SyllableEnvelope(n, sample_rate, &rng);

  double f0_base = rng.Uniform(95.0, 250.0);
  double vib_rate = rng.Uniform(4.5, 6.5);
  double vib_depth = rng.Uniform(0.01, 0.03);
  double drift_rate = rng.Uniform(0.15, 0.5);
  double drift_depth = rng.Uniform(0.08, 0.18);
  double vib_phase = rng.Uniform(0.0, kTwoPi);
  double drift_phase = rng.Uniform(0.0, kTwoPi);

  FormantTrack formants[3];
  const double lo[3] = {420.0, 1150.0, 2300.0};
  const double hi[3] = {780.0, 1900.0, 3100.0};
  const double bw[3] = {90.0, 130.0, 220.0};
  const double gain[3] = {1.0, 0.63, 0.35};
  for (int k = 0; k < 3; ++k) {
    formants[k].center = rng.Uniform(lo[k], hi[k]);
    formants[k].depth = rng.Uniform(0.05, 0.12);
    formants[k].rate = rng.Uniform(0.15, 0.55);
    formants[k].phase = rng.Uniform(0.0, kTwoPi);
    formants[k].bandwidth = bw[k];
    formants[k].gain = gain[k];
  }

  const int64_t block = sample_rate / 100;  // refresh formants every 10 ms
  double phase = rng.Real01();
  for (int64_t i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / sample_rate;
    if (i % block == 0) {
      for (auto &f : formants) {
        f.filter.SetBandpass(f.CenterAt(t), f.bandwidth, sample_rate);
      }
    }
    double f0 = f0_base * (1.0 + vib_depth * std::sin(kTwoPi * vib_rate * t +
                                                      vib_phase) +
                           drift_depth * std::sin(kTwoPi * drift_rate * t +
                                                  drift_phase));
    f0 = std::clamp(f0, 80.0, 300.0);
    phase += f0 / sample_rate;
    phase -= std::floor(phase);
    double excitation = 2.0 * phase - 1.0 + 0.04 * rng.Normal();
    double voice = 0.0;
    for (auto &f : formants) voice += f.gain * f.filter.Step(excitation);
    clip.samples[i] = voice * env[i];
  }
  NormalizeRms(&clip, kSynthRms);
  return clip;
}

AudioClip SynthWhite(uint64_t stream_seed, int64_t n, int sample_rate) {
  Rng rng(stream_seed);
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.resize(n);
  for (auto &s : clip.samples) s = rng.Normal();
  NormalizeRms(&clip, kSynthRms);
  return clip;
}

AudioClip SynthPink(uint64_t stream_seed, int64_t n, int sample_rate) {
  // Paul Kellet's pole-zero 1/f approximation; the design is in normalized
  // frequency, so the -3 dB/octave slope carries over to any sample rate.
  Rng rng(stream_seed);
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.resize(n);
  double b0 = 0, b1 = 0, b2 = 0, b3 = 0, b4 = 0, b5 = 0, b6 = 0;
  for (auto &s : clip.samples) {
    double w = rng.Normal();
    b0 = 0.99886 * b0 + w * 0.0555179;
    b1 = 0.99332 * b1 + w * 0.0750759;
    b2 = 0.96900 * b2 + w * 0.1538520;
    b3 = 0.86650 * b3 + w * 0.3104856;
    b4 = 0.55000 * b4 + w * 0.5329522;
    b5 = -0.7616 * b5 - w * 0.0168980;
    s = b0 + b1 + b2 + b3 + b4 + b5 + b6 + w * 0.5362;
    b6 = w * 0.115926;
  }
  NormalizeRms(&clip, kSynthRms);
  return clip;
}

AudioClip SynthMachinery(uint64_t stream_seed, int64_t n, int sample_rate) {
  Rng rng(stream_seed);
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.assign(n, 0.0);

  double tone_freq[3], tone_phase[3];
  const double tone_gain[3] = {1.0, 0.65, 0.45};
  for (int k = 0; k < 3; ++k) {
    tone_freq[k] = rng.Uniform(50.0, 400.0);
    tone_phase[k] = rng.Uniform(0.0, kTwoPi);
  }
  Biquad narrowband;
  narrowband.SetBandpass(rng.Uniform(90.0, 320.0), 30.0, sample_rate);

  for (int64_t i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / sample_rate;
    double tones = 0.0;
    for (int k = 0; k < 3; ++k) {
      tones += tone_gain[k] * std::sin(kTwoPi * tone_freq[k] * t +
                                       tone_phase[k]);
    }
    double nb = narrowband.Step(rng.Normal());
    clip.samples[i] = tones + 3.0 * nb;
  }
  NormalizeRms(&clip, kSynthRms);
  return clip;
}

AudioClip SynthBabble(uint64_t stream_seed, int64_t n, int sample_rate) {
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.assign(n, 0.0);
  for (int voice = 0; voice < 8; ++voice) {
    AudioClip v = SynthVoice(DeriveSeed({stream_seed, kTagSynthVoice,
                                         static_cast<uint64_t>(voice)}),
                             n, sample_rate);
    for (int64_t i = 0; i < n; ++i) clip.samples[i] += v.samples[i];
  }
  NormalizeRms(&clip, kSynthRms);
  return clip;
}

}  // namespace

const char *NoiseFamilyName(NoiseFamily family) {
  switch (family) {
    case NoiseFamily::kWhite:
      return "white";
    case NoiseFamily::kPink:
      return "pink";
    case NoiseFamily::kMachinery:
      return "machinery";
    case NoiseFamily::kBabbleProxy:
      return "babble";
  }
  return "unknown";
}

NoiseFamily ParseNoiseFamily(const std::string &name) {
  if (name == "white") return NoiseFamily::kWhite;
  if (name == "pink") return NoiseFamily::kPink;
  if (name == "machinery") return NoiseFamily::kMachinery;
  if (name == "babble") return NoiseFamily::kBabbleProxy;
  throw Error(StatusCode::kInvalidArgument,
              "unknown noise family: " + name);
}

AudioClip SynthSpeech(uint64_t seed, double duration_s, int sample_rate) {
  RequireArg(duration_s >= 0.5 && duration_s <= 60.0,
             "SynthSpeech: duration_s must lie in [0.5, 60]");
  RequireArg(sample_rate > 0, "SynthSpeech: sample_rate must be positive");
  int64_t n = static_cast<int64_t>(std::llround(duration_s * sample_rate));
  AudioClip clip =
      SynthVoice(DeriveSeed({seed, kTagSynthVoice}), n, sample_rate);
  clip.id = "speech-" + std::to_string(seed);
  return clip;
}

AudioClip SynthNoise(const NoiseFamilySpec &spec) {
  RequireArg(spec.duration_s > 0.0 && spec.duration_s <= 36000.0,
             "SynthNoise: duration_s must lie in (0, 36000]");
  RequireArg(spec.sample_rate > 0, "SynthNoise: sample_rate must be positive");
  int64_t n =
      static_cast<int64_t>(std::llround(spec.duration_s * spec.sample_rate));
  uint64_t stream = DeriveSeed({spec.seed, kTagNoisePool,
                                static_cast<uint64_t>(spec.family)});
  AudioClip clip;
  switch (spec.family) {
    case NoiseFamily::kWhite:
      clip = SynthWhite(stream, n, spec.sample_rate);
      break;
    case NoiseFamily::kPink:
      clip = SynthPink(stream, n, spec.sample_rate);
      break;
    case NoiseFamily::kMachinery:
      clip = SynthMachinery(stream, n, spec.sample_rate);
      break;
    case NoiseFamily::kBabbleProxy:
      clip = SynthBabble(stream, n, spec.sample_rate);
      break;
  }
  clip.id = std::string(NoiseFamilyName(spec.family)) + "-" +
            std::to_string(spec.seed);
  return clip;
}

}  // namespace nytt
