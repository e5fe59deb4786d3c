// src/core/stft.h

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

#ifndef NYTT_CORE_STFT_H_
#define NYTT_CORE_STFT_H_

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "core/audio.h"

namespace nytt {

struct StftConfig {
  int frame_shift = 128;
  int window_len = 512;
  int dft_size = 512;

  int num_bins() const { return dft_size / 2 + 1; }
  // Zero-padding that guarantees every input sample is covered by a full set
  // of analysis windows: window_len - frame_shift zeros on the left, then up
  // to frame alignment on the right.
  int left_pad() const { return window_len - frame_shift; }
  int64_t FrameCount(int64_t source_len) const {
    return (source_len + frame_shift - 1) / frame_shift;
  }

  void Validate() const;
  bool operator==(const StftConfig &) const = default;
};

// Periodic Hamming window of the given length.
std::vector<double> PeriodicHamming(int len);

struct Spectrogram {
  Eigen::MatrixXcd bins;  // num_bins x frames
  StftConfig config;
  int64_t source_len = 0;
  int sample_rate = kDefaultSampleRate;

  int64_t num_bins() const { return bins.rows(); }
  int64_t num_frames() const { return bins.cols(); }
};

enum class MaskKind {
  kComplex,  // per-bin complex multiplier
  kReal,     // nonnegative magnitude scale, phase preserved
};

struct Mask {
  MaskKind kind = MaskKind::kComplex;
  Eigen::MatrixXcd complex_values;  // used when kind == kComplex
  Eigen::MatrixXd real_values;      // used when kind == kReal

  int64_t rows() const {
    return kind == MaskKind::kComplex ? complex_values.rows()
                                      : real_values.rows();
  }
  int64_t cols() const {
    return kind == MaskKind::kComplex ? complex_values.cols()
                                      : real_values.cols();
  }
};

// Analysis: left/right zero padding as above, periodic Hamming window,
// one-sided DFT per frame.
Spectrogram Stft(const AudioClip &clip, const StftConfig &cfg);

// Weighted overlap-add synthesis with the same window, normalized by the
// per-sample sum of squared windows (floored at 1e-8), truncated to
// source_len samples.
AudioClip Istft(const Spectrogram &spec);

// Adjoint of Istft as a real-linear map (real and imaginary parts treated as
// independent coordinates): returns G with <Istft(S), g> = <S, G> under the
// real inner product.
Eigen::MatrixXcd IstftAdjoint(const std::vector<double> &grad_output,
                              const StftConfig &cfg, int64_t source_len,
                              int sample_rate = kDefaultSampleRate);

// Adjoint of Stft under the same convention: maps a bin-domain gradient back
// to a time-domain gradient of length source_len.
std::vector<double> StftAdjoint(const Eigen::MatrixXcd &grad_bins,
                                const StftConfig &cfg, int64_t source_len);

// ln(max(|X|, floor)) elementwise.
Eigen::MatrixXd LogAmpFeatures(const Spectrogram &spec, double floor = 1e-7);

Spectrogram ApplyMask(const Spectrogram &spec, const Mask &mask);

// Radix-2 FFT for power-of-two sizes with a plain O(n^2) DFT fallback for
// other even sizes. One instance per transform length; reusable and
// thread-compatible for concurrent const use.
class Dft {
 public:
  explicit Dft(int n);

  int size() const { return n_; }

  // out[k] = sum_m in[m] e^{-2 pi i k m / n}, k = 0 .. n/2 (one-sided).
  void ForwardReal(const double *in, std::complex<double> *out) const;

  // Inverse of the one-sided transform of a real signal: expands Hermitian
  // symmetry and returns the real time signal (includes the 1/n factor).
  void InverseOnesided(const std::complex<double> *in, double *out) const;

 private:
  void TransformFull(std::complex<double> *data, bool inverse) const;

  int n_;
  bool pow2_;
  std::vector<int> bitrev_;
  std::vector<std::complex<double>> twiddle_fwd_;
  std::vector<std::complex<double>> twiddle_inv_;
};

}  // namespace nytt

#endif  // NYTT_CORE_STFT_H_
