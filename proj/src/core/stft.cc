// src/core/stft.cc

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

#include "core/stft.h"

#include <algorithm>
#include <cmath>

#include "core/error.h"

namespace nytt {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kWolaFloor = 1e-8;

bool IsPowerOfTwo(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Sum of squared synthesis windows at every padded sample position.
std::vector<double> WindowSquareSum(const StftConfig &cfg, int64_t frames,
                                    const std::vector<double> &window) {
  int64_t padded_len =
      cfg.window_len + (frames - 1) * static_cast<int64_t>(cfg.frame_shift);
  std::vector<double> wsum(padded_len, 0.0);
  for (int64_t t = 0; t < frames; ++t) {
    int64_t base = t * cfg.frame_shift;
    for (int j = 0; j < cfg.window_len; ++j) {
      wsum[base + j] += window[j] * window[j];
    }
  }
  return wsum;
}

}  // namespace

void StftConfig::Validate() const {
  RequireArg(frame_shift >= 1, "StftConfig: frame_shift must be >= 1");
  RequireArg(window_len >= frame_shift,
             "StftConfig: window_len must be >= frame_shift");
  RequireArg(dft_size >= window_len,
             "StftConfig: dft_size must be >= window_len");
  RequireArg(dft_size % 2 == 0, "StftConfig: dft_size must be even");
}

std::vector<double> PeriodicHamming(int len) {
  std::vector<double> w(len);
  for (int i = 0; i < len; ++i) {
    w[i] = 0.54 - 0.46 * std::cos(kTwoPi * i / len);
  }
  return w;
}

Dft::Dft(int n) : n_(n), pow2_(IsPowerOfTwo(n)) {
  RequireArg(n >= 2 && n % 2 == 0, "Dft: size must be even and >= 2");
  if (pow2_) {
    bitrev_.resize(n);
    int log2n = 0;
    while ((1 << log2n) < n) ++log2n;
    for (int i = 0; i < n; ++i) {
      int r = 0;
      for (int b = 0; b < log2n; ++b) r |= ((i >> b) & 1) << (log2n - 1 - b);
      bitrev_[i] = r;
    }
  }
  twiddle_fwd_.resize(n);
  twiddle_inv_.resize(n);
  for (int k = 0; k < n; ++k) {
    double ang = kTwoPi * k / n;
    twiddle_fwd_[k] = {std::cos(ang), -std::sin(ang)};
    twiddle_inv_[k] = {std::cos(ang), std::sin(ang)};
  }
}

void Dft::TransformFull(std::complex<double> *data, bool inverse) const {
  const auto &tw = inverse ? twiddle_inv_ : twiddle_fwd_;
  if (pow2_) {
    for (int i = 0; i < n_; ++i) {
      int r = bitrev_[i];
      if (i < r) std::swap(data[i], data[r]);
    }
    for (int len = 2; len <= n_; len <<= 1) {
      int stride = n_ / len;
      int half = len / 2;
      for (int start = 0; start < n_; start += len) {
        for (int k = 0; k < half; ++k) {
          std::complex<double> u = data[start + k];
          std::complex<double> v = data[start + k + half] * tw[k * stride];
          data[start + k] = u + v;
          data[start + k + half] = u - v;
        }
      }
    }
  } else {
    // Plain O(n^2) transform; used only for unusual non-power-of-two sizes.
    std::vector<std::complex<double>> out(n_);
    for (int k = 0; k < n_; ++k) {
      std::complex<double> acc = 0.0;
      for (int m = 0; m < n_; ++m) {
        acc += data[m] * tw[static_cast<int64_t>(k) * m % n_];
      }
      out[k] = acc;
    }
    std::copy(out.begin(), out.end(), data);
  }
}

void Dft::ForwardReal(const double *in, std::complex<double> *out) const {
  std::vector<std::complex<double>> buf(n_);
  for (int i = 0; i < n_; ++i) buf[i] = in[i];
  TransformFull(buf.data(), /*inverse=*/false);
  std::copy(buf.begin(), buf.begin() + n_ / 2 + 1, out);
}

void Dft::InverseOnesided(const std::complex<double> *in, double *out) const {
  std::vector<std::complex<double>> buf(n_);
  buf[0] = in[0];
  buf[n_ / 2] = in[n_ / 2];
  for (int k = 1; k < n_ / 2; ++k) {
    buf[k] = in[k];
    buf[n_ - k] = std::conj(in[k]);
  }
  TransformFull(buf.data(), /*inverse=*/true);
  double inv_n = 1.0 / n_;
  for (int i = 0; i < n_; ++i) out[i] = buf[i].real() * inv_n;
}

Spectrogram Stft(const AudioClip &clip, const StftConfig &cfg) {
  cfg.Validate();
  ValidateClip(clip, "Stft");
  const int64_t n = clip.length();
  const int64_t frames = cfg.FrameCount(n);
  const int left = cfg.left_pad();
  const int64_t padded_len =
      cfg.window_len + (frames - 1) * static_cast<int64_t>(cfg.frame_shift);

  std::vector<double> padded(padded_len, 0.0);
  std::copy(clip.samples.begin(), clip.samples.end(), padded.begin() + left);

  const std::vector<double> window = PeriodicHamming(cfg.window_len);
  const Dft dft(cfg.dft_size);
  const int bins = cfg.num_bins();

  Spectrogram spec;
  spec.config = cfg;
  spec.source_len = n;
  spec.sample_rate = clip.sample_rate;
  spec.bins.resize(bins, frames);

  std::vector<double> frame(cfg.dft_size, 0.0);
  std::vector<std::complex<double>> col(bins);
  for (int64_t t = 0; t < frames; ++t) {
    const int64_t base = t * cfg.frame_shift;
    for (int j = 0; j < cfg.window_len; ++j) {
      frame[j] = padded[base + j] * window[j];
    }
    dft.ForwardReal(frame.data(), col.data());
    for (int k = 0; k < bins; ++k) spec.bins(k, t) = col[k];
  }
  return spec;
}

AudioClip Istft(const Spectrogram &spec) {
  spec.config.Validate();
  const StftConfig &cfg = spec.config;
  Require(spec.num_frames() >= 1, StatusCode::kDegenerateInput,
          "Istft: spectrogram has zero frames");
  RequireArg(spec.num_bins() == cfg.num_bins(),
             "Istft: bin count does not match config");
  RequireArg(spec.source_len >= 1 &&
                 spec.num_frames() == cfg.FrameCount(spec.source_len),
             "Istft: frame count inconsistent with source_len");

  const int64_t frames = spec.num_frames();
  const std::vector<double> window = PeriodicHamming(cfg.window_len);
  const std::vector<double> wsum = WindowSquareSum(cfg, frames, window);
  const Dft dft(cfg.dft_size);

  std::vector<double> acc(wsum.size(), 0.0);
  std::vector<std::complex<double>> col(cfg.num_bins());
  std::vector<double> frame(cfg.dft_size);
  for (int64_t t = 0; t < frames; ++t) {
    for (int k = 0; k < cfg.num_bins(); ++k) col[k] = spec.bins(k, t);
    dft.InverseOnesided(col.data(), frame.data());
    const int64_t base = t * cfg.frame_shift;
    for (int j = 0; j < cfg.window_len; ++j) {
      acc[base + j] += window[j] * frame[j];
    }
  }

  AudioClip out;
  out.sample_rate = spec.sample_rate;
  out.samples.resize(spec.source_len);
  const int left = cfg.left_pad();
  for (int64_t i = 0; i < spec.source_len; ++i) {
    out.samples[i] = acc[left + i] / std::max(wsum[left + i], kWolaFloor);
  }
  return out;
}

Eigen::MatrixXcd IstftAdjoint(const std::vector<double> &grad_output,
                              const StftConfig &cfg, int64_t source_len,
                              int sample_rate) {
  (void)sample_rate;
  cfg.Validate();
  RequireArg(static_cast<int64_t>(grad_output.size()) == source_len,
             "IstftAdjoint: gradient length must equal source_len");
  RequireArg(source_len >= 1, "IstftAdjoint: source_len must be >= 1");

  const int64_t frames = cfg.FrameCount(source_len);
  const std::vector<double> window = PeriodicHamming(cfg.window_len);
  const std::vector<double> wsum = WindowSquareSum(cfg, frames, window);
  const Dft dft(cfg.dft_size);
  const int bins = cfg.num_bins();
  const int left = cfg.left_pad();
  const int n = cfg.dft_size;

  // Adjoint of truncation is zero-extension; adjoint of the WOLA division is
  // the same pointwise division.
  std::vector<double> gp(wsum.size(), 0.0);
  for (int64_t i = 0; i < source_len; ++i) {
    gp[left + i] = grad_output[i] / std::max(wsum[left + i], kWolaFloor);
  }

  Eigen::MatrixXcd grad(bins, frames);
  std::vector<double> v(n, 0.0);
  std::vector<std::complex<double>> spec_col(bins);
  for (int64_t t = 0; t < frames; ++t) {
    const int64_t base = t * cfg.frame_shift;
    for (int j = 0; j < cfg.window_len; ++j) {
      v[j] = window[j] * gp[base + j];
    }
    dft.ForwardReal(v.data(), spec_col.data());
    grad(0, t) = std::complex<double>(spec_col[0].real() / n, 0.0);
    grad(bins - 1, t) =
        std::complex<double>(spec_col[bins - 1].real() / n, 0.0);
    for (int k = 1; k < bins - 1; ++k) {
      grad(k, t) = 2.0 / n * spec_col[k];
    }
  }
  return grad;
}

std::vector<double> StftAdjoint(const Eigen::MatrixXcd &grad_bins,
                                const StftConfig &cfg, int64_t source_len) {
  cfg.Validate();
  RequireArg(source_len >= 1, "StftAdjoint: source_len must be >= 1");
  const int64_t frames = cfg.FrameCount(source_len);
  RequireArg(grad_bins.rows() == cfg.num_bins() && grad_bins.cols() == frames,
             "StftAdjoint: gradient shape mismatch");

  const std::vector<double> window = PeriodicHamming(cfg.window_len);
  const Dft dft(cfg.dft_size);
  const int bins = cfg.num_bins();
  const int left = cfg.left_pad();
  const int n = cfg.dft_size;
  const int64_t padded_len =
      cfg.window_len + (frames - 1) * static_cast<int64_t>(cfg.frame_shift);

  std::vector<double> gp(padded_len, 0.0);
  std::vector<std::complex<double>> scaled(bins);
  std::vector<double> frame(n);
  for (int64_t t = 0; t < frames; ++t) {
    // The one-sided forward keeps no Hermitian mirror, so the adjoint is a
    // one-sided inverse with DC/Nyquist weighted by n and interior bins by
    // n/2 (InverseOnesided divides by n and doubles interior bins).
    scaled[0] = grad_bins(0, t) * static_cast<double>(n);
    scaled[bins - 1] = grad_bins(bins - 1, t) * static_cast<double>(n);
    for (int k = 1; k < bins - 1; ++k) {
      scaled[k] = grad_bins(k, t) * (n / 2.0);
    }
    dft.InverseOnesided(scaled.data(), frame.data());
    const int64_t base = t * cfg.frame_shift;
    for (int j = 0; j < cfg.window_len; ++j) {
      gp[base + j] += window[j] * frame[j];
    }
  }

  std::vector<double> grad(source_len);
  for (int64_t i = 0; i < source_len; ++i) grad[i] = gp[left + i];
  return grad;
}

Eigen::MatrixXd LogAmpFeatures(const Spectrogram &spec, double floor) {
  RequireArg(floor > 0.0, "LogAmpFeatures: floor must be positive");
  Eigen::MatrixXd feats(spec.num_bins(), spec.num_frames());
  for (int64_t t = 0; t < spec.num_frames(); ++t) {
    for (int64_t k = 0; k < spec.num_bins(); ++k) {
      feats(k, t) = std::log(std::max(std::abs(spec.bins(k, t)), floor));
    }
  }
  return feats;
}

Spectrogram ApplyMask(const Spectrogram &spec, const Mask &mask) {
  RequireArg(mask.rows() == spec.num_bins() && mask.cols() == spec.num_frames(),
             "ApplyMask: mask shape does not match spectrogram");
  Spectrogram out = spec;
  if (mask.kind == MaskKind::kComplex) {
    RequireArg(mask.complex_values.size() > 0,
               "ApplyMask: complex mask has no values");
    out.bins = spec.bins.cwiseProduct(mask.complex_values);
  } else {
    RequireArg(mask.real_values.size() > 0,
               "ApplyMask: real mask has no values");
    RequireArg(mask.real_values.minCoeff() >= 0.0,
               "ApplyMask: real mask must be elementwise nonnegative");
    // Scaling magnitude by m while preserving phase is the same as the
    // complex product with a nonnegative real number.
    out.bins = spec.bins.cwiseProduct(
        mask.real_values.cast<std::complex<double>>());
  }
  return out;
}

}  // namespace nytt
