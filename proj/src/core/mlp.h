// src/core/mlp.h

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

#ifndef NYTT_CORE_MLP_H_
#define NYTT_CORE_MLP_H_

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "core/stft.h"

namespace nytt {

// Mask estimator: a per-frame MLP over stacked context frames of the
// log-amplitude features. The complex head emits 2F linear outputs per frame
// (real parts then imaginary parts); the real head emits F outputs passed
// through softplus.
struct ModelArch {
  int context = 2;  // frames of context on each side
  int feature_bins = 257;
  std::vector<int> hidden = {256, 256};
  MaskKind output_kind = MaskKind::kComplex;

  // Fixed affine input standardization applied inside the forward pass;
  // log-amplitudes of RMS-0.05 material span roughly [-16, 3].
  double feature_shift = 8.0;
  double feature_scale = 1.0 / 6.0;

  int input_width() const { return (2 * context + 1) * feature_bins; }
  int output_width() const {
    return output_kind == MaskKind::kComplex ? 2 * feature_bins : feature_bins;
  }
  // Layer widths including input and output: [in, h0, h1, ..., out].
  std::vector<int> LayerWidths() const;
  int64_t ParamCount() const;
  void Validate() const;

  std::string ToJson() const;
  static ModelArch FromJson(const std::string &json_text);
  bool operator==(const ModelArch &) const = default;
};

struct ModelParams {
  ModelArch arch;
  Eigen::VectorXd values;  // all weights and biases, layer by layer (W, b)
  uint64_t init_seed = 0;
};

// Glorot-uniform weights, zero biases. The output layer is scaled down by
// 0.01 and, for the complex head, the real-part biases start at 1 so the
// initial mask is approximately 1 + 0i (pass-through).
ModelParams InitParams(const ModelArch &arch, uint64_t seed);

// Per-clip activation record for the backward pass.
struct Tape {
  Eigen::MatrixXd input;                  // input_width x frames (standardized)
  std::vector<Eigen::MatrixXd> hidden;    // tanh activations per hidden layer
  Eigen::MatrixXd head;                   // raw head outputs
  Eigen::MatrixXd real_mask;              // softplus outputs (real head only)
  int64_t frames = 0;
  int64_t param_count = 0;
  const void *params_token = nullptr;     // identity of the params used
};

// Runs the estimator over an F x T feature matrix. Edge frames replicate the
// boundary column. If tape is non-null it is filled for Backward.
Mask Forward(const ModelParams &params, const Eigen::MatrixXd &features,
             Tape *tape = nullptr);

// Exact reverse-mode gradient of Forward contracted with grad_mask. The tape
// must come from a Forward call on the same params object.
Eigen::VectorXd Backward(const ModelParams &params, const Tape &tape,
                         const Mask &grad_mask);

}  // namespace nytt

#endif  // NYTT_CORE_MLP_H_
