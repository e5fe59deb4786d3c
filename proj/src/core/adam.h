// src/core/adam.h

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

#ifndef NYTT_CORE_ADAM_H_
#define NYTT_CORE_ADAM_H_

#include <Eigen/Dense>
#include <cstdint>

#include "core/mlp.h"

namespace nytt {

struct AdamState {
  int64_t step = 0;
  Eigen::VectorXd m;  // first moment
  Eigen::VectorXd v;  // second moment
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  static AdamState Init(int64_t param_count, double lr = 1e-4);
};

// One bias-corrected Adam update, in place. Non-finite gradients abort the
// update with a diagnostic before any state is touched.
void AdamStep(ModelParams *params, const Eigen::VectorXd &grads,
              AdamState *state);

}  // namespace nytt

#endif  // NYTT_CORE_ADAM_H_
