// src/core/adam.cc

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

#include "core/adam.h"

#include <cmath>

#include "core/error.h"

namespace nytt {

AdamState AdamState::Init(int64_t param_count, double lr_value) {
  AdamState state;
  state.m = Eigen::VectorXd::Zero(param_count);
  state.v = Eigen::VectorXd::Zero(param_count);
  state.lr = lr_value;
  return state;
}

void AdamStep(ModelParams *params, const Eigen::VectorXd &grads,
              AdamState *state) {
  RequireArg(params != nullptr && state != nullptr, "AdamStep: null argument");
  RequireArg(grads.size() == params->values.size(),
             "AdamStep: gradient length mismatch");
  RequireArg(state->m.size() == grads.size() && state->v.size() == grads.size(),
             "AdamStep: moment length mismatch");
  if (!grads.allFinite()) {
    throw Error(StatusCode::kNumericError,
                "AdamStep: non-finite gradient at step " +
                    std::to_string(state->step + 1) + "; update aborted");
  }

  state->step += 1;
  const double b1 = state->beta1;
  const double b2 = state->beta2;
  state->m = b1 * state->m + (1.0 - b1) * grads;
  state->v = b2 * state->v + (1.0 - b2) * grads.cwiseProduct(grads);
  const double corr1 = 1.0 - std::pow(b1, static_cast<double>(state->step));
  const double corr2 = 1.0 - std::pow(b2, static_cast<double>(state->step));
  Eigen::ArrayXd m_hat = state->m.array() / corr1;
  Eigen::ArrayXd v_hat = state->v.array() / corr2;
  params->values.array() -= state->lr * m_hat / (v_hat.sqrt() + state->eps);
}

}  // namespace nytt
