// src/core/mlp.cc

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

#include "core/mlp.h"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "core/error.h"
#include "core/rng.h"

namespace nytt {

namespace {

using json = nlohmann::json;

constexpr double kOutputLayerScale = 0.01;

struct LayerSpan {
  int64_t w_offset = 0;
  int64_t b_offset = 0;
  int rows = 0;  // fan_out
  int cols = 0;  // fan_in
};

std::vector<LayerSpan> LayerSpans(const ModelArch &arch) {
  std::vector<int> widths = arch.LayerWidths();
  std::vector<LayerSpan> spans(widths.size() - 1);
  int64_t offset = 0;
  for (size_t l = 0; l + 1 < widths.size(); ++l) {
    spans[l].rows = widths[l + 1];
    spans[l].cols = widths[l];
    spans[l].w_offset = offset;
    offset += static_cast<int64_t>(spans[l].rows) * spans[l].cols;
    spans[l].b_offset = offset;
    offset += spans[l].rows;
  }
  return spans;
}

double Softplus(double z) {
  if (z > 30.0) return z;
  if (z < -30.0) return std::exp(z);
  return std::log1p(std::exp(z));
}

}  // namespace

std::vector<int> ModelArch::LayerWidths() const {
  std::vector<int> widths;
  widths.push_back(input_width());
  widths.insert(widths.end(), hidden.begin(), hidden.end());
  widths.push_back(output_width());
  return widths;
}

int64_t ModelArch::ParamCount() const {
  std::vector<int> widths = LayerWidths();
  int64_t count = 0;
  for (size_t l = 0; l + 1 < widths.size(); ++l) {
    count += static_cast<int64_t>(widths[l + 1]) * widths[l] + widths[l + 1];
  }
  return count;
}

void ModelArch::Validate() const {
  RequireArg(context >= 0, "ModelArch: context must be >= 0");
  RequireArg(feature_bins >= 1, "ModelArch: feature_bins must be >= 1");
  RequireArg(!hidden.empty(), "ModelArch: at least one hidden layer");
  for (int h : hidden) RequireArg(h >= 1, "ModelArch: hidden sizes must be >= 1");
  RequireArg(feature_scale > 0.0, "ModelArch: feature_scale must be > 0");
}

std::string ModelArch::ToJson() const {
  json j;
  j["context"] = context;
  j["feature_bins"] = feature_bins;
  j["hidden"] = hidden;
  j["output_kind"] = output_kind == MaskKind::kComplex ? "complex" : "real";
  j["feature_shift"] = feature_shift;
  j["feature_scale"] = feature_scale;
  return j.dump();
}

ModelArch ModelArch::FromJson(const std::string &json_text) {
  json j = json::parse(json_text);
  ModelArch arch;
  arch.context = j.at("context").get<int>();
  arch.feature_bins = j.at("feature_bins").get<int>();
  arch.hidden = j.at("hidden").get<std::vector<int>>();
  std::string kind = j.at("output_kind").get<std::string>();
  RequireArg(kind == "complex" || kind == "real",
             "ModelArch: output_kind must be complex or real");
  arch.output_kind = kind == "complex" ? MaskKind::kComplex : MaskKind::kReal;
  arch.feature_shift = j.at("feature_shift").get<double>();
  arch.feature_scale = j.at("feature_scale").get<double>();
  arch.Validate();
  return arch;
}

ModelParams InitParams(const ModelArch &arch, uint64_t seed) {
  arch.Validate();
  ModelParams params;
  params.arch = arch;
  params.init_seed = seed;
  params.values = Eigen::VectorXd::Zero(arch.ParamCount());

  Rng rng(DeriveSeed({seed, kTagInitLayer}));
  const std::vector<LayerSpan> spans = LayerSpans(arch);
  for (size_t l = 0; l < spans.size(); ++l) {
    const LayerSpan &s = spans[l];
    double a = std::sqrt(6.0 / (s.rows + s.cols));
    if (l + 1 == spans.size()) a *= kOutputLayerScale;
    double *w = params.values.data() + s.w_offset;
    for (int64_t i = 0; i < static_cast<int64_t>(s.rows) * s.cols; ++i) {
      w[i] = rng.Uniform(-a, a);
    }
    // biases stay zero
  }
  if (arch.output_kind == MaskKind::kComplex) {
    const LayerSpan &last = spans.back();
    double *b = params.values.data() + last.b_offset;
    for (int f = 0; f < arch.feature_bins; ++f) b[f] = 1.0;  // real-part head
  }
  return params;
}

Mask Forward(const ModelParams &params, const Eigen::MatrixXd &features,
             Tape *tape) {
  const ModelArch &arch = params.arch;
  arch.Validate();
  RequireArg(params.values.size() == arch.ParamCount(),
             "Forward: parameter vector length mismatch");
  RequireArg(features.rows() == arch.feature_bins,
             "Forward: feature rows do not match arch.feature_bins");
  RequireArg(features.cols() >= 1, "Forward: need at least one frame");

  const int F = arch.feature_bins;
  const int64_t T = features.cols();
  const int c = arch.context;

  // Standardize once, then stack context blocks with boundary replication.
  Eigen::MatrixXd std_feats =
      (features.array() + arch.feature_shift) * arch.feature_scale;
  Eigen::MatrixXd input(arch.input_width(), T);
  for (int64_t t = 0; t < T; ++t) {
    for (int j = -c; j <= c; ++j) {
      int64_t src = std::clamp<int64_t>(t + j, 0, T - 1);
      input.block((j + c) * F, t, F, 1) = std_feats.col(src);
    }
  }

  const std::vector<LayerSpan> spans = LayerSpans(arch);
  const double *v = params.values.data();

  std::vector<Eigen::MatrixXd> hidden_acts(spans.size() - 1);
  const Eigen::MatrixXd *prev = &input;
  for (size_t l = 0; l + 1 < spans.size(); ++l) {
    const LayerSpan &s = spans[l];
    Eigen::Map<const Eigen::MatrixXd> w(v + s.w_offset, s.rows, s.cols);
    Eigen::Map<const Eigen::VectorXd> b(v + s.b_offset, s.rows);
    Eigen::MatrixXd z = w * (*prev);
    z.colwise() += b;
    hidden_acts[l] = z.array().tanh().matrix();
    prev = &hidden_acts[l];
  }
  const LayerSpan &hs = spans.back();
  Eigen::Map<const Eigen::MatrixXd> wh(v + hs.w_offset, hs.rows, hs.cols);
  Eigen::Map<const Eigen::VectorXd> bh(v + hs.b_offset, hs.rows);
  Eigen::MatrixXd head = wh * (*prev);
  head.colwise() += bh;

  Mask mask;
  mask.kind = arch.output_kind;
  Eigen::MatrixXd real_mask;
  if (arch.output_kind == MaskKind::kComplex) {
    mask.complex_values.resize(F, T);
    for (int64_t t = 0; t < T; ++t) {
      for (int f = 0; f < F; ++f) {
        mask.complex_values(f, t) =
            std::complex<double>(head(f, t), head(F + f, t));
      }
    }
  } else {
    real_mask.resize(F, T);
    for (int64_t t = 0; t < T; ++t) {
      for (int f = 0; f < F; ++f) real_mask(f, t) = Softplus(head(f, t));
    }
    mask.real_values = real_mask;
  }

  if (tape != nullptr) {
    tape->input = std::move(input);
    tape->hidden = std::move(hidden_acts);
    tape->head = std::move(head);
    tape->real_mask = std::move(real_mask);
    tape->frames = T;
    tape->param_count = params.values.size();
    tape->params_token = params.values.data();
  }
  return mask;
}

Eigen::VectorXd Backward(const ModelParams &params, const Tape &tape,
                         const Mask &grad_mask) {
  const ModelArch &arch = params.arch;
  Require(tape.params_token == params.values.data() &&
              tape.param_count == params.values.size(),
          StatusCode::kStateError,
          "Backward: tape does not match these parameters");
  RequireArg(grad_mask.kind == arch.output_kind,
             "Backward: grad_mask kind does not match the model head");
  RequireArg(grad_mask.rows() == arch.feature_bins &&
                 grad_mask.cols() == tape.frames,
             "Backward: grad_mask shape mismatch");

  const int F = arch.feature_bins;
  const int64_t T = tape.frames;
  const std::vector<LayerSpan> spans = LayerSpans(arch);
  const double *v = params.values.data();

  Eigen::MatrixXd g_head(arch.output_width(), T);
  if (arch.output_kind == MaskKind::kComplex) {
    for (int64_t t = 0; t < T; ++t) {
      for (int f = 0; f < F; ++f) {
        g_head(f, t) = grad_mask.complex_values(f, t).real();
        g_head(F + f, t) = grad_mask.complex_values(f, t).imag();
      }
    }
  } else {
    // d softplus(z) / dz = sigmoid(z) = 1 - exp(-softplus(z)).
    for (int64_t t = 0; t < T; ++t) {
      for (int f = 0; f < F; ++f) {
        g_head(f, t) = grad_mask.real_values(f, t) *
                       (1.0 - std::exp(-tape.real_mask(f, t)));
      }
    }
  }

  Eigen::VectorXd grad = Eigen::VectorXd::Zero(params.values.size());
  Eigen::MatrixXd g = std::move(g_head);
  for (size_t li = spans.size(); li-- > 0;) {
    const LayerSpan &s = spans[li];
    const Eigen::MatrixXd &layer_input =
        li == 0 ? tape.input : tape.hidden[li - 1];
    Eigen::Map<Eigen::MatrixXd> dw(grad.data() + s.w_offset, s.rows, s.cols);
    Eigen::Map<Eigen::VectorXd> db(grad.data() + s.b_offset, s.rows);
    dw.noalias() = g * layer_input.transpose();
    db = g.rowwise().sum();
    if (li > 0) {
      Eigen::Map<const Eigen::MatrixXd> w(v + s.w_offset, s.rows, s.cols);
      Eigen::MatrixXd g_prev = w.transpose() * g;
      const Eigen::MatrixXd &act = tape.hidden[li - 1];
      g = g_prev.array() * (1.0 - act.array().square());
    }
  }
  return grad;
}

}  // namespace nytt
