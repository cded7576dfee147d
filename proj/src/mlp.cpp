// Copyright 2026 The alphagan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "alphagan/mlp.hpp"

#include <cmath>
#include <cstddef>

namespace alphagan {

namespace {

void require_valid_dims(const std::vector<int>& dims) {
  if (dims.size() < 2) {
    throw std::invalid_argument("mlp needs at least an input and output layer");
  }
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("mlp layer width must be positive");
  }
}

Eigen::ArrayXXd stable_sigmoid(const Eigen::ArrayXXd& s) {
  // Evaluated per branch so large |s| never exponentiates upward.
  return (s >= 0.0)
      .select(1.0 / (1.0 + (-s).exp()), s.exp() / (1.0 + s.exp()));
}

}  // namespace

std::vector<int> MlpModel::layer_dims() const {
  std::vector<int> dims;
  dims.push_back(input_dim());
  for (const auto& w : weights) dims.push_back(static_cast<int>(w.rows()));
  return dims;
}

MlpModel make_mlp(const std::vector<int>& dims, OutputMap output_map,
                  Rng& rng) {
  require_valid_dims(dims);
  MlpModel model;
  model.output_map = output_map;
  for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
    const int fan_in = dims[l];
    const int fan_out = dims[l + 1];
    const double limit = std::sqrt(6.0 / (fan_in + fan_out));
    Eigen::MatrixXd w(fan_out, fan_in);
    for (int r = 0; r < fan_out; ++r) {
      for (int c = 0; c < fan_in; ++c) w(r, c) = rng.uniform(-limit, limit);
    }
    model.weights.push_back(std::move(w));
    model.biases.push_back(Eigen::VectorXd::Zero(fan_out));
  }
  return model;
}

MlpModel zero_mlp(const std::vector<int>& dims, OutputMap output_map) {
  require_valid_dims(dims);
  MlpModel model;
  model.output_map = output_map;
  for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
    model.weights.push_back(Eigen::MatrixXd::Zero(dims[l + 1], dims[l]));
    model.biases.push_back(Eigen::VectorXd::Zero(dims[l + 1]));
  }
  return model;
}

ForwardPass forward_batch(const MlpModel& model,
                          const Eigen::MatrixXd& input) {
  if (input.cols() != model.input_dim()) {
    throw DimensionMismatch("mlp input has wrong width");
  }
  ForwardPass pass;
  pass.layers.reserve(model.weights.size() + 1);
  pass.layers.push_back(input);
  for (std::size_t l = 0; l < model.weights.size(); ++l) {
    Eigen::MatrixXd z = pass.layers.back() * model.weights[l].transpose();
    z.rowwise() += model.biases[l].transpose();
    if (l + 1 < model.weights.size()) z = z.array().tanh().matrix();
    pass.layers.push_back(std::move(z));
  }
  return pass;
}

Eigen::MatrixXd apply_output_map(const MlpModel& model,
                                 const Eigen::MatrixXd& score) {
  if (model.output_map == OutputMap::identity) return score;
  return stable_sigmoid(score.array()).matrix();
}

Eigen::VectorXd forward(const MlpModel& model, const Eigen::VectorXd& input) {
  const ForwardPass pass = forward_batch(model, input.transpose());
  return apply_output_map(model, pass.score()).row(0).transpose();
}

MlpGrads zero_grads(const MlpModel& model) {
  MlpGrads grads;
  for (std::size_t l = 0; l < model.weights.size(); ++l) {
    grads.weights.push_back(
        Eigen::MatrixXd::Zero(model.weights[l].rows(), model.weights[l].cols()));
    grads.biases.push_back(Eigen::VectorXd::Zero(model.biases[l].size()));
  }
  return grads;
}

void accumulate(MlpGrads& into, const MlpGrads& from) {
  for (std::size_t l = 0; l < into.weights.size(); ++l) {
    into.weights[l] += from.weights[l];
    into.biases[l] += from.biases[l];
  }
}

namespace {

// Shared backward sweep. Fills grads and, when requested, the gradient
// with respect to the input rows.
MlpGrads backward_impl(const MlpModel& model, const ForwardPass& pass,
                       const Eigen::MatrixXd& score_grad,
                       Eigen::MatrixXd* input_grad) {
  if (score_grad.rows() != pass.layers.front().rows() ||
      score_grad.cols() != model.output_dim()) {
    throw DimensionMismatch("score gradient has wrong shape");
  }
  MlpGrads grads = zero_grads(model);
  Eigen::MatrixXd delta = score_grad;  // d objective / d pre-activation
  for (int l = static_cast<int>(model.weights.size()) - 1; l >= 0; --l) {
    grads.weights[l] = delta.transpose() * pass.layers[l];
    grads.biases[l] = delta.colwise().sum().transpose();
    if (l == 0) {
      if (input_grad != nullptr) *input_grad = delta * model.weights[l];
      break;
    }
    Eigen::MatrixXd upstream = delta * model.weights[l];
    // pass.layers[l] already holds tanh of the hidden pre-activation.
    delta = (upstream.array() *
             (1.0 - pass.layers[l].array().square()))
                .matrix();
  }
  return grads;
}

}  // namespace

MlpGrads backward_batch(const MlpModel& model, const ForwardPass& pass,
                        const Eigen::MatrixXd& score_grad) {
  return backward_impl(model, pass, score_grad, nullptr);
}

Eigen::MatrixXd input_gradient(const MlpModel& model, const ForwardPass& pass,
                               const Eigen::MatrixXd& score_grad) {
  Eigen::MatrixXd input_grad;
  backward_impl(model, pass, score_grad, &input_grad);
  return input_grad;
}

}  // namespace alphagan
