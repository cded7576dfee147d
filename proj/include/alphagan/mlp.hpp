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

#ifndef ALPHAGAN_MLP_HPP_
#define ALPHAGAN_MLP_HPP_

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "alphagan/rng.hpp"

namespace alphagan {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class OutputMap { identity, sigmoid };

// Small dense feed-forward network: tanh on hidden layers, identity on
// the last layer, then the output map (sigmoid for discriminators,
// identity for generators).
struct MlpModel {
  std::vector<Eigen::MatrixXd> weights;  // layer l maps dims[l] -> dims[l+1]
  std::vector<Eigen::VectorXd> biases;
  OutputMap output_map = OutputMap::identity;

  int input_dim() const { return static_cast<int>(weights.front().cols()); }
  int output_dim() const { return static_cast<int>(weights.back().rows()); }
  std::vector<int> layer_dims() const;
};

// Glorot-uniform weights, zero biases; draw order is layer by layer,
// row-major within a weight matrix, so equal seeds build equal models.
MlpModel make_mlp(const std::vector<int>& dims, OutputMap output_map,
                  Rng& rng);

MlpModel zero_mlp(const std::vector<int>& dims, OutputMap output_map);

// Batched forward state. layers[0] is the input (one sample per row),
// layers[l] the post-tanh activation of hidden layer l, and layers.back()
// the raw score of the last layer, before the output map.
struct ForwardPass {
  std::vector<Eigen::MatrixXd> layers;

  const Eigen::MatrixXd& score() const { return layers.back(); }
};

ForwardPass forward_batch(const MlpModel& model, const Eigen::MatrixXd& input);

// Output map applied to the raw score.
Eigen::MatrixXd apply_output_map(const MlpModel& model,
                                 const Eigen::MatrixXd& score);

// Single-sample forward pass with the output map applied.
Eigen::VectorXd forward(const MlpModel& model, const Eigen::VectorXd& input);

struct MlpGrads {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;
};

MlpGrads zero_grads(const MlpModel& model);
void accumulate(MlpGrads& into, const MlpGrads& from);

// Backpropagation from d(objective)/d(raw score), one row per sample.
MlpGrads backward_batch(const MlpModel& model, const ForwardPass& pass,
                        const Eigen::MatrixXd& score_grad);

// d(objective)/d(input), same backward sweep continued through layer 0.
Eigen::MatrixXd input_gradient(const MlpModel& model, const ForwardPass& pass,
                               const Eigen::MatrixXd& score_grad);

}  // namespace alphagan

#endif  // ALPHAGAN_MLP_HPP_
