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

#ifndef ALPHAGAN_VALUE_HPP_
#define ALPHAGAN_VALUE_HPP_

#include <Eigen/Dense>
#include <functional>
#include <variant>

#include "alphagan/alpha.hpp"
#include "alphagan/distributions.hpp"

namespace alphagan {

struct MlpModel;

// Discriminator as a table over support atoms.
struct TabularD {
  Eigen::ArrayXd d;
};

// Discriminator ignoring its input.
struct ConstantD {
  double d = 0.5;
};

// Discriminator backed by a network whose output map squashes into (0, 1).
struct NeuralD {
  const MlpModel* model = nullptr;
};

using DiscriminatorFn = std::variant<TabularD, ConstantD, NeuralD>;

// Output at a support atom; tabular and constant only.
double discriminator_at(const DiscriminatorFn& d, int atom);

// Output on a sample vector. Tabular discriminators index by the rounded
// first coordinate (discrete samples carry the outcome index).
double discriminator_on(const DiscriminatorFn& d, const Eigen::VectorXd& x);

// Two-player objective on a shared finite support:
//
//   (alpha / (alpha-1)) * (E_p[D^rho] + E_q[(1-D)^rho] - 2),
//   rho = (alpha - 1) / alpha,
//
// with the log form E_p[log D] + E_q[log(1-D)] at alpha = 1 and the
// bounded-critic mean difference E_p[D] - E_q[D] - 1 on the infinity
// branch. For alpha < 1 the discriminator output is clamped to
// [1e-7, 1 - 1e-7] before exponentiation. The discriminator must be
// tabular or constant.
double value_alpha_exact(AlphaParam alpha, const DiscreteDistribution& p_r,
                         const DiscreteDistribution& p_g,
                         const DiscriminatorFn& d);

// Plug-in estimate of the same objective from sample batches (rows are
// samples). Any discriminator kind works. Throws std::invalid_argument on
// an empty batch.
double value_alpha_mc(AlphaParam alpha, const Eigen::MatrixXd& real_samples,
                      const Eigen::MatrixXd& fake_samples,
                      const DiscriminatorFn& d);

// loss(label, reported probability of label 1).
using BinaryLoss = std::function<double(int, double)>;

// Value function generated by an arbitrary binary loss:
// E_p[-loss(1, D)] + E_q[-loss(0, D)]. Feeding the order-alpha loss
// reproduces value_alpha_exact.
double general_loss_value(const BinaryLoss& loss,
                          const DiscreteDistribution& p_r,
                          const DiscreteDistribution& p_g,
                          const DiscriminatorFn& d);

}  // namespace alphagan

#endif  // ALPHAGAN_VALUE_HPP_
