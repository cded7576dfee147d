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

#ifndef ALPHAGAN_LOSS_HPP_
#define ALPHAGAN_LOSS_HPP_

#include "alphagan/alpha.hpp"

namespace alphagan {

// Numerically stable logistic sigmoid.
double sigmoid(double t);

// Loss of reporting probability p_hat for the event that occurred:
//
//   (alpha / (alpha - 1)) * (1 - p_hat^((alpha - 1) / alpha))
//
// with the closed extensions -log(p_hat) at alpha = 1 and 1 - p_hat on the
// infinity branch. For alpha <= 1 the loss diverges at p_hat = 0, so p_hat
// is clamped to [1e-12, 1] there; when `clamped` is non-null it reports
// whether the clamp fired. Throws std::out_of_range for p_hat outside
// [0, 1].
double loss_prob(AlphaParam alpha, double p_hat, bool* clamped = nullptr);

// Binary-label form: y_hat is the reported probability of label 1, so the
// loss is loss_prob(alpha, y_hat) at y = 1 and loss_prob(alpha, 1 - y_hat)
// at y = 0.
double loss_binary(AlphaParam alpha, int y, double y_hat,
                   bool* clamped = nullptr);

// Margin form: the probability is squeezed through the sigmoid,
// loss_margin(alpha, t) = loss_prob(alpha, sigmoid(t)). Monotone
// non-increasing in t; accepts t = +-infinity.
double loss_margin(AlphaParam alpha, double t);

struct UniformGuessReport {
  bool holds = false;
  // max over the grid of phi(t) + psi(t) - phi(1/2) - psi(1/2), where
  // phi(t) = -loss(label 1, t) and psi(t) = -loss(label 0, t). Negative
  // when the half-point is the strict maximizer.
  double worst_violation = 0.0;
  double worst_t = 0.5;
};

// Checks on a uniform grid of t in [0, 1] that reporting 1/2 maximizes
// phi + psi, which is what makes the half-confident report optimal when
// the two classes are equally likely. Holds iff the worst violation is
// at most 1e-12. grid_size must be at least 3.
UniformGuessReport check_uniform_guess_condition(AlphaParam alpha,
                                                 int grid_size);

}  // namespace alphagan

#endif  // ALPHAGAN_LOSS_HPP_
