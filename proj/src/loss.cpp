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

#include "alphagan/loss.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace alphagan {
namespace {

constexpr double kProbFloor = 1e-12;

}  // namespace

double sigmoid(double t) {
  if (t >= 0.0) {
    return 1.0 / (1.0 + std::exp(-t));
  }
  double e = std::exp(t);
  return e / (1.0 + e);
}

double loss_prob(AlphaParam alpha, double p_hat, bool* clamped) {
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) {
    throw std::out_of_range("loss_prob: p_hat must lie in [0, 1]");
  }
  if (clamped != nullptr) *clamped = false;
  if (alpha.is_infinite()) {
    return 1.0 - p_hat;
  }
  if (alpha.value() <= 1.0 && p_hat < kProbFloor) {
    p_hat = kProbFloor;
    if (clamped != nullptr) *clamped = true;
  }
  if (alpha.is_one()) {
    return -std::log(p_hat);
  }
  double a = alpha.value();
  return a / (a - 1.0) * (1.0 - std::pow(p_hat, (a - 1.0) / a));
}

double loss_binary(AlphaParam alpha, int y, double y_hat, bool* clamped) {
  if (y != 0 && y != 1) {
    throw std::out_of_range("loss_binary: label must be 0 or 1");
  }
  return loss_prob(alpha, y == 1 ? y_hat : 1.0 - y_hat, clamped);
}

double loss_margin(AlphaParam alpha, double t) {
  if (t == std::numeric_limits<double>::infinity()) return 0.0;
  if (t == -std::numeric_limits<double>::infinity()) {
    return loss_prob(alpha, 0.0);
  }
  return loss_prob(alpha, sigmoid(t));
}

UniformGuessReport check_uniform_guess_condition(AlphaParam alpha,
                                                 int grid_size) {
  if (grid_size < 3) {
    throw std::invalid_argument(
        "check_uniform_guess_condition: grid_size must be at least 3");
  }
  auto phi_plus_psi = [&](double t) {
    return -loss_binary(alpha, 1, t) - loss_binary(alpha, 0, t);
  };
  const double center = phi_plus_psi(0.5);
  UniformGuessReport report;
  report.worst_violation = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_size; ++i) {
    double t = static_cast<double>(i) / (grid_size - 1);
    double violation = phi_plus_psi(t) - center;
    if (violation > report.worst_violation) {
      report.worst_violation = violation;
      report.worst_t = t;
    }
  }
  report.holds = report.worst_violation <= 1e-12;
  return report;
}

}  // namespace alphagan
