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

#include "alphagan/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "alphagan/arimoto.hpp"
#include "alphagan/golden.hpp"
#include "alphagan/loss.hpp"

namespace alphagan {
namespace {

double tilted_ratio(AlphaParam alpha, double a, double b) {
  if (a == 0.0 && b == 0.0) return 0.5;
  if (a == 0.0) return 0.0;
  if (b == 0.0) return 1.0;
  if (alpha.acts_as_tv()) {
    if (a > b) return 1.0;
    if (a < b) return 0.0;
    return 0.5;
  }
  return sigmoid(alpha.value() * (std::log(a) - std::log(b)));
}

// Per-atom slice of the value function at masses (a, b), as a function of
// the discriminator output y. The additive constant is dropped; it does
// not move the argmax.
std::function<double(double)> atom_objective(AlphaParam alpha, double a,
                                             double b) {
  if (alpha.acts_as_tv()) {
    return [a, b](double y) { return (a - b) * y; };
  }
  if (alpha.is_one()) {
    return [a, b](double y) {
      double value = 0.0;
      if (a > 0.0) value += a * std::log(y);
      if (b > 0.0) value += b * std::log1p(-y);
      return value;
    };
  }
  double order = alpha.value();
  double c = order / (order - 1.0);
  double rho = (order - 1.0) / order;
  return [a, b, c, rho](double y) {
    double value = 0.0;
    if (a > 0.0) value += a * std::pow(y, rho);
    if (b > 0.0) value += b * std::pow(1.0 - y, rho);
    return c * value;
  };
}

}  // namespace

DiscriminatorFn optimal_discriminator(AlphaParam alpha,
                                      const DiscreteDistribution& p_r,
                                      const DiscreteDistribution& p_g) {
  require_same_support(p_r, p_g);
  Eigen::ArrayXd d(p_r.support_size());
  for (int i = 0; i < p_r.support_size(); ++i) {
    d[i] = tilted_ratio(alpha, p_r.probs[i], p_g.probs[i]);
  }
  return TabularD{std::move(d)};
}

DiscriminatorFn brute_force_discriminator(AlphaParam alpha,
                                          const DiscreteDistribution& p_r,
                                          const DiscreteDistribution& p_g,
                                          int grid) {
  require_same_support(p_r, p_g);
  if (grid < 1000) {
    throw std::invalid_argument(
        "brute_force_discriminator: grid must be at least 1000");
  }
  Eigen::ArrayXd d(p_r.support_size());
  for (int i = 0; i < p_r.support_size(); ++i) {
    const double a = p_r.probs[i];
    const double b = p_g.probs[i];
    if (a == 0.0 && b == 0.0) {
      d[i] = 0.5;
      continue;
    }
    auto g = atom_objective(alpha, a, b);
    int best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= grid; ++k) {
      double y = static_cast<double>(k) / grid;
      double value = g(y);
      if (value > best_value) {
        best_value = value;
        best = k;
      }
    }
    double lo = static_cast<double>(std::max(0, best - 1)) / grid;
    double hi = static_cast<double>(std::min(grid, best + 1)) / grid;
    auto neg = [&g](double y) { return -g(y); };
    d[i] = golden_section_min(neg, lo, hi, 1e-10).x;
  }
  return TabularD{std::move(d)};
}

double objective_floor(AlphaParam alpha) {
  if (alpha.is_infinite()) return -1.0;
  if (alpha.is_one()) return -std::log(4.0);
  double a = alpha.value();
  return a / (a - 1.0) * (std::pow(2.0, 1.0 / a) - 2.0);
}

double generator_objective(AlphaParam alpha, const DiscreteDistribution& p_r,
                           const DiscreteDistribution& p_g) {
  return arimoto_divergence(alpha, p_r, p_g).value + objective_floor(alpha);
}

}  // namespace alphagan
