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

#include "alphagan/arimoto.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alphagan {
namespace {

// power_mean with an out-flag saying whether a degenerate or underflowing
// path was taken; arimoto_divergence counts those summands.
double power_mean_flagged(double alpha, double a, double b, bool* flagged) {
  double m = std::max(a, b);
  double s = std::min(a, b);
  if (s <= 0.0) {
    *flagged = true;
    return m;
  }
  double ratio_pow = std::pow(s / m, alpha);
  *flagged = ratio_pow == 0.0;
  return m * std::exp(std::log1p(ratio_pow) / alpha);
}

}  // namespace

double power_mean(double alpha, double a, double b) {
  bool unused = false;
  return power_mean_flagged(alpha, a, b, &unused);
}

double f_alpha(AlphaParam alpha, double u) {
  if (!(u >= 0.0)) {
    throw std::invalid_argument("f_alpha: u must be non-negative");
  }
  // Zero at one exactly, on every branch.
  if (u == 1.0) return 0.0;
  if (alpha.acts_as_tv()) {
    return std::max(1.0, u) - u;
  }
  if (alpha.is_one()) {
    if (u == 0.0) return std::log(2.0);
    return u * std::log(u) - (1.0 + u) * std::log(0.5 * (1.0 + u));
  }
  double a = alpha.value();
  double c = a / (a - 1.0);
  return c * (power_mean(a, 1.0, u) - (1.0 + u) - std::pow(2.0, 1.0 / a) +
              2.0);
}

DivergenceValue arimoto_divergence(AlphaParam alpha,
                                   const DiscreteDistribution& p,
                                   const DiscreteDistribution& q) {
  require_same_support(p, q);
  DivergenceValue result;
  result.alpha = alpha;
  if (alpha.acts_as_tv()) {
    result.value = tv(p, q);
    return result;
  }
  if (alpha.is_one()) {
    result.value = 2.0 * jsd(p, q);
    return result;
  }
  double a = alpha.value();
  double c = a / (a - 1.0);
  double sum = 0.0;
  for (int i = 0; i < p.support_size(); ++i) {
    bool flagged = false;
    sum += power_mean_flagged(a, p.probs[i], q.probs[i], &flagged);
    if (flagged) ++result.clamped_terms;
  }
  result.value = std::max(0.0, c * (sum - std::pow(2.0, 1.0 / a)));
  return result;
}

double jsd(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_support(p, q);
  double sum = 0.0;
  for (int i = 0; i < p.support_size(); ++i) {
    double a = p.probs[i];
    double b = q.probs[i];
    double m = 0.5 * (a + b);
    if (a > 0.0) sum += a * std::log(a / m);
    if (b > 0.0) sum += b * std::log(b / m);
  }
  return std::max(0.0, 0.5 * sum);
}

double sq_hellinger(const DiscreteDistribution& p,
                    const DiscreteDistribution& q) {
  require_same_support(p, q);
  double sum = 0.0;
  for (int i = 0; i < p.support_size(); ++i) {
    double d = std::sqrt(p.probs[i]) - std::sqrt(q.probs[i]);
    sum += d * d;
  }
  return sum;
}

double tv(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_support(p, q);
  return 0.5 * (p.probs - q.probs).abs().sum();
}

double psi_alpha(AlphaParam alpha, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::out_of_range("psi_alpha: argument must lie in [0, 1]");
  }
  // Zero at zero exactly, on every branch.
  if (x == 0.0) return 0.0;
  if (alpha.acts_as_tv()) {
    return x;
  }
  if (alpha.is_one()) {
    double value = (1.0 + x) * std::log1p(x);
    if (x < 1.0) value += (1.0 - x) * std::log1p(-x);
    return std::max(0.0, value);
  }
  double a = alpha.value();
  double c = a / (a - 1.0);
  return std::max(
      0.0, c * (power_mean(a, 1.0 + x, 1.0 - x) - std::pow(2.0, 1.0 / a)));
}

double metric_power(AlphaParam alpha, const DiscreteDistribution& p,
                    const DiscreteDistribution& q) {
  double exponent =
      alpha.is_infinite() ? 0.5 : std::min(alpha.value(), 0.5);
  return std::pow(arimoto_divergence(alpha, p, q).value, exponent);
}

}  // namespace alphagan
