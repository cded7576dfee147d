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

#include "alphagan/value.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alphagan/mlp.hpp"

namespace alphagan {
namespace {

constexpr double kDClamp = 1e-7;

void require_unit_interval(double d) {
  if (!(d >= 0.0 && d <= 1.0)) {
    throw std::invalid_argument("discriminator output outside [0, 1]");
  }
}

double clamp_for_alpha(AlphaParam alpha, double d) {
  if (!alpha.is_infinite() && alpha.value() < 1.0 && !alpha.is_one()) {
    return std::clamp(d, kDClamp, 1.0 - kDClamp);
  }
  return d;
}

}  // namespace

double discriminator_at(const DiscriminatorFn& d, int atom) {
  if (const auto* t = std::get_if<TabularD>(&d)) {
    if (atom < 0 || atom >= t->d.size()) {
      throw std::out_of_range("tabular discriminator: atom out of range");
    }
    double v = t->d[atom];
    require_unit_interval(v);
    return v;
  }
  if (const auto* c = std::get_if<ConstantD>(&d)) {
    require_unit_interval(c->d);
    return c->d;
  }
  throw std::invalid_argument(
      "neural discriminator has no per-atom table; evaluate it on samples");
}

double discriminator_on(const DiscriminatorFn& d, const Eigen::VectorXd& x) {
  if (const auto* n = std::get_if<NeuralD>(&d)) {
    if (n->model == nullptr) {
      throw std::invalid_argument("neural discriminator without a model");
    }
    return forward(*n->model, x)[0];
  }
  if (std::holds_alternative<ConstantD>(d)) {
    return discriminator_at(d, 0);
  }
  return discriminator_at(d, static_cast<int>(std::lround(x[0])));
}

double value_alpha_exact(AlphaParam alpha, const DiscreteDistribution& p_r,
                         const DiscreteDistribution& p_g,
                         const DiscriminatorFn& d) {
  require_same_support(p_r, p_g);
  if (std::holds_alternative<NeuralD>(d)) {
    throw std::invalid_argument(
        "value_alpha_exact needs a tabular or constant discriminator");
  }
  const int k = p_r.support_size();
  if (alpha.acts_as_tv()) {
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
      sum += (p_r.probs[i] - p_g.probs[i]) * discriminator_at(d, i);
    }
    return sum - 1.0;
  }
  if (alpha.is_one()) {
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
      double di = discriminator_at(d, i);
      if (p_r.probs[i] > 0.0) sum += p_r.probs[i] * std::log(di);
      if (p_g.probs[i] > 0.0) sum += p_g.probs[i] * std::log1p(-di);
    }
    return sum;
  }
  double a = alpha.value();
  double rho = (a - 1.0) / a;
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    double di = clamp_for_alpha(alpha, discriminator_at(d, i));
    if (p_r.probs[i] > 0.0) sum += p_r.probs[i] * std::pow(di, rho);
    if (p_g.probs[i] > 0.0) sum += p_g.probs[i] * std::pow(1.0 - di, rho);
  }
  return a / (a - 1.0) * (sum - 2.0);
}

double value_alpha_mc(AlphaParam alpha, const Eigen::MatrixXd& real_samples,
                      const Eigen::MatrixXd& fake_samples,
                      const DiscriminatorFn& d) {
  const int n = static_cast<int>(real_samples.rows());
  const int m = static_cast<int>(fake_samples.rows());
  if (n == 0 || m == 0) {
    throw std::invalid_argument("value_alpha_mc: empty sample batch");
  }
  double real_term = 0.0;
  double fake_term = 0.0;
  if (alpha.acts_as_tv()) {
    for (int i = 0; i < n; ++i) {
      real_term += discriminator_on(d, real_samples.row(i));
    }
    for (int j = 0; j < m; ++j) {
      fake_term += discriminator_on(d, fake_samples.row(j));
    }
    return real_term / n - fake_term / m - 1.0;
  }
  if (alpha.is_one()) {
    for (int i = 0; i < n; ++i) {
      real_term += std::log(discriminator_on(d, real_samples.row(i)));
    }
    for (int j = 0; j < m; ++j) {
      fake_term += std::log1p(-discriminator_on(d, fake_samples.row(j)));
    }
    return real_term / n + fake_term / m;
  }
  double a = alpha.value();
  double rho = (a - 1.0) / a;
  for (int i = 0; i < n; ++i) {
    double di = clamp_for_alpha(alpha, discriminator_on(d, real_samples.row(i)));
    real_term += std::pow(di, rho);
  }
  for (int j = 0; j < m; ++j) {
    double dj = clamp_for_alpha(alpha, discriminator_on(d, fake_samples.row(j)));
    fake_term += std::pow(1.0 - dj, rho);
  }
  return a / (a - 1.0) * (real_term / n + fake_term / m - 2.0);
}

double general_loss_value(const BinaryLoss& loss,
                          const DiscreteDistribution& p_r,
                          const DiscreteDistribution& p_g,
                          const DiscriminatorFn& d) {
  require_same_support(p_r, p_g);
  double sum = 0.0;
  for (int i = 0; i < p_r.support_size(); ++i) {
    double di = discriminator_at(d, i);
    if (p_r.probs[i] > 0.0) sum -= p_r.probs[i] * loss(1, di);
    if (p_g.probs[i] > 0.0) sum -= p_g.probs[i] * loss(0, di);
  }
  return sum;
}

}  // namespace alphagan
