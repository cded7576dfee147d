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

#include "alphagan/distributions.hpp"

#include <cmath>
#include <numbers>

namespace alphagan {

DiscreteDistribution make_discrete(const Eigen::ArrayXd& weights) {
  if (weights.size() == 0) {
    throw std::invalid_argument("make_discrete: empty weight vector");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    double w = weights[i];
    if (!std::isfinite(w)) {
      throw std::invalid_argument("make_discrete: non-finite weight");
    }
    if (w < 0.0) {
      throw std::invalid_argument("make_discrete: negative weight");
    }
    sum += w;
  }
  if (sum == 0.0) {
    throw std::invalid_argument("make_discrete: all weights are zero");
  }
  return DiscreteDistribution{weights / sum};
}

DiscreteDistribution make_discrete(const std::vector<double>& weights) {
  Eigen::ArrayXd w =
      Eigen::Map<const Eigen::ArrayXd>(weights.data(), weights.size());
  return make_discrete(w);
}

DiscreteDistribution bernoulli(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw std::out_of_range("bernoulli: theta must lie in [0, 1]");
  }
  Eigen::ArrayXd p(2);
  p << 1.0 - theta, theta;
  return DiscreteDistribution{p};
}

void require_same_support(const DiscreteDistribution& p,
                          const DiscreteDistribution& q) {
  if (p.support_size() != q.support_size()) {
    throw SupportMismatch("distributions live on different supports");
  }
}

int dim(const ToyContinuousDist& dist) {
  return std::holds_alternative<Ring2d>(dist) ? 2 : 1;
}

void validate(const ToyContinuousDist& dist) {
  if (const auto* g = std::get_if<Gaussian1d>(&dist)) {
    if (!(g->stddev > 0.0)) {
      throw std::invalid_argument("gaussian1d: stddev must be positive");
    }
    return;
  }
  if (const auto* m = std::get_if<GaussianMixture1d>(&dist)) {
    if (m->components.empty()) {
      throw std::invalid_argument("mixture1d: no components");
    }
    double wsum = 0.0;
    for (const auto& c : m->components) {
      if (!(c.stddev > 0.0)) {
        throw std::invalid_argument("mixture1d: stddev must be positive");
      }
      if (!(c.weight >= 0.0)) {
        throw std::invalid_argument("mixture1d: negative weight");
      }
      wsum += c.weight;
    }
    if (std::abs(wsum - 1.0) > 1e-9) {
      throw std::invalid_argument("mixture1d: weights must sum to 1");
    }
    return;
  }
  const auto& r = std::get<Ring2d>(dist);
  if (r.n_modes < 1) {
    throw std::invalid_argument("ring2d: n_modes must be at least 1");
  }
  if (!(r.radius > 0.0)) {
    throw std::invalid_argument("ring2d: radius must be positive");
  }
  if (!(r.mode_std > 0.0)) {
    throw std::invalid_argument("ring2d: mode_std must be positive");
  }
}

Eigen::VectorXi sample_indices(const DiscreteDistribution& dist, int n,
                               Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample: n must be at least 1");
  const int k = dist.support_size();
  Eigen::ArrayXd cdf(k);
  double acc = 0.0;
  for (int i = 0; i < k; ++i) {
    acc += dist.probs[i];
    cdf[i] = acc;
  }
  cdf[k - 1] = 1.0;
  Eigen::VectorXi out(n);
  for (int s = 0; s < n; ++s) {
    double u = rng.uniform();
    int idx = 0;
    while (idx < k - 1 && cdf[idx] < u) ++idx;
    out[s] = idx;
  }
  return out;
}

Eigen::MatrixXd sample(const DiscreteDistribution& dist, int n, Rng& rng) {
  Eigen::VectorXi idx = sample_indices(dist, n, rng);
  Eigen::MatrixXd out(n, 1);
  for (int s = 0; s < n; ++s) out(s, 0) = static_cast<double>(idx[s]);
  return out;
}

Eigen::MatrixXd sample(const ToyContinuousDist& dist, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample: n must be at least 1");
  validate(dist);
  Eigen::MatrixXd out(n, dim(dist));
  if (const auto* g = std::get_if<Gaussian1d>(&dist)) {
    for (int s = 0; s < n; ++s) out(s, 0) = g->mean + g->stddev * rng.gaussian();
    return out;
  }
  if (const auto* m = std::get_if<GaussianMixture1d>(&dist)) {
    std::vector<double> cdf;
    double acc = 0.0;
    for (const auto& c : m->components) {
      acc += c.weight;
      cdf.push_back(acc);
    }
    cdf.back() = 1.0;
    for (int s = 0; s < n; ++s) {
      double u = rng.uniform();
      std::size_t idx = 0;
      while (idx + 1 < cdf.size() && cdf[idx] < u) ++idx;
      const auto& c = m->components[idx];
      out(s, 0) = c.mean + c.stddev * rng.gaussian();
    }
    return out;
  }
  const auto& r = std::get<Ring2d>(dist);
  for (int s = 0; s < n; ++s) {
    int mode = rng.index(r.n_modes);
    double angle = 2.0 * std::numbers::pi * mode / r.n_modes;
    out(s, 0) = r.radius * std::cos(angle) + r.mode_std * rng.gaussian();
    out(s, 1) = r.radius * std::sin(angle) + r.mode_std * rng.gaussian();
  }
  return out;
}

}  // namespace alphagan
