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

#ifndef ALPHAGAN_DISTRIBUTIONS_HPP_
#define ALPHAGAN_DISTRIBUTIONS_HPP_

#include <Eigen/Dense>
#include <stdexcept>
#include <variant>
#include <vector>

#include "alphagan/rng.hpp"

namespace alphagan {

struct SupportMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Finite-support probability vector. Entries are non-negative and sum to
// one within 1e-12 after construction. Zero-probability atoms stay in the
// support; divergence code relies on them being present.
struct DiscreteDistribution {
  Eigen::ArrayXd probs;

  int support_size() const { return static_cast<int>(probs.size()); }
};

// Normalizes the weights by their sum. Weights coming out of floating
// point arithmetic rarely sum to one exactly, so near-one sums are
// renormalized rather than rejected.
DiscreteDistribution make_discrete(const Eigen::ArrayXd& weights);
DiscreteDistribution make_discrete(const std::vector<double>& weights);

// Two-point distribution with probs [1 - theta, theta]; index 0 is
// outcome 0 and index 1 is outcome 1.
DiscreteDistribution bernoulli(double theta);

void require_same_support(const DiscreteDistribution& p,
                          const DiscreteDistribution& q);

struct Gaussian1d {
  double mean = 0.0;
  double stddev = 1.0;
};

struct MixtureComponent {
  double weight = 1.0;
  double mean = 0.0;
  double stddev = 1.0;
};

struct GaussianMixture1d {
  std::vector<MixtureComponent> components;
};

// n_modes equal-weight Gaussian blobs with centers equally spaced on the
// circle of the given radius, isotropic per-mode noise.
struct Ring2d {
  int n_modes = 8;
  double radius = 2.0;
  double mode_std = 0.1;
};

using ToyContinuousDist = std::variant<Gaussian1d, GaussianMixture1d, Ring2d>;

// Data-space dimension: 1 for the Gaussian kinds, 2 for the ring.
int dim(const ToyContinuousDist& dist);

// Throws std::invalid_argument on non-positive widths, bad weights, or
// n_modes < 1.
void validate(const ToyContinuousDist& dist);

// n outcome indices drawn by inverse CDF.
Eigen::VectorXi sample_indices(const DiscreteDistribution& dist, int n,
                               Rng& rng);

// n x d matrices of i.i.d. draws. The discrete overload returns outcome
// indices as an n x 1 matrix.
Eigen::MatrixXd sample(const ToyContinuousDist& dist, int n, Rng& rng);
Eigen::MatrixXd sample(const DiscreteDistribution& dist, int n, Rng& rng);

}  // namespace alphagan

#endif  // ALPHAGAN_DISTRIBUTIONS_HPP_
