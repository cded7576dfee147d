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

#ifndef ALPHAGAN_CONVERGENCE_HPP_
#define ALPHAGAN_CONVERGENCE_HPP_

#include <Eigen/Dense>
#include <utility>
#include <variant>
#include <vector>

#include "alphagan/alpha.hpp"
#include "alphagan/distributions.hpp"

namespace alphagan {

// theta_n = theta_star + (theta_start - theta_star) / n, a Bernoulli
// parameter sliding toward theta_star.
struct BernoulliDrift {
  double theta_start = 1.0;
  double theta_star = 0.5;
};

// P_n = (1 - 1/n) * base + (1/n) * noise, noise fading out.
struct ShrinkingMixture {
  DiscreteDistribution base;
  DiscreteDistribution noise;
};

struct CustomSequence {
  std::vector<DiscreteDistribution> dists;
};

struct DistSequence {
  std::variant<BernoulliDrift, ShrinkingMixture, CustomSequence> kind;
  int length = 0;
};

// The n-th element, n counted from 1.
DiscreteDistribution element_at(const DistSequence& seq, int n);

// Entry (n-1, j) is the order-alphas[j] divergence between the n-th
// element and the target.
Eigen::MatrixXd divergence_trace(const DistSequence& seq,
                                 const DiscreteDistribution& target,
                                 const std::vector<AlphaParam>& alphas);

// Convergence is operationalized as: the max over the last 10% of the
// trace is below tol. "violation" is the falsifier outcome, one order
// converging while the other does not; it cannot occur for exact traces
// of this divergence family and signals either a bug or a tolerance
// sitting between the two tails.
enum class Verdict { both_converge, neither_converges, violation };

const char* to_string(Verdict v);

Verdict equivalence_check(const DistSequence& seq,
                          const DiscreteDistribution& target,
                          AlphaParam alpha1, AlphaParam alpha2, double tol);

// True iff jsd(p, q) <= log(2) * tv(p, q) + 1e-12 for every pair.
bool lin_bound_check(
    const std::vector<std::pair<DiscreteDistribution, DiscreteDistribution>>&
        pairs);

}  // namespace alphagan

#endif  // ALPHAGAN_CONVERGENCE_HPP_
