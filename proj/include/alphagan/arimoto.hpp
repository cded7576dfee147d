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

#ifndef ALPHAGAN_ARIMOTO_HPP_
#define ALPHAGAN_ARIMOTO_HPP_

#include "alphagan/alpha.hpp"
#include "alphagan/distributions.hpp"

namespace alphagan {

struct DivergenceValue {
  double value = 0.0;
  AlphaParam alpha{1.0};
  // Number of summands where the stable power-mean path short-circuited a
  // zero mass or absorbed an underflowing ratio.
  int clamped_terms = 0;
};

// Overflow-safe (a^alpha + b^alpha)^(1/alpha) for a, b >= 0: factors out
// the larger argument, so the inner power ratio never exceeds 1. Returns
// max(a, b) when the smaller argument is 0, and 0 when both are.
double power_mean(double alpha, double a, double b);

// Convex generator of the divergence family,
//
//   f_alpha(u) = (alpha / (alpha-1)) * ((1 + u^alpha)^(1/alpha)
//                - (1 + u) - 2^(1/alpha) + 2),
//
// with the closed extensions f_1(u) = u log u - (1+u) log((1+u)/2) and
// f_inf(u) = max(1, u) - u. Zero at u = 1 for every order. Throws
// std::invalid_argument for negative u.
double f_alpha(AlphaParam alpha, double u);

// The f_alpha-generated divergence on a shared finite support,
//
//   (alpha / (alpha-1)) * (sum_x (p(x)^alpha + q(x)^alpha)^(1/alpha)
//                          - 2^(1/alpha)),
//
// symmetric in (p, q) and zero iff p = q. Orders route to closed forms:
// 2 * jsd at one, total variation on the infinity branch and for finite
// orders at or above AlphaParam::kTvThreshold.
DivergenceValue arimoto_divergence(AlphaParam alpha,
                                   const DiscreteDistribution& p,
                                   const DiscreteDistribution& q);

// Jensen-Shannon divergence in nats, in [0, log 2]. 0 log 0 counts as 0.
double jsd(const DiscreteDistribution& p, const DiscreteDistribution& q);

// sum_x (sqrt p - sqrt q)^2, in [0, 2]. Equals the order-1/2 divergence.
double sq_hellinger(const DiscreteDistribution& p,
                    const DiscreteDistribution& q);

// Total variation distance (1/2) sum |p - q|, in [0, 1].
double tv(const DiscreteDistribution& p, const DiscreteDistribution& q);

// The convex increasing function that squeezes the divergence between
// functions of total variation:
//
//   psi_alpha(x) = (alpha / (alpha-1))
//                  * (((1+x)^alpha + (1-x)^alpha)^(1/alpha) - 2^(1/alpha))
//
// on [0, 1], with psi_1(x) = (1+x) log(1+x) + (1-x) log(1-x) and the
// identity map on the infinity branch. psi_alpha(0) = 0 and
// psi_alpha(tv(p,q)) <= divergence <= psi_alpha(1) * tv(p,q).
double psi_alpha(AlphaParam alpha, double x);

// arimoto_divergence(alpha, p, q) raised to min(alpha, 1/2); this power
// of the divergence satisfies the triangle inequality.
double metric_power(AlphaParam alpha, const DiscreteDistribution& p,
                    const DiscreteDistribution& q);

}  // namespace alphagan

#endif  // ALPHAGAN_ARIMOTO_HPP_
