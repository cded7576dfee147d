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

#ifndef ALPHAGAN_EQUILIBRIUM_HPP_
#define ALPHAGAN_EQUILIBRIUM_HPP_

#include "alphagan/alpha.hpp"
#include "alphagan/distributions.hpp"
#include "alphagan/value.hpp"

namespace alphagan {

// The best response maximizing the value function, per atom the tilted
// ratio p_r^alpha / (p_r^alpha + p_g^alpha), computed in log space as
// sigmoid(alpha * (log p_r - log p_g)) so moderate orders cannot
// overflow. On the infinity branch this sharpens to the most-likely rule
// 1{p_r > p_g} with ties at 1/2. Atoms with both masses zero map to 1/2.
DiscriminatorFn optimal_discriminator(AlphaParam alpha,
                                      const DiscreteDistribution& p_r,
                                      const DiscreteDistribution& p_g);

// Independent check of the closed form: per atom, maximize
//
//   g(y) = (alpha / (alpha-1)) * (a y^rho + b (1-y)^rho)
//
// over y in [0, 1] on a uniform grid (at least 1000 points), then refine
// the winning cell by golden section down to a 1e-10 bracket.
DiscriminatorFn brute_force_discriminator(AlphaParam alpha,
                                          const DiscreteDistribution& p_r,
                                          const DiscreteDistribution& p_g,
                                          int grid = 1024);

// Value of the game when the discriminator plays the best response with
// both distributions fixed and equal: (alpha/(alpha-1)) (2^(1/alpha) - 2),
// which tends to -log 4 at one and -1 on the infinity branch. It is the
// lowest the generator objective can go.
double objective_floor(AlphaParam alpha);

// What the generator faces after the discriminator's best response:
// divergence plus the floor constant. Minimized over p_g exactly at
// p_g = p_r, where it equals the floor.
double generator_objective(AlphaParam alpha, const DiscreteDistribution& p_r,
                           const DiscreteDistribution& p_g);

}  // namespace alphagan

#endif  // ALPHAGAN_EQUILIBRIUM_HPP_
