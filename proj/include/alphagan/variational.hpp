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

#ifndef ALPHAGAN_VARIATIONAL_HPP_
#define ALPHAGAN_VARIATIONAL_HPP_

#include <vector>

#include "alphagan/alpha.hpp"

namespace alphagan {

struct MarginInfimum {
  // inf over t of eta * margin_loss(t) + (1 - eta) * margin_loss(-t),
  // in closed form:
  //   (alpha / (alpha-1)) * (1 - (eta^alpha + (1-eta)^alpha)^(1/alpha)),
  // binary entropy at alpha = 1, min(eta, 1-eta) on the infinity branch.
  double value = 0.0;
  // Minimizer found by golden section; +-infinity sentinels when eta is 0
  // or 1 and the infimum is only attained in the limit.
  double argmin_t = 0.0;
};

// Closed-form infimum plus the numerically located minimizer. The
// objective is strictly unimodal in t for every order (its derivative
// changes sign exactly once), so a golden-section line search on
// [-40, 40], doubled whenever the minimum lands on the bracket edge,
// is exact. Throws std::out_of_range for eta outside [0, 1].
MarginInfimum margin_infimum(AlphaParam alpha, double eta);

// Rebuilds the divergence generator from the margin loss alone:
//
//   f(u) = -inf_t (u * margin_loss(t) + margin_loss(-t)) - floor constant
//
// evaluated through margin_infimum at eta = u / (1 + u), using the
// numeric minimizer rather than the closed form so the route is a real
// cross-check of f_alpha. Throws std::invalid_argument for negative u.
double reconstruct_f(AlphaParam alpha, double u);

// Checks |F(u) - u * F(1/u)| <= 1e-9 across the grid, where F is the
// perspective-symmetric representative of the generator family: f_alpha
// shifted by the floor constant for orders away from one (the raw
// generator carries a linear tilt that breaks the identity), and f_1
// itself at one, where it holds without any shift. Optionally reports
// the worst absolute residual.
bool perspective_symmetry_check(AlphaParam alpha,
                                const std::vector<double>& u_grid,
                                double* worst_residual = nullptr);

}  // namespace alphagan

#endif  // ALPHAGAN_VARIATIONAL_HPP_
