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

#include "alphagan/variational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "alphagan/arimoto.hpp"
#include "alphagan/equilibrium.hpp"
#include "alphagan/golden.hpp"
#include "alphagan/loss.hpp"

namespace alphagan {
namespace {

constexpr double kInitialBracket = 40.0;
constexpr double kMaxBracket = 700.0;

double closed_form_infimum(AlphaParam alpha, double eta) {
  if (alpha.is_infinite()) {
    return std::min(eta, 1.0 - eta);
  }
  if (alpha.is_one()) {
    double value = 0.0;
    if (eta > 0.0) value -= eta * std::log(eta);
    if (eta < 1.0) value -= (1.0 - eta) * std::log1p(-eta);
    return value;
  }
  double a = alpha.value();
  return a / (a - 1.0) * (1.0 - power_mean(a, eta, 1.0 - eta));
}

// Widening golden-section search: restart on a doubled bracket whenever
// the minimizer sits within a sliver of either edge.
double locate_minimizer(AlphaParam alpha, double eta) {
  auto objective = [alpha, eta](double t) {
    return eta * loss_margin(alpha, t) +
           (1.0 - eta) * loss_margin(alpha, -t);
  };
  double half = kInitialBracket;
  for (;;) {
    GoldenResult r = golden_section_min(objective, -half, half, 1e-10);
    double edge_sliver = 1e-6 * 2.0 * half;
    bool at_edge = (r.x + half) < edge_sliver || (half - r.x) < edge_sliver;
    if (!at_edge || half >= kMaxBracket) return r.x;
    half = std::min(2.0 * half, kMaxBracket);
  }
}

}  // namespace

MarginInfimum margin_infimum(AlphaParam alpha, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::out_of_range("margin_infimum: eta must lie in [0, 1]");
  }
  if (eta == 0.0) {
    return MarginInfimum{0.0, -std::numeric_limits<double>::infinity()};
  }
  if (eta == 1.0) {
    return MarginInfimum{0.0, std::numeric_limits<double>::infinity()};
  }
  return MarginInfimum{closed_form_infimum(alpha, eta),
                       locate_minimizer(alpha, eta)};
}

double reconstruct_f(AlphaParam alpha, double u) {
  if (!(u >= 0.0)) {
    throw std::invalid_argument("reconstruct_f: u must be non-negative");
  }
  double infimum;
  if (u == 0.0) {
    infimum = 0.0;
  } else {
    double eta = u / (1.0 + u);
    double t_star = margin_infimum(alpha, eta).argmin_t;
    infimum = u * loss_margin(alpha, t_star) + loss_margin(alpha, -t_star);
  }
  return -infimum - objective_floor(alpha);
}

bool perspective_symmetry_check(AlphaParam alpha,
                                const std::vector<double>& u_grid,
                                double* worst_residual) {
  const double shift = alpha.is_one() ? 0.0 : objective_floor(alpha);
  auto symmetric_form = [alpha, shift](double u) {
    return f_alpha(alpha, u) + shift;
  };
  double worst = 0.0;
  for (double u : u_grid) {
    if (!(u > 0.0)) {
      throw std::invalid_argument(
          "perspective_symmetry_check: grid points must be positive");
    }
    double residual =
        std::abs(symmetric_form(u) - u * symmetric_form(1.0 / u));
    worst = std::max(worst, residual);
  }
  if (worst_residual != nullptr) *worst_residual = worst;
  return worst <= 1e-9;
}

}  // namespace alphagan
