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

#include "alphagan/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphagan/arimoto.hpp"
#include "alphagan/distributions.hpp"
#include "alphagan/equilibrium.hpp"
#include "alphagan/rng.hpp"
#include "alphagan/value.hpp"
#include "alphagan/variational.hpp"

namespace alphagan {
namespace {

constexpr int kBruteGrid = 1024;

// Strictly positive weights keep the closed form away from its 0/1
// endpoints, where a grid search is trivially exact anyway.
DiscreteDistribution random_positive_dist(Rng& rng, int support) {
  Eigen::ArrayXd w(support);
  for (int i = 0; i < support; ++i) w[i] = rng.uniform(0.05, 1.0);
  return make_discrete(w);
}

// Zeroes roughly one atom in eight to stress the boundary handling of
// the divergences; redraws the rare all-zero vector.
DiscreteDistribution random_sparse_dist(Rng& rng, int support) {
  for (;;) {
    Eigen::ArrayXd w(support);
    bool any = false;
    for (int i = 0; i < support; ++i) {
      w[i] = rng.uniform() < 0.125 ? 0.0 : rng.uniform(0.0, 1.0);
      any = any || w[i] > 0.0;
    }
    if (any) return make_discrete(w);
  }
}

SubcheckResult subcheck(const std::string& name, double worst,
                        double tolerance) {
  return SubcheckResult{name, worst, tolerance, worst <= tolerance};
}

CheckResult finalize(const std::string& name, int trials, std::uint64_t seed,
                     std::vector<SubcheckResult> subchecks) {
  CheckResult result;
  result.check = name;
  result.trials = trials;
  result.seed = seed;
  result.subchecks = std::move(subchecks);
  result.pass = true;
  double binding = -std::numeric_limits<double>::infinity();
  for (const auto& sub : result.subchecks) {
    result.pass = result.pass && sub.pass;
    const double ratio = sub.worst_error / sub.tolerance;
    if (ratio > binding) {
      binding = ratio;
      result.worst_error = sub.worst_error;
      result.tolerance = sub.tolerance;
    }
  }
  return result;
}

void require_trials(int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
}

const Eigen::ArrayXd& tabular(const DiscriminatorFn& d) {
  return std::get<TabularD>(d).d;
}

}  // namespace

CheckResult check_equilibrium(int trials, std::uint64_t seed) {
  require_trials(trials);
  const std::vector<AlphaParam> alphas = {
      AlphaParam(0.3),    AlphaParam(0.5),  AlphaParam(1.0), AlphaParam(2.0),
      AlphaParam(7.0),    AlphaParam(1e3),  AlphaParam::infinity()};
  Rng rng(seed);
  double worst_match = 0.0;
  double worst_identity = 0.0;
  for (int i = 0; i < trials; ++i) {
    const AlphaParam alpha = alphas[i % alphas.size()];
    const int support = 2 + static_cast<int>(rng.index(15));
    const DiscreteDistribution p = random_positive_dist(rng, support);
    const DiscreteDistribution q = random_positive_dist(rng, support);

    const DiscriminatorFn closed = optimal_discriminator(alpha, p, q);
    const DiscriminatorFn brute =
        brute_force_discriminator(alpha, p, q, kBruteGrid);
    worst_match = std::max(
        worst_match, (tabular(closed) - tabular(brute)).abs().maxCoeff());

    const double at_optimum = value_alpha_exact(alpha, p, q, closed);
    worst_identity = std::max(
        worst_identity, std::abs(at_optimum - generator_objective(alpha, p, q)));
  }
  return finalize("equilibrium", trials, seed,
                  {subcheck("brute_force_matches_closed_form", worst_match,
                            1e-4),
                   subcheck("value_at_optimum_matches_objective",
                            worst_identity, 1e-10)});
}

CheckResult check_variational(int trials, std::uint64_t seed) {
  if (trials < 2) {
    throw std::invalid_argument("variational check needs a grid of >= 2");
  }
  std::vector<double> grid(trials);
  for (int j = 0; j < trials; ++j) {
    grid[j] = std::pow(10.0, -3.0 + 6.0 * j / (trials - 1));
  }
  const std::vector<AlphaParam> alphas = {AlphaParam(0.3),  AlphaParam(0.5),
                                          AlphaParam(0.99), AlphaParam(1.01),
                                          AlphaParam(2.0),  AlphaParam(10.0)};
  double worst_reconstruction = 0.0;
  double worst_symmetry = 0.0;
  for (const AlphaParam alpha : alphas) {
    for (double u : grid) {
      worst_reconstruction =
          std::max(worst_reconstruction,
                   std::abs(reconstruct_f(alpha, u) - f_alpha(alpha, u)));
    }
    double residual = 0.0;
    perspective_symmetry_check(alpha, grid, &residual);
    worst_symmetry = std::max(worst_symmetry, residual);
  }
  return finalize(
      "variational", trials, seed,
      {subcheck("margin_reconstruction_matches_generator", worst_reconstruction,
                1e-7),
       subcheck("perspective_symmetry", worst_symmetry, 1e-9)});
}

CheckResult check_bounds(int trials, std::uint64_t seed) {
  require_trials(trials);
  const std::vector<AlphaParam> alphas = {
      AlphaParam(0.2), AlphaParam(0.5),   AlphaParam(1.0),      AlphaParam(2.0),
      AlphaParam(5.0), AlphaParam(100.0), AlphaParam::infinity()};
  Rng rng(seed);
  double worst_lower = -std::numeric_limits<double>::infinity();
  double worst_upper = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < trials; ++i) {
    const int support = 2 + static_cast<int>(rng.index(15));
    const DiscreteDistribution p = random_sparse_dist(rng, support);
    const DiscreteDistribution q = random_sparse_dist(rng, support);
    const double t = tv(p, q);
    for (const AlphaParam alpha : alphas) {
      const double d = arimoto_divergence(alpha, p, q).value;
      worst_lower = std::max(worst_lower, psi_alpha(alpha, t) - d);
      worst_upper = std::max(worst_upper, d - psi_alpha(alpha, 1.0) * t);
    }
  }
  return finalize("bounds", trials, seed,
                  {subcheck("lower_sandwich_violation", worst_lower, 1e-12),
                   subcheck("upper_sandwich_violation", worst_upper, 1e-12)});
}

CheckResult check_limits(int trials, std::uint64_t seed) {
  require_trials(trials);
  Rng rng(seed);
  double worst_hellinger = 0.0;
  double worst_jsd = 0.0;
  double worst_tv = 0.0;
  for (int i = 0; i < trials; ++i) {
    const int support = 2 + static_cast<int>(rng.index(15));
    const DiscreteDistribution p = random_sparse_dist(rng, support);
    const DiscreteDistribution q = random_sparse_dist(rng, support);
    worst_hellinger = std::max(
        worst_hellinger,
        std::abs(arimoto_divergence(AlphaParam(0.5), p, q).value -
                 sq_hellinger(p, q)));
    const double twice_jsd = 2.0 * jsd(p, q);
    worst_jsd = std::max(
        worst_jsd,
        std::max(
            std::abs(arimoto_divergence(AlphaParam(1.0 + 1e-5), p, q).value -
                     twice_jsd),
            std::abs(arimoto_divergence(AlphaParam(1.0 - 1e-5), p, q).value -
                     twice_jsd)));
    worst_tv = std::max(
        worst_tv,
        std::abs(arimoto_divergence(AlphaParam(1e4), p, q).value - tv(p, q)));
  }
  return finalize("limits", trials, seed,
                  {subcheck("half_matches_squared_hellinger", worst_hellinger,
                            1e-12),
                   subcheck("near_one_matches_twice_jsd", worst_jsd, 1e-4),
                   subcheck("large_order_matches_tv", worst_tv, 1e-3)});
}

CheckResult check_metric(int trials, std::uint64_t seed) {
  require_trials(trials);
  const std::vector<AlphaParam> alphas = {AlphaParam(0.25), AlphaParam(0.5),
                                          AlphaParam(1.0), AlphaParam(2.0),
                                          AlphaParam::infinity()};
  Rng rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < trials; ++i) {
    const AlphaParam alpha = alphas[i % alphas.size()];
    const int support = 2 + static_cast<int>(rng.index(7));
    const DiscreteDistribution a = random_sparse_dist(rng, support);
    const DiscreteDistribution b = random_sparse_dist(rng, support);
    const DiscreteDistribution c = random_sparse_dist(rng, support);
    const double violation = metric_power(alpha, a, c) -
                             metric_power(alpha, a, b) -
                             metric_power(alpha, b, c);
    worst = std::max(worst, violation);
  }
  return finalize("metric", trials, seed,
                  {subcheck("triangle_violation", worst, 1e-12)});
}

CheckResult check_lin(int trials, std::uint64_t seed) {
  require_trials(trials);
  Rng rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < trials; ++i) {
    const int support = 2 + static_cast<int>(rng.index(15));
    const DiscreteDistribution p = random_sparse_dist(rng, support);
    const DiscreteDistribution q = random_sparse_dist(rng, support);
    worst = std::max(worst, jsd(p, q) - std::log(2.0) * tv(p, q));
  }
  return finalize("lin", trials, seed,
                  {subcheck("jsd_over_scaled_tv", worst, 1e-12)});
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "equilibrium", "variational", "bounds", "limits", "metric", "lin"};
  return names;
}

CheckResult run_check(const std::string& name, int trials,
                      std::uint64_t seed) {
  if (name == "equilibrium") return check_equilibrium(trials, seed);
  if (name == "variational") return check_variational(trials, seed);
  if (name == "bounds") return check_bounds(trials, seed);
  if (name == "limits") return check_limits(trials, seed);
  if (name == "metric") return check_metric(trials, seed);
  if (name == "lin") return check_lin(trials, seed);
  throw UnknownCheck("unknown check: " + name);
}

std::vector<SweepRow> sweep_divergence(const std::vector<AlphaParam>& alphas,
                                       int theta_steps) {
  if (alphas.empty()) throw std::invalid_argument("alphas must be non-empty");
  if (theta_steps < 2) throw std::invalid_argument("theta grid needs >= 2");
  const DiscreteDistribution fair = bernoulli(0.5);
  std::vector<SweepRow> rows;
  rows.reserve(alphas.size() * theta_steps);
  for (const AlphaParam alpha : alphas) {
    for (int i = 0; i < theta_steps; ++i) {
      const double theta = static_cast<double>(i) / (theta_steps - 1);
      SweepRow row;
      row.alpha = alpha;
      row.theta = theta;
      row.divergence =
          arimoto_divergence(alpha, fair, bernoulli(theta)).value;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace alphagan
