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

#ifndef ALPHAGAN_CHECKS_HPP_
#define ALPHAGAN_CHECKS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "alphagan/alpha.hpp"

namespace alphagan {

// Randomized theorem checks shared by the CLI and the acceptance
// harness. Each check draws its own instances from the given seed,
// reports the worst observed error per subcheck, and passes only when
// every subcheck sits below its tolerance.

struct SubcheckResult {
  std::string name;
  double worst_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CheckResult {
  std::string check;
  int trials = 0;
  std::uint64_t seed = 0;
  // Headline numbers come from the subcheck closest to (or past) its
  // tolerance.
  double worst_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<SubcheckResult> subchecks;
};

// Closed-form optimal discriminator against a per-atom brute-force
// search, plus the value identity at the optimum.
CheckResult check_equilibrium(int trials, std::uint64_t seed);

// Divergence reconstruction from margin-based infima, plus perspective
// symmetry of the shifted generator curve. trials sets the u-grid size.
CheckResult check_variational(int trials, std::uint64_t seed);

// Two-sided total-variation sandwich of the divergence.
CheckResult check_bounds(int trials, std::uint64_t seed);

// Closed-form limit orders against the generic branch evaluated nearby.
CheckResult check_limits(int trials, std::uint64_t seed);

// Triangle inequality of the divergence raised to min(alpha, 1/2).
CheckResult check_metric(int trials, std::uint64_t seed);

// Jensen-Shannon against total variation scaled by log 2.
CheckResult check_lin(int trials, std::uint64_t seed);

// Dispatch by name. Throws UnknownCheck for anything not in
// check_names().
struct UnknownCheck : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

CheckResult run_check(const std::string& name, int trials, std::uint64_t seed);

const std::vector<std::string>& check_names();

// One point of the divergence sweep against a fair coin.
struct SweepRow {
  AlphaParam alpha{1.0};
  double theta = 0.0;
  double divergence = 0.0;
};

// Rows ordered with alpha outermost; theta runs over an even grid on
// [0, 1] with theta_steps points (at least 2).
std::vector<SweepRow> sweep_divergence(const std::vector<AlphaParam>& alphas,
                                       int theta_steps);

}  // namespace alphagan

#endif  // ALPHAGAN_CHECKS_HPP_
