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

#ifndef ALPHAGAN_REPORT_IO_HPP_
#define ALPHAGAN_REPORT_IO_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "alphagan/checks.hpp"
#include "alphagan/convergence.hpp"
#include "alphagan/train.hpp"

namespace alphagan {

nlohmann::ordered_json dataset_to_json(const ToyContinuousDist& dist);

// Report layout is stable: config, seed, then one record per evaluation
// point with fields step, value_estimate, divergence_estimate,
// sample_mean, sample_std, modes_covered. Wall-clock time is left out so
// equal seeds serialize byte-identically.
nlohmann::ordered_json report_to_json(const TrainReport& report);

nlohmann::ordered_json check_to_json(const CheckResult& result);

// CSV with header line `alpha,theta,divergence`.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// CSV with header line `n,alpha,divergence`; one row per sequence index
// and order, index outermost.
void write_trace_csv(std::ostream& out, const Eigen::MatrixXd& trace,
                     const std::vector<AlphaParam>& alphas);

// Parse failure in a key-value config; field names the offending key, or
// the missing one.
struct ConfigError : std::runtime_error {
  ConfigError(std::string bad_field, const std::string& message);
  std::string field;
};

// Flat key = value text, '#' starts a comment, blank lines ignored.
// Keys alpha and dataset are required; dataset is one of gaussian1d
// (mean, std), mixture1d (components as weight:mean:std triples,
// comma-separated), ring2d (n_modes, radius, mode_std). Remaining keys
// mirror the TrainConfig fields; hidden widths are comma-separated
// integer lists. Keys that do not apply to the chosen dataset are
// rejected.
TrainConfig parse_train_config(std::istream& in);

TrainConfig parse_train_config_file(const std::string& path);

}  // namespace alphagan

#endif  // ALPHAGAN_REPORT_IO_HPP_
