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

#ifndef ALPHAGAN_TRAIN_HPP_
#define ALPHAGAN_TRAIN_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "alphagan/alpha.hpp"
#include "alphagan/distributions.hpp"
#include "alphagan/mlp.hpp"

namespace alphagan {

struct NonFiniteGradient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Diverged : std::runtime_error {
  explicit Diverged(int at_step);
  int step;
};

struct NotApplicable : std::logic_error {
  using std::logic_error::logic_error;
};

struct TrainConfig {
  AlphaParam alpha{1.0};
  ToyContinuousDist dataset = Gaussian1d{3.0, 0.5};
  int latent_dim = 1;
  int batch_size = 128;
  int disc_steps_per_gen_step = 1;
  double lr_disc = 0.1;
  double lr_gen = 0.1;
  double momentum = 0.0;
  int total_gen_steps = 5000;
  std::uint64_t seed = 0;
  int eval_every = 500;
  std::vector<int> gen_hidden = {16, 16};
  std::vector<int> disc_hidden = {32, 32};
  int eval_samples = 4096;
  double coverage_threshold_std = 3.0;
};

struct EvalRecord {
  int step = 0;
  double value_estimate = 0.0;
  double divergence_estimate = 0.0;
  std::vector<double> sample_mean;
  std::vector<double> sample_std;
  int modes_covered = 0;
};

struct TrainReport {
  TrainConfig config;
  std::vector<EvalRecord> records;
  double wall_clock_seconds = 0.0;
};

struct ValueGrads {
  MlpGrads disc;
  MlpGrads gen;
  double value = 0.0;
};

// Batch estimate of the two-player objective: the discriminator ascends
// it, the generator descends it. Shares the clamping conventions of
// grads_value_alpha so finite differences of this function match the
// analytic gradients.
double value_alpha_batches(AlphaParam alpha, const Eigen::MatrixXd& real_batch,
                           const Eigen::MatrixXd& latent_batch,
                           const MlpModel& gen, const MlpModel& disc);

// Analytic gradients of value_alpha_batches for both players.
// Throws NonFiniteGradient when any entry fails to be finite.
ValueGrads grads_value_alpha(AlphaParam alpha,
                             const Eigen::MatrixXd& real_batch,
                             const Eigen::MatrixXd& latent_batch,
                             const MlpModel& gen, const MlpModel& disc);

// Alternating simultaneous-ascent/descent loop. Throws Diverged (with
// the offending step) when gradients stop being finite.
TrainReport train(const TrainConfig& config);

// Mode geometry of a toy dataset: one row of centers per mode plus the
// per-mode standard deviation.
struct ModeSet {
  Eigen::MatrixXd centers;
  Eigen::VectorXd stds;
};

// gaussian_as_single_mode treats a plain Gaussian as its own one-mode
// set; otherwise a plain Gaussian has no mode structure to score and
// the call throws NotApplicable.
ModeSet mode_structure(const ToyContinuousDist& dist,
                       bool gaussian_as_single_mode);

// A mode counts as covered when at least max(20, 1% of the sample)
// points fall within threshold_std mode standard deviations of its
// center. An empty sample covers nothing.
int count_covered_modes(const Eigen::MatrixXd& samples, const ModeSet& modes,
                        double threshold_std);

int eval_mode_coverage(const Eigen::MatrixXd& samples,
                       const ToyContinuousDist& dist, double threshold_std);

// Divergence between fixed-range histograms of the two samples, 64 bins
// per dimension, range taken from the dataset parameters. Out-of-range
// points land in the edge bins.
double histogram_divergence(AlphaParam alpha, const Eigen::MatrixXd& real,
                            const Eigen::MatrixXd& fake,
                            const ToyContinuousDist& range_source,
                            int bins_per_dim = 64);

}  // namespace alphagan

#endif  // ALPHAGAN_TRAIN_HPP_
