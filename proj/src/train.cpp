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

#include "alphagan/train.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "alphagan/arimoto.hpp"
#include "alphagan/value.hpp"

namespace alphagan {

namespace {

// Discriminators with rho < 0 blow up at the ends of (0, 1), so their
// outputs are projected inward; the mask zeroes gradients where the
// projection is active, which keeps finite differences of the value
// consistent with the analytic gradients.
constexpr double kTrainClamp = 1e-6;
// Floor for log arguments in the alpha = 1 value estimate.
constexpr double kLogFloor = 1e-12;

struct DiscEval {
  Eigen::ArrayXd d;     // discriminator output, projected when needed
  Eigen::ArrayXd mask;  // 1 where the projection is inactive
};

Eigen::ArrayXd sigmoid_array(const Eigen::ArrayXd& s) {
  return (s >= 0.0).select(1.0 / (1.0 + (-s).exp()),
                           s.exp() / (1.0 + s.exp()));
}

DiscEval eval_disc(AlphaParam alpha, const Eigen::ArrayXd& score) {
  DiscEval out;
  out.d = sigmoid_array(score);
  if (!alpha.is_infinite() && !alpha.is_one() && alpha.value() < 1.0) {
    out.mask = ((out.d > kTrainClamp) && (out.d < 1.0 - kTrainClamp))
                   .cast<double>();
    out.d = out.d.max(kTrainClamp).min(1.0 - kTrainClamp);
  } else {
    out.mask = Eigen::ArrayXd::Ones(score.size());
  }
  return out;
}

double batch_value(AlphaParam alpha, const DiscEval& real,
                   const DiscEval& fake) {
  if (alpha.is_infinite()) {
    return real.d.mean() - fake.d.mean() - 1.0;
  }
  if (alpha.is_one()) {
    return real.d.max(kLogFloor).log().mean() +
           (1.0 - fake.d).max(kLogFloor).log().mean();
  }
  const double a = alpha.value();
  const double c = a / (a - 1.0);
  const double rho = (a - 1.0) / a;
  return c * (real.d.pow(rho).mean() + (1.0 - fake.d).pow(rho).mean() - 2.0);
}

// Per-sample gradient of the batch value with respect to the raw
// discriminator scores. c * rho = 1 for every alpha, so one expression
// covers the whole family: rho is 0 at alpha = 1 and 1 at infinity.
Eigen::ArrayXd score_grad_real(AlphaParam alpha, const DiscEval& real) {
  const double n = static_cast<double>(real.d.size());
  if (alpha.is_one()) return (1.0 - real.d) / n;
  const double rho = alpha.is_infinite() ? 1.0
                                         : (alpha.value() - 1.0) / alpha.value();
  return real.mask * real.d.pow(rho) * (1.0 - real.d) / n;
}

Eigen::ArrayXd score_grad_fake(AlphaParam alpha, const DiscEval& fake) {
  const double m = static_cast<double>(fake.d.size());
  if (alpha.is_one()) return -fake.d / m;
  const double rho = alpha.is_infinite() ? 1.0
                                         : (alpha.value() - 1.0) / alpha.value();
  return -fake.mask * (1.0 - fake.d).pow(rho) * fake.d / m;
}

void require_player_shapes(const Eigen::MatrixXd& real_batch,
                           const Eigen::MatrixXd& latent_batch,
                           const MlpModel& gen, const MlpModel& disc) {
  if (real_batch.rows() < 1 || latent_batch.rows() < 1) {
    throw std::invalid_argument("batches must be non-empty");
  }
  if (latent_batch.cols() != gen.input_dim()) {
    throw DimensionMismatch("latent batch width does not match the generator");
  }
  if (real_batch.cols() != gen.output_dim() ||
      real_batch.cols() != disc.input_dim()) {
    throw DimensionMismatch("sample width does not match the players");
  }
  if (disc.output_dim() != 1 || disc.output_map != OutputMap::sigmoid) {
    throw std::invalid_argument(
        "discriminator must emit one sigmoid-squashed score");
  }
}

bool all_finite(const MlpGrads& grads) {
  for (const auto& w : grads.weights) {
    if (!w.allFinite()) return false;
  }
  for (const auto& b : grads.biases) {
    if (!b.allFinite()) return false;
  }
  return true;
}

Eigen::MatrixXd latent_batch_of(int rows, int cols, Rng& rng) {
  Eigen::MatrixXd z(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) z(r, c) = rng.gaussian();
  }
  return z;
}

void sgd_step(MlpModel& model, MlpGrads& velocity, const MlpGrads& grads,
              double lr, double momentum, double sign) {
  for (std::size_t l = 0; l < model.weights.size(); ++l) {
    velocity.weights[l] = momentum * velocity.weights[l] + grads.weights[l];
    velocity.biases[l] = momentum * velocity.biases[l] + grads.biases[l];
    model.weights[l] += sign * lr * velocity.weights[l];
    model.biases[l] += sign * lr * velocity.biases[l];
  }
}

}  // namespace

Diverged::Diverged(int at_step)
    : std::runtime_error("training diverged at step " +
                         std::to_string(at_step)),
      step(at_step) {}

double value_alpha_batches(AlphaParam alpha, const Eigen::MatrixXd& real_batch,
                           const Eigen::MatrixXd& latent_batch,
                           const MlpModel& gen, const MlpModel& disc) {
  require_player_shapes(real_batch, latent_batch, gen, disc);
  const ForwardPass gen_pass = forward_batch(gen, latent_batch);
  const Eigen::MatrixXd fake = apply_output_map(gen, gen_pass.score());
  const DiscEval real =
      eval_disc(alpha, forward_batch(disc, real_batch).score().col(0).array());
  const DiscEval faked =
      eval_disc(alpha, forward_batch(disc, fake).score().col(0).array());
  return batch_value(alpha, real, faked);
}

ValueGrads grads_value_alpha(AlphaParam alpha,
                             const Eigen::MatrixXd& real_batch,
                             const Eigen::MatrixXd& latent_batch,
                             const MlpModel& gen, const MlpModel& disc) {
  require_player_shapes(real_batch, latent_batch, gen, disc);

  const ForwardPass gen_pass = forward_batch(gen, latent_batch);
  const Eigen::MatrixXd fake = apply_output_map(gen, gen_pass.score());
  const ForwardPass real_pass = forward_batch(disc, real_batch);
  const ForwardPass fake_pass = forward_batch(disc, fake);

  const DiscEval real = eval_disc(alpha, real_pass.score().col(0).array());
  const DiscEval faked = eval_disc(alpha, fake_pass.score().col(0).array());

  ValueGrads out;
  out.value = batch_value(alpha, real, faked);

  const Eigen::MatrixXd gr = score_grad_real(alpha, real).matrix();
  const Eigen::MatrixXd gf = score_grad_fake(alpha, faked).matrix();
  out.disc = backward_batch(disc, real_pass, gr);
  accumulate(out.disc, backward_batch(disc, fake_pass, gf));

  // The generator feels the value only through the fake scores.
  Eigen::MatrixXd d_fake = input_gradient(disc, fake_pass, gf);
  if (gen.output_map == OutputMap::sigmoid) {
    d_fake = (d_fake.array() * fake.array() * (1.0 - fake.array())).matrix();
  }
  out.gen = backward_batch(gen, gen_pass, d_fake);

  if (!std::isfinite(out.value) || !all_finite(out.disc) ||
      !all_finite(out.gen)) {
    throw NonFiniteGradient("value gradient has non-finite entries");
  }
  return out;
}

namespace {

void require_train_config(const TrainConfig& config) {
  validate(config.dataset);
  if (config.latent_dim < 1) throw std::invalid_argument("latent_dim < 1");
  if (config.batch_size < 1) throw std::invalid_argument("batch_size < 1");
  if (config.disc_steps_per_gen_step < 1) {
    throw std::invalid_argument("disc_steps_per_gen_step < 1");
  }
  if (config.total_gen_steps < 0) {
    throw std::invalid_argument("total_gen_steps < 0");
  }
  if (config.eval_every < 1) throw std::invalid_argument("eval_every < 1");
  if (config.eval_samples < 1) throw std::invalid_argument("eval_samples < 1");
  if (!(config.lr_disc > 0.0) || !std::isfinite(config.lr_disc) ||
      !(config.lr_gen > 0.0) || !std::isfinite(config.lr_gen)) {
    throw std::invalid_argument("learning rates must be positive and finite");
  }
  if (!(config.momentum >= 0.0) || config.momentum >= 1.0) {
    throw std::invalid_argument("momentum must lie in [0, 1)");
  }
  if (!(config.coverage_threshold_std > 0.0)) {
    throw std::invalid_argument("coverage_threshold_std must be positive");
  }
}

EvalRecord evaluate_players(const TrainConfig& config, const MlpModel& gen,
                            const MlpModel& disc, int step) {
  // A fresh stream per evaluation point, derived from the seed and the
  // step, so evaluation never perturbs the training stream.
  Rng rng(config.seed +
          0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(step));
  const Eigen::MatrixXd real = sample(config.dataset, config.eval_samples, rng);
  const Eigen::MatrixXd z =
      latent_batch_of(config.eval_samples, config.latent_dim, rng);
  const Eigen::MatrixXd fake =
      apply_output_map(gen, forward_batch(gen, z).score());

  EvalRecord record;
  record.step = step;
  record.value_estimate = value_alpha_mc(config.alpha, real, fake,
                                         NeuralD{&disc});
  record.divergence_estimate =
      histogram_divergence(config.alpha, real, fake, config.dataset);
  for (int c = 0; c < fake.cols(); ++c) {
    const double mean = fake.col(c).mean();
    const double var = (fake.col(c).array() - mean).square().mean();
    record.sample_mean.push_back(mean);
    record.sample_std.push_back(std::sqrt(var));
  }
  record.modes_covered =
      count_covered_modes(fake, mode_structure(config.dataset, true),
                          config.coverage_threshold_std);
  return record;
}

}  // namespace

TrainReport train(const TrainConfig& config) {
  require_train_config(config);
  const auto started = std::chrono::steady_clock::now();

  const int d = dim(config.dataset);
  std::vector<int> gen_dims = {config.latent_dim};
  gen_dims.insert(gen_dims.end(), config.gen_hidden.begin(),
                  config.gen_hidden.end());
  gen_dims.push_back(d);
  std::vector<int> disc_dims = {d};
  disc_dims.insert(disc_dims.end(), config.disc_hidden.begin(),
                   config.disc_hidden.end());
  disc_dims.push_back(1);

  Rng rng(config.seed);
  MlpModel gen = make_mlp(gen_dims, OutputMap::identity, rng);
  MlpModel disc = make_mlp(disc_dims, OutputMap::sigmoid, rng);
  MlpGrads gen_velocity = zero_grads(gen);
  MlpGrads disc_velocity = zero_grads(disc);

  TrainReport report;
  report.config = config;

  for (int step = 1; step <= config.total_gen_steps; ++step) {
    Eigen::MatrixXd real;
    try {
      for (int k = 0; k < config.disc_steps_per_gen_step; ++k) {
        real = sample(config.dataset, config.batch_size, rng);
        const Eigen::MatrixXd z =
            latent_batch_of(config.batch_size, config.latent_dim, rng);
        const ValueGrads vg =
            grads_value_alpha(config.alpha, real, z, gen, disc);
        sgd_step(disc, disc_velocity, vg.disc, config.lr_disc, config.momentum,
                 +1.0);
      }
      const Eigen::MatrixXd z =
          latent_batch_of(config.batch_size, config.latent_dim, rng);
      const ValueGrads vg = grads_value_alpha(config.alpha, real, z, gen, disc);
      sgd_step(gen, gen_velocity, vg.gen, config.lr_gen, config.momentum,
               -1.0);
    } catch (const NonFiniteGradient&) {
      throw Diverged(step);
    }

    if (step % config.eval_every == 0 || step == config.total_gen_steps) {
      report.records.push_back(evaluate_players(config, gen, disc, step));
    }
  }

  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

ModeSet mode_structure(const ToyContinuousDist& dist,
                       bool gaussian_as_single_mode) {
  ModeSet modes;
  if (const auto* g = std::get_if<Gaussian1d>(&dist)) {
    if (!gaussian_as_single_mode) {
      throw NotApplicable("a plain gaussian has no mode structure to score");
    }
    modes.centers = Eigen::MatrixXd::Constant(1, 1, g->mean);
    modes.stds = Eigen::VectorXd::Constant(1, g->stddev);
    return modes;
  }
  if (const auto* m = std::get_if<GaussianMixture1d>(&dist)) {
    const int k = static_cast<int>(m->components.size());
    modes.centers.resize(k, 1);
    modes.stds.resize(k);
    for (int i = 0; i < k; ++i) {
      modes.centers(i, 0) = m->components[i].mean;
      modes.stds(i) = m->components[i].stddev;
    }
    return modes;
  }
  const auto& ring = std::get<Ring2d>(dist);
  modes.centers.resize(ring.n_modes, 2);
  modes.stds = Eigen::VectorXd::Constant(ring.n_modes, ring.mode_std);
  for (int i = 0; i < ring.n_modes; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / ring.n_modes;
    modes.centers(i, 0) = ring.radius * std::cos(angle);
    modes.centers(i, 1) = ring.radius * std::sin(angle);
  }
  return modes;
}

int count_covered_modes(const Eigen::MatrixXd& samples, const ModeSet& modes,
                        double threshold_std) {
  if (samples.rows() == 0) return 0;
  if (samples.cols() != modes.centers.cols()) {
    throw DimensionMismatch("samples and mode centers disagree on dimension");
  }
  const double needed =
      std::max(20.0, 0.01 * static_cast<double>(samples.rows()));
  int covered = 0;
  for (int i = 0; i < modes.centers.rows(); ++i) {
    const double radius = threshold_std * modes.stds(i);
    const auto dist =
        (samples.rowwise() - modes.centers.row(i)).rowwise().norm();
    const double close = (dist.array() <= radius).cast<double>().sum();
    if (close >= needed) ++covered;
  }
  return covered;
}

int eval_mode_coverage(const Eigen::MatrixXd& samples,
                       const ToyContinuousDist& dist, double threshold_std) {
  return count_covered_modes(samples, mode_structure(dist, false),
                             threshold_std);
}

namespace {

void histogram_range(const ToyContinuousDist& dist, int dim_index, double* lo,
                     double* hi) {
  if (const auto* g = std::get_if<Gaussian1d>(&dist)) {
    *lo = g->mean - 6.0 * g->stddev;
    *hi = g->mean + 6.0 * g->stddev;
    return;
  }
  if (const auto* m = std::get_if<GaussianMixture1d>(&dist)) {
    *lo = std::numeric_limits<double>::infinity();
    *hi = -std::numeric_limits<double>::infinity();
    for (const auto& comp : m->components) {
      *lo = std::min(*lo, comp.mean - 6.0 * comp.stddev);
      *hi = std::max(*hi, comp.mean + 6.0 * comp.stddev);
    }
    return;
  }
  const auto& ring = std::get<Ring2d>(dist);
  (void)dim_index;
  *hi = ring.radius + 6.0 * ring.mode_std;
  *lo = -*hi;
}

}  // namespace

double histogram_divergence(AlphaParam alpha, const Eigen::MatrixXd& real,
                            const Eigen::MatrixXd& fake,
                            const ToyContinuousDist& range_source,
                            int bins_per_dim) {
  validate(range_source);
  if (bins_per_dim < 2) throw std::invalid_argument("bins_per_dim < 2");
  const int d = dim(range_source);
  if (real.cols() != d || fake.cols() != d) {
    throw DimensionMismatch("samples do not match the histogram dimension");
  }
  if (real.rows() < 1 || fake.rows() < 1) {
    throw std::invalid_argument("histogram needs at least one sample per side");
  }

  int total_bins = 1;
  for (int k = 0; k < d; ++k) total_bins *= bins_per_dim;

  const auto flat_index = [&](const Eigen::MatrixXd& x, int row) {
    int flat = 0;
    int stride = 1;
    for (int k = 0; k < d; ++k) {
      double lo = 0.0;
      double hi = 0.0;
      histogram_range(range_source, k, &lo, &hi);
      const double width = (hi - lo) / bins_per_dim;
      int bin = static_cast<int>(std::floor((x(row, k) - lo) / width));
      bin = std::clamp(bin, 0, bins_per_dim - 1);
      flat += bin * stride;
      stride *= bins_per_dim;
    }
    return flat;
  };

  Eigen::ArrayXd real_counts = Eigen::ArrayXd::Zero(total_bins);
  Eigen::ArrayXd fake_counts = Eigen::ArrayXd::Zero(total_bins);
  for (int r = 0; r < real.rows(); ++r) real_counts(flat_index(real, r)) += 1.0;
  for (int r = 0; r < fake.rows(); ++r) fake_counts(flat_index(fake, r)) += 1.0;

  return arimoto_divergence(alpha, make_discrete(real_counts),
                            make_discrete(fake_counts))
      .value;
}

}  // namespace alphagan
