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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alphagan/checks.hpp"
#include "alphagan/convergence.hpp"
#include "alphagan/report_io.hpp"
#include "alphagan/train.hpp"

namespace {

using alphagan::AlphaParam;

std::vector<AlphaParam> parse_alpha_list(const std::string& text) {
  std::vector<AlphaParam> alphas;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    const auto begin = item.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto end = item.find_last_not_of(" \t");
    alphas.push_back(AlphaParam::parse(item.substr(begin, end - begin + 1)));
  }
  if (alphas.empty()) {
    throw CLI::ValidationError("--alphas", "needs at least one order");
  }
  return alphas;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write to " + path);
  return out;
}

int cmd_sweep(const std::string& alphas_text, int theta_steps,
              const std::string& out_path) {
  const auto rows =
      alphagan::sweep_divergence(parse_alpha_list(alphas_text), theta_steps);
  if (out_path.empty()) {
    alphagan::write_sweep_csv(std::cout, rows);
  } else {
    auto out = open_out(out_path);
    alphagan::write_sweep_csv(out, rows);
    if (!out.good()) throw std::runtime_error("write failed: " + out_path);
  }
  return 0;
}

int cmd_check(const std::string& name, int trials, std::uint64_t seed,
              const std::string& out_path) {
  const alphagan::CheckResult result = alphagan::run_check(name, trials, seed);
  const std::string text = alphagan::check_to_json(result).dump(2) + "\n";
  std::cout << text;
  if (!out_path.empty()) {
    auto out = open_out(out_path);
    out << text;
  }
  return result.pass ? 0 : 1;
}

alphagan::DistSequence make_sequence(const std::string& kind, int n_max,
                                     alphagan::DiscreteDistribution* target) {
  alphagan::DistSequence seq;
  seq.length = n_max;
  *target = alphagan::bernoulli(0.5);
  if (kind == "drift") {
    seq.kind = alphagan::BernoulliDrift{1.0, 0.5};
  } else if (kind == "constant") {
    // Flat drift pinned off the target.
    seq.kind = alphagan::BernoulliDrift{0.9, 0.9};
  } else if (kind == "shrinking") {
    seq.kind = alphagan::ShrinkingMixture{alphagan::bernoulli(0.5),
                                          alphagan::bernoulli(0.9)};
  } else {
    throw CLI::ValidationError("--sequence",
                               "expected drift, constant, or shrinking");
  }
  return seq;
}

int cmd_convergence(const std::string& kind, int n_max,
                    const std::string& alphas_text, double tol,
                    const std::string& out_path) {
  const std::vector<AlphaParam> alphas = parse_alpha_list(alphas_text);
  alphagan::DiscreteDistribution target = alphagan::bernoulli(0.5);
  const alphagan::DistSequence seq = make_sequence(kind, n_max, &target);

  const Eigen::MatrixXd trace =
      alphagan::divergence_trace(seq, target, alphas);
  if (!out_path.empty()) {
    auto out = open_out(out_path);
    alphagan::write_trace_csv(out, trace, alphas);
    if (!out.good()) throw std::runtime_error("write failed: " + out_path);
  }

  nlohmann::ordered_json verdicts;
  verdicts["sequence"] = kind;
  verdicts["n_max"] = n_max;
  verdicts["tol"] = tol;
  verdicts["alphas"] = nlohmann::ordered_json::array();
  for (const AlphaParam alpha : alphas) verdicts["alphas"].push_back(alpha.str());
  verdicts["pairs"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
      const alphagan::Verdict verdict = alphagan::equivalence_check(
          seq, target, alphas[i], alphas[j], tol);
      verdicts["pairs"].push_back({{"alpha1", alphas[i].str()},
                                   {"alpha2", alphas[j].str()},
                                   {"verdict", alphagan::to_string(verdict)}});
    }
  }
  std::cout << verdicts.dump(2) << "\n";
  return 0;
}

int cmd_train(const std::string& config_path, const std::string& out_path) {
  const alphagan::TrainConfig config =
      alphagan::parse_train_config_file(config_path);
  alphagan::TrainReport report;
  try {
    report = alphagan::train(config);
  } catch (const alphagan::Diverged& err) {
    std::cerr << err.what() << "\n";
    return 3;
  }
  const std::string text = alphagan::report_to_json(report).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    auto out = open_out(out_path);
    out << text;
    if (!out.good()) throw std::runtime_error("write failed: " + out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tunable-order GAN toolkit: divergence sweeps, theorem checks, "
               "convergence experiments, and toy training runs"};
  app.require_subcommand(1);

  std::string alphas_text = "0.2,0.5,1,2,5,100,inf";
  int theta_steps = 201;
  std::string out_path;
  auto* sweep = app.add_subcommand(
      "sweep-divergence", "Divergence of Ber(theta) from a fair coin");
  sweep->add_option("--alphas", alphas_text, "Comma-separated orders");
  sweep->add_option("--theta-steps", theta_steps, "Grid points on [0, 1]")
      ->check(CLI::Range(2, 1000000));
  sweep->add_option("--out", out_path, "CSV path (default: stdout)");

  std::string check_name;
  int trials = 1000;
  std::uint64_t seed = 1;
  std::string check_out;
  auto* check = app.add_subcommand("check", "Randomized theorem checks");
  check->add_option("name", check_name, "One of: equilibrium, variational, "
                                        "bounds, limits, metric, lin")
      ->required();
  check->add_option("--trials", trials, "Random instances to draw")
      ->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "Stream seed");
  check->add_option("--out", check_out, "Also write the verdict JSON here");

  std::string seq_kind = "drift";
  int n_max = 10000;
  std::string conv_alphas = "0.5,1,2,inf";
  double tol = 1e-3;
  std::string conv_out;
  auto* conv = app.add_subcommand(
      "convergence", "Divergence traces along a distribution sequence");
  conv->add_option("--sequence", seq_kind, "drift, constant, or shrinking");
  conv->add_option("--n-max", n_max, "Sequence length")
      ->check(CLI::Range(10, 100000000));
  conv->add_option("--alphas", conv_alphas, "Comma-separated orders");
  conv->add_option("--tol", tol, "Convergence threshold on the trace tail")
      ->check(CLI::PositiveNumber);
  conv->add_option("--out", conv_out, "CSV trace path");

  std::string config_path;
  std::string train_out;
  auto* train = app.add_subcommand("train", "Toy adversarial training run");
  train->add_option("--config", config_path, "Key-value config file")
      ->required();
  train->add_option("--out", train_out, "Report JSON path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) return cmd_sweep(alphas_text, theta_steps, out_path);
    if (check->parsed()) return cmd_check(check_name, trials, seed, check_out);
    if (conv->parsed()) {
      return cmd_convergence(seq_kind, n_max, conv_alphas, tol, conv_out);
    }
    if (train->parsed()) return cmd_train(config_path, train_out);
  } catch (const alphagan::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
