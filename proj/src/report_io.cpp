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

#include "alphagan/report_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace alphagan {

using nlohmann::ordered_json;

nlohmann::ordered_json dataset_to_json(const ToyContinuousDist& dist) {
  ordered_json out;
  if (const auto* g = std::get_if<Gaussian1d>(&dist)) {
    out["kind"] = "gaussian1d";
    out["mean"] = g->mean;
    out["std"] = g->stddev;
    return out;
  }
  if (const auto* m = std::get_if<GaussianMixture1d>(&dist)) {
    out["kind"] = "mixture1d";
    out["components"] = ordered_json::array();
    for (const auto& comp : m->components) {
      out["components"].push_back({{"weight", comp.weight},
                                   {"mean", comp.mean},
                                   {"std", comp.stddev}});
    }
    return out;
  }
  const auto& ring = std::get<Ring2d>(dist);
  out["kind"] = "ring2d";
  out["n_modes"] = ring.n_modes;
  out["radius"] = ring.radius;
  out["mode_std"] = ring.mode_std;
  return out;
}

nlohmann::ordered_json report_to_json(const TrainReport& report) {
  const TrainConfig& config = report.config;
  ordered_json cfg;
  cfg["alpha"] = config.alpha.str();
  cfg["dataset"] = dataset_to_json(config.dataset);
  cfg["latent_dim"] = config.latent_dim;
  cfg["batch_size"] = config.batch_size;
  cfg["disc_steps_per_gen_step"] = config.disc_steps_per_gen_step;
  cfg["lr_disc"] = config.lr_disc;
  cfg["lr_gen"] = config.lr_gen;
  cfg["momentum"] = config.momentum;
  cfg["total_gen_steps"] = config.total_gen_steps;
  cfg["eval_every"] = config.eval_every;
  cfg["eval_samples"] = config.eval_samples;
  cfg["coverage_threshold_std"] = config.coverage_threshold_std;
  cfg["gen_hidden"] = config.gen_hidden;
  cfg["disc_hidden"] = config.disc_hidden;

  ordered_json out;
  out["config"] = std::move(cfg);
  out["seed"] = config.seed;
  out["records"] = ordered_json::array();
  for (const EvalRecord& r : report.records) {
    ordered_json rec;
    rec["step"] = r.step;
    rec["value_estimate"] = r.value_estimate;
    rec["divergence_estimate"] = r.divergence_estimate;
    rec["sample_mean"] = r.sample_mean;
    rec["sample_std"] = r.sample_std;
    rec["modes_covered"] = r.modes_covered;
    out["records"].push_back(std::move(rec));
  }
  return out;
}

nlohmann::ordered_json check_to_json(const CheckResult& result) {
  ordered_json out;
  out["check"] = result.check;
  out["trials"] = result.trials;
  out["seed"] = result.seed;
  out["tolerance"] = result.tolerance;
  out["worst_error"] = result.worst_error;
  out["pass"] = result.pass;
  out["subchecks"] = ordered_json::array();
  for (const SubcheckResult& sub : result.subchecks) {
    ordered_json s;
    s["name"] = sub.name;
    s["worst_error"] = sub.worst_error;
    s["tolerance"] = sub.tolerance;
    s["pass"] = sub.pass;
    out["subchecks"].push_back(std::move(s));
  }
  return out;
}

namespace {

std::string format_double(const char* fmt, double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), fmt, x);
  return buffer;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "alpha,theta,divergence\n";
  for (const SweepRow& row : rows) {
    out << row.alpha.str() << ',' << format_double("%.10g", row.theta) << ','
        << format_double("%.17g", row.divergence) << '\n';
  }
}

void write_trace_csv(std::ostream& out, const Eigen::MatrixXd& trace,
                     const std::vector<AlphaParam>& alphas) {
  if (trace.cols() != static_cast<Eigen::Index>(alphas.size())) {
    throw std::invalid_argument("trace columns must match the alpha list");
  }
  out << "n,alpha,divergence\n";
  for (Eigen::Index n = 0; n < trace.rows(); ++n) {
    for (Eigen::Index j = 0; j < trace.cols(); ++j) {
      out << (n + 1) << ',' << alphas[j].str() << ','
          << format_double("%.17g", trace(n, j)) << '\n';
    }
  }
}

ConfigError::ConfigError(std::string bad_field, const std::string& message)
    : std::runtime_error(message), field(std::move(bad_field)) {}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double_field(const std::string& key, const std::string& text) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || text.empty()) {
    throw ConfigError(key, "field " + key + ": not a number: '" + text + "'");
  }
  return value;
}

long long parse_int_field(const std::string& key, const std::string& text) {
  char* end = nullptr;
  const long long value = std::strtoll(text.c_str(), &end, 10);
  if (end != text.c_str() + text.size() || text.empty()) {
    throw ConfigError(key, "field " + key + ": not an integer: '" + text + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, sep)) parts.push_back(trim(item));
  return parts;
}

std::vector<int> parse_int_list(const std::string& key,
                                const std::string& text) {
  std::vector<int> values;
  for (const std::string& part : split(text, ',')) {
    values.push_back(static_cast<int>(parse_int_field(key, part)));
  }
  return values;
}

// Raw key-value view of the file, with consumption tracking so leftover
// keys can be reported.
struct ConfigMap {
  std::map<std::string, std::pair<std::string, int>> entries;
  std::map<std::string, bool> consumed;

  bool has(const std::string& key) const { return entries.count(key) > 0; }

  std::string take(const std::string& key) {
    consumed[key] = true;
    return entries.at(key).first;
  }
};

ConfigMap read_config_map(std::istream& in) {
  ConfigMap map;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("", "line " + std::to_string(line_number) +
                                ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("", "line " + std::to_string(line_number) +
                                ": empty key");
    }
    if (map.entries.count(key) > 0) {
      throw ConfigError(key, "field " + key + ": duplicated at line " +
                                 std::to_string(line_number));
    }
    map.entries[key] = {value, line_number};
  }
  return map;
}

ToyContinuousDist parse_dataset(ConfigMap& map) {
  const std::string kind = map.take("dataset");
  if (kind == "gaussian1d") {
    Gaussian1d g{0.0, 1.0};
    if (map.has("mean")) g.mean = parse_double_field("mean", map.take("mean"));
    if (map.has("std")) g.stddev = parse_double_field("std", map.take("std"));
    return g;
  }
  if (kind == "mixture1d") {
    if (!map.has("components")) {
      throw ConfigError("components",
                        "field components: required for dataset mixture1d");
    }
    GaussianMixture1d mixture;
    for (const std::string& part : split(map.take("components"), ',')) {
      const std::vector<std::string> triple = split(part, ':');
      if (triple.size() != 3) {
        throw ConfigError("components",
                          "field components: expected weight:mean:std, got '" +
                              part + "'");
      }
      mixture.components.push_back(
          {parse_double_field("components", triple[0]),
           parse_double_field("components", triple[1]),
           parse_double_field("components", triple[2])});
    }
    return mixture;
  }
  if (kind == "ring2d") {
    Ring2d ring;
    if (map.has("n_modes")) {
      ring.n_modes =
          static_cast<int>(parse_int_field("n_modes", map.take("n_modes")));
    }
    if (map.has("radius")) {
      ring.radius = parse_double_field("radius", map.take("radius"));
    }
    if (map.has("mode_std")) {
      ring.mode_std = parse_double_field("mode_std", map.take("mode_std"));
    }
    return ring;
  }
  throw ConfigError("dataset", "field dataset: unknown kind '" + kind + "'");
}

}  // namespace

TrainConfig parse_train_config(std::istream& in) {
  ConfigMap map = read_config_map(in);
  if (!map.has("alpha")) {
    throw ConfigError("alpha", "field alpha: required but missing");
  }
  if (!map.has("dataset")) {
    throw ConfigError("dataset", "field dataset: required but missing");
  }

  TrainConfig config;
  try {
    config.alpha = AlphaParam::parse(map.take("alpha"));
  } catch (const std::invalid_argument& err) {
    throw ConfigError("alpha", std::string("field alpha: ") + err.what());
  }
  config.dataset = parse_dataset(map);

  const auto take_int = [&map](const std::string& key, int fallback) {
    return map.has(key)
               ? static_cast<int>(parse_int_field(key, map.take(key)))
               : fallback;
  };
  const auto take_double = [&map](const std::string& key, double fallback) {
    return map.has(key) ? parse_double_field(key, map.take(key)) : fallback;
  };

  config.latent_dim = take_int("latent_dim", config.latent_dim);
  config.batch_size = take_int("batch_size", config.batch_size);
  config.disc_steps_per_gen_step =
      take_int("disc_steps_per_gen_step", config.disc_steps_per_gen_step);
  config.lr_disc = take_double("lr_disc", config.lr_disc);
  config.lr_gen = take_double("lr_gen", config.lr_gen);
  config.momentum = take_double("momentum", config.momentum);
  config.total_gen_steps = take_int("total_gen_steps", config.total_gen_steps);
  if (map.has("seed")) {
    config.seed = static_cast<std::uint64_t>(
        parse_int_field("seed", map.take("seed")));
  }
  config.eval_every = take_int("eval_every", config.eval_every);
  config.eval_samples = take_int("eval_samples", config.eval_samples);
  config.coverage_threshold_std =
      take_double("coverage_threshold_std", config.coverage_threshold_std);
  if (map.has("gen_hidden")) {
    config.gen_hidden = parse_int_list("gen_hidden", map.take("gen_hidden"));
  }
  if (map.has("disc_hidden")) {
    config.disc_hidden = parse_int_list("disc_hidden", map.take("disc_hidden"));
  }

  for (const auto& [key, value] : map.entries) {
    if (!map.consumed[key]) {
      throw ConfigError(key, "field " + key + ": unknown or inapplicable (line " +
                                 std::to_string(value.second) + ")");
    }
  }
  return config;
}

TrainConfig parse_train_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("", "cannot open config file: " + path);
  }
  return parse_train_config(in);
}

}  // namespace alphagan
