// Copyright 2026 The dronecell Authors
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

#include "dronecell/scenario_file.hpp"

#include <fstream>

#include "dronecell/errors.hpp"

namespace dronecell::io {
namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(where + ": missing field '" + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get_as(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key, const std::string& where) {
  return get_as<T>(require(j, key, where), where + "." + key);
}

template <typename T>
T field_or(const json& j, const char* key, T fallback, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return get_as<T>(j.at(key), where + "." + key);
}

Interval interval(const json& j, const std::string& where) {
  const auto pair = get_as<std::vector<double>>(j, where);
  if (pair.size() != 2) throw InputError(where + ": expected [min, max]");
  return {pair[0], pair[1]};
}

json interval_json(const Interval& iv) { return json::array({iv.min, iv.max}); }

Norm parse_norm(const std::string& s) {
  if (s == "L1") return Norm::L1;
  if (s == "L2") return Norm::L2;
  throw InputError("weights.norm: expected \"L1\" or \"L2\", got \"" + s + "\"");
}

ObjectiveWeights weights_from_json(const json& w, ObjectiveWeights base) {
  base.w1 = field_or(w, "w1", base.w1, "weights");
  base.w2 = field_or(w, "w2", base.w2, "weights");
  base.w3 = field_or(w, "w3", base.w3, "weights");
  base.w4 = field_or(w, "w4", base.w4, "weights");
  base.norm = parse_norm(field_or<std::string>(w, "norm", base.norm == Norm::L1 ? "L1" : "L2",
                                               "weights"));
  return base;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace

json environment_to_json(const Environment& env) {
  return {{"name", env.name},
          {"a", env.plos_a},
          {"b", env.plos_b},
          {"eta_los_db", env.eta_los},
          {"eta_nlos_db", env.eta_nlos}};
}

Environment environment_from_json(const json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (auto preset = find_environment_preset(name)) return *preset;
    throw InputError("environment: unknown preset \"" + name + "\"");
  }
  const auto name = field<std::string>(j, "name", "environment");
  Environment env;
  if (auto preset = find_environment_preset(name)) {
    env = *preset;
  } else if (!(j.contains("a") && j.contains("b") && j.contains("eta_los_db") &&
               j.contains("eta_nlos_db"))) {
    throw InputError("environment: \"" + name +
                     "\" is not a preset and lacks explicit a/b/eta values");
  }
  env.name = name;
  env.plos_a = field_or(j, "a", env.plos_a, "environment");
  env.plos_b = field_or(j, "b", env.plos_b, "environment");
  env.eta_los = field_or(j, "eta_los_db", env.eta_los, "environment");
  env.eta_nlos = field_or(j, "eta_nlos_db", env.eta_nlos, "environment");
  return env;
}

json scenario_to_json(const Scenario& s) {
  json users = json::array();
  for (const auto& u : s.users) {
    users.push_back({{"id", u.id},
                     {"x", u.position.x()},
                     {"y", u.position.y()},
                     {"mvno", u.mvno_id},
                     {"q_db", u.qos_max_path_loss},
                     {"lambda", u.energy_cost},
                     {"kappa", u.content_request},
                     {"r", u.resource_demand}});
  }
  std::vector<int> targets(s.targets.data(), s.targets.data() + s.targets.size());
  return {
      {"meta", {{"version", kSchemaVersion}}},
      {"environment", environment_to_json(s.environment)},
      {"channel",
       {{"frequency_hz", s.channel.carrier_frequency},
        {"default_max_path_loss_db", s.channel.max_path_loss}}},
      {"field", {{"x", interval_json(s.field_x)}, {"y", interval_json(s.field_y)}}},
      {"region",
       {{"x", interval_json(s.region.x)},
        {"y", interval_json(s.region.y)},
        {"h", interval_json(s.region.h)}}},
      {"tenancy", {{"J", s.num_mvnos}, {"targets", targets}}},
      {"weights",
       {{"w1", s.weights.w1},
        {"w2", s.weights.w2},
        {"w3", s.weights.w3},
        {"w4", s.weights.w4},
        {"norm", s.weights.norm == Norm::L1 ? "L1" : "L2"}}},
      {"capacity", s.capacity},
      {"users", users},
  };
}

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw InputError("scenario: expected a JSON object");
  const auto version = field<std::string>(require(j, "meta", "scenario"), "version", "meta");
  if (version != kSchemaVersion) {
    throw InputError("meta.version: unsupported schema version \"" + version + "\"");
  }

  Scenario s;
  s.environment = environment_from_json(require(j, "environment", "scenario"));

  const json& channel = require(j, "channel", "scenario");
  s.channel.carrier_frequency = field_or(channel, "frequency_hz", s.channel.carrier_frequency,
                                         "channel");
  s.channel.max_path_loss = field_or(channel, "default_max_path_loss_db",
                                     s.channel.max_path_loss, "channel");

  const json& region = require(j, "region", "scenario");
  s.region.x = interval(require(region, "x", "region"), "region.x");
  s.region.y = interval(require(region, "y", "region"), "region.y");
  s.region.h = interval(require(region, "h", "region"), "region.h");
  if (j.contains("field")) {
    const json& f = j.at("field");
    s.field_x = interval(require(f, "x", "field"), "field.x");
    s.field_y = interval(require(f, "y", "field"), "field.y");
  } else {
    s.field_x = s.region.x;
    s.field_y = s.region.y;
  }

  const json& tenancy = require(j, "tenancy", "scenario");
  s.num_mvnos = field<int>(tenancy, "J", "tenancy");
  const auto targets = field<std::vector<int>>(tenancy, "targets", "tenancy");
  s.targets = Eigen::Map<const Eigen::VectorXi>(targets.data(),
                                                static_cast<Eigen::Index>(targets.size()));

  s.weights = weights_from_json(require(j, "weights", "scenario"), ObjectiveWeights{});
  s.capacity = field<double>(j, "capacity", "scenario");

  const json& users = require(j, "users", "scenario");
  if (!users.is_array()) throw InputError("users: expected an array");
  for (std::size_t i = 0; i < users.size(); ++i) {
    const json& ju = users[i];
    const std::string where = "users[" + std::to_string(i) + "]";
    User u;
    u.id = field<int>(ju, "id", where);
    u.position = {field<double>(ju, "x", where), field<double>(ju, "y", where)};
    u.mvno_id = field<int>(ju, "mvno", where);
    u.qos_max_path_loss = field_or(ju, "q_db", s.channel.max_path_loss, where);
    u.energy_cost = field_or(ju, "lambda", 0.0, where);
    u.content_request = field_or(ju, "kappa", false, where);
    u.resource_demand = field_or(ju, "r", 1.0, where);
    s.users.push_back(u);
  }
  return s;
}

Scenario read_scenario_file(const std::filesystem::path& path) {
  return scenario_from_json(read_json(path));
}

void write_scenario_file(const std::filesystem::path& path, const Scenario& scenario) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << scenario_to_json(scenario).dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw InputError("config: expected a JSON object");
  ExperimentConfig c;
  c.n_runs = field_or(j, "n_runs", c.n_runs, "config");
  c.n_users = field_or(j, "n_users", c.n_users, "config");
  c.num_mvnos = field_or(j, "num_mvnos", c.num_mvnos, "config");
  c.seed = field_or(j, "seed", c.seed, "config");
  c.field_size = field_or(j, "field_size_m", c.field_size, "config");
  c.workers = field_or(j, "workers", c.workers, "config");
  c.profile.qos_db = field_or(j, "max_path_loss_db", c.profile.qos_db, "config");
  c.profile.channel.max_path_loss = c.profile.qos_db;
  c.profile.channel.carrier_frequency =
      field_or(j, "carrier_frequency_hz", c.profile.channel.carrier_frequency, "config");
  if (j.contains("h_bounds")) c.profile.h_bounds = interval(j.at("h_bounds"), "config.h_bounds");
  if (j.contains("weights")) c.profile.weights = weights_from_json(j.at("weights"), c.profile.weights);

  if (j.contains("environments")) {
    const json& envs = j.at("environments");
    if (!envs.is_array()) throw InputError("config.environments: expected an array");
    c.environments.clear();
    for (const auto& e : envs) c.environments.push_back(environment_from_json(e));
  }
  if (j.contains("policies")) {
    c.policies.clear();
    for (const auto& name : get_as<std::vector<std::string>>(j.at("policies"), "config.policies")) {
      const auto policy = parse_policy(name);
      if (!policy) throw InputError("config.policies: unknown policy \"" + name + "\"");
      c.policies.push_back(*policy);
    }
  }
  if (const auto problems = config_problems(c); !problems.empty()) {
    throw InputError("config: " + problems.front());
  }
  return c;
}

ExperimentConfig read_config_file(const std::filesystem::path& path) {
  return config_from_json(read_json(path));
}

}  // namespace dronecell::io
