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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dronecell/experiment.hpp"
#include "dronecell/report.hpp"
#include "dronecell/scenario_file.hpp"

using namespace dronecell;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("dronecell_cli_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path operator/(const std::string& name) const { return path / name; }
  static inline int counter = 0;
};

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + DRONECELL_CLI + "\" " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

const std::string kCase24 = DRONECELL_DATA_DIR "/case24.json";
const std::string kMcDefault = DRONECELL_DATA_DIR "/mc_default.json";

}  // namespace

TEST_CASE("solve") {
  TempDir dir;

  SUBCASE("case study: balanced tenants and one coverage circle") {
    REQUIRE(run("solve " + q(kCase24) + " --out " + q(dir / "r.csv") + " --svg " +
                q(dir / "r.svg")) == 0);
    const auto rows = read_csv(dir / "r.csv");
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0][9] == "count_0");
    CHECK(std::abs(std::stoi(rows[1][9]) - std::stoi(rows[1][10])) <= 1);
    const std::string svg = slurp(dir / "r.svg");
    std::size_t circles = 0;
    for (auto pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) {
      ++circles;
    }
    CHECK(circles == 1);
  }
  SUBCASE("reruns are byte-identical") {
    REQUIRE(run("solve " + q(kCase24) + " --out " + q(dir / "a.csv")) == 0);
    REQUIRE(run("solve " + q(kCase24) + " --out " + q(dir / "b.csv")) == 0);
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  }
  SUBCASE("malformed scenario: exit 1, nothing written") {
    std::ofstream(dir / "bad.json") << "{\"meta\": {\"version\": \"1\"}, \"users\": [";
    CHECK(run("solve " + q(dir / "bad.json") + " --out " + q(dir / "r.csv") + " --svg " +
              q(dir / "r.svg")) == 1);
    CHECK_FALSE(fs::exists(dir / "r.csv"));
    CHECK_FALSE(fs::exists(dir / "r.svg"));
  }
  SUBCASE("invalid scenario: exit 1") {
    auto j = io::scenario_to_json(io::read_scenario_file(kCase24));
    j["users"][0]["mvno"] = 9;
    std::ofstream(dir / "bad.json") << j.dump();
    CHECK(run("solve " + q(dir / "bad.json") + " --out " + q(dir / "r.csv")) == 1);
    CHECK_FALSE(fs::exists(dir / "r.csv"));
  }
  SUBCASE("inverted placement region is a validation error") {
    auto j = io::scenario_to_json(io::read_scenario_file(kCase24));
    j["region"]["h"] = {500.0, 100.0};
    std::ofstream(dir / "empty.json") << j.dump();
    CHECK(run("solve " + q(dir / "empty.json") + " --out " + q(dir / "r.csv")) == 1);
    CHECK_FALSE(fs::exists(dir / "r.csv"));
  }
  SUBCASE("fairness over four tenants: exit 2") {
    auto j = io::scenario_to_json(generate_scenario(2, 12, 4, *find_environment_preset("urban")));
    std::ofstream(dir / "j4.json") << j.dump();
    CHECK(run("solve " + q(dir / "j4.json") + " --out " + q(dir / "r.csv")) == 2);
    CHECK_FALSE(fs::exists(dir / "r.csv"));
  }
  SUBCASE("usage errors") {
    CHECK(run("") != 0);
    CHECK(run("solve") == 1);
    CHECK(run("launch " + q(kCase24)) == 1);
  }
}

TEST_CASE("mc") {
  TempDir dir;

  SUBCASE("default configuration: twelve rows") {
    REQUIRE(run("mc " + q(kMcDefault) + " --out " + q(dir / "mc.csv")) == 0);
    const auto rows = read_csv(dir / "mc.csv");
    REQUIRE(rows.size() == 13);
    CHECK(rows[0][0] == "environment");
    CHECK(rows[0].back() == "runs");
    for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].back() == "100");
  }
  SUBCASE("one run matches the direct solve and reruns are identical") {
    auto j = nlohmann::json::parse(slurp(kMcDefault));
    j["n_runs"] = 1;
    std::ofstream(dir / "one.json") << j.dump();
    REQUIRE(run("mc " + q(dir / "one.json") + " --out " + q(dir / "a.csv")) == 0);
    REQUIRE(run("mc " + q(dir / "one.json") + " --out " + q(dir / "b.csv")) == 0);
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));

    const auto config = io::read_config_file(dir / "one.json");
    const auto rows = read_csv(dir / "a.csv");
    std::size_t k = 1;
    for (const auto& env : config.environments) {
      const Scenario s = experiment_scenario(config, env, 0);
      for (Policy p : config.policies) {
        REQUIRE(k < rows.size());
        const auto r = run_policy(s, p);
        CHECK(rows[k][0] == env.name);
        CHECK(rows[k][1] == to_string(p));
        CHECK(rows[k][2] == report::format_number(r.terms.served));
        CHECK(rows[k][4] == std::to_string(r.mvno_counts(0)));
        ++k;
      }
    }
  }
  SUBCASE("unsupported fairness: exit 2") {
    auto j = nlohmann::json::parse(slurp(kMcDefault));
    j["n_runs"] = 1;
    j["num_mvnos"] = 4;
    std::ofstream(dir / "j4.json") << j.dump();
    CHECK(run("mc " + q(dir / "j4.json") + " --out " + q(dir / "mc.csv")) == 2);
    CHECK_FALSE(fs::exists(dir / "mc.csv"));
  }
}

TEST_CASE("altitude-profile") {
  TempDir dir;

  SUBCASE("unimodal scan with the optimum near its peak") {
    REQUIRE(run("altitude-profile urban 100 1 3000 300 --out " + q(dir / "p.csv")) == 0);
    const auto rows = read_csv(dir / "p.csv");
    REQUIRE(rows.size() == 303);
    std::vector<double> h, r;
    for (std::size_t k = 1; k <= 301; ++k) {
      CHECK(rows[k][0] == "scan");
      h.push_back(std::stod(rows[k][1]));
      r.push_back(std::stod(rows[k][2]));
    }
    const auto peak = static_cast<std::size_t>(std::max_element(r.begin(), r.end()) - r.begin());
    for (std::size_t k = 1; k <= peak; ++k) CHECK(r[k] >= r[k - 1]);
    for (std::size_t k = peak + 1; k < r.size(); ++k) CHECK(r[k] <= r[k - 1]);
    CHECK(rows.back()[0] == "optimum");
    const double h_star = std::stod(rows.back()[1]);
    CHECK(std::abs(h_star - h[peak]) <= 10.0);
    CHECK(std::stod(rows.back()[2]) >= r[peak] - 1e-3);
  }
  SUBCASE("unreachable threshold gives zero radius everywhere") {
    REQUIRE(run("altitude-profile urban 10 1 3000 20 --out " + q(dir / "p.csv")) == 0);
    const auto rows = read_csv(dir / "p.csv");
    for (std::size_t k = 1; k < rows.size(); ++k) CHECK(std::stod(rows[k][2]) == 0.0);
  }
  SUBCASE("bad arguments: exit 1") {
    CHECK(run("altitude-profile lunar 100 1 3000 10 --out " + q(dir / "p.csv")) == 1);
    CHECK(run("altitude-profile urban 100 0 3000 10 --out " + q(dir / "p.csv")) == 1);
    CHECK(run("altitude-profile urban 100 1 3000 0 --out " + q(dir / "p.csv")) == 1);
    CHECK_FALSE(fs::exists(dir / "p.csv"));
  }
}

TEST_CASE("gen") {
  TempDir dir;

  SUBCASE("deterministic, even targets, solvable") {
    REQUIRE(run("gen 5 24 2 urban --out " + q(dir / "a.json")) == 0);
    REQUIRE(run("gen 5 24 2 urban --out " + q(dir / "b.json")) == 0);
    CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
    const Scenario s = io::read_scenario_file(dir / "a.json");
    CHECK(s.users.size() == 24);
    CHECK(s.targets == Eigen::Vector2i(12, 12));
    CHECK(validate(s).empty());
    CHECK(run("solve " + q(dir / "a.json") + " --out " + q(dir / "r.csv")) == 0);
  }
  SUBCASE("field size bounds the positions") {
    REQUIRE(run("gen 5 50 3 suburban --field-size 300 --out " + q(dir / "a.json")) == 0);
    const Scenario s = io::read_scenario_file(dir / "a.json");
    for (const auto& u : s.users) CHECK(u.position.cwiseAbs().maxCoeff() <= 150.0);
  }
  SUBCASE("bad arguments: exit 1") {
    CHECK(run("gen 5 24 0 urban --out " + q(dir / "a.json")) == 1);
    CHECK(run("gen 5 24 2 lunar --out " + q(dir / "a.json")) == 1);
    CHECK_FALSE(fs::exists(dir / "a.json"));
  }
}
