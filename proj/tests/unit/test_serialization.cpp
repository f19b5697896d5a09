// Copyright 2026 The ghzlhv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "ghzlhv/serialization.hpp"
#include "json.hpp"

using namespace ghz;
using Json = nlohmann::json;

TEST_SUITE("serialization") {

TEST_CASE("visibility JSON") {
  const auto grid = mermin_grid();
  const auto p = build_problem(grid);
  const auto s = solve_lp(p);
  const auto j = Json::parse(to_json(grid, p, s, false));
  CHECK(j["kind"] == "visibility");
  CHECK(j["counts"] == Json::array({2, 2, 2}));
  CHECK(j["dedup"] == "even-flips");
  CHECK(j["columns"] == 16);
  CHECK(j["constraints"] == 9);
  CHECK(j["status"] == "optimal");
  CHECK(j["v_max"].get<double>() == s.v_max);
  CHECK(j["angles"][0][1].get<double>() == doctest::Approx(kHalfPi).epsilon(1e-11));
  CHECK_FALSE(j.contains("certificate"));
}

TEST_CASE("certificate reconstructs the noisy correlations") {
  const auto grid = five_setting_grid();
  const auto p = build_problem(grid);
  const auto s = solve_lp(p);
  const auto j = Json::parse(to_json(grid, p, s, true));
  const auto& cert = j["certificate"];
  std::vector<double> mix(p.targets.size(), 0.0);
  double total = 0.0;
  for (const auto& m : cert["mixture"]) {
    const double w = m["weight"].get<double>();
    CHECK(w >= kCertificateWeightFloor);
    total += w;
    const auto strategy = m["strategy"].get<std::vector<std::vector<int>>>();
    REQUIRE(strategy.size() == 3);
    std::size_t e = 0;
    for (int a : strategy[0])
      for (int b : strategy[1])
        for (int c : strategy[2]) mix[e++] += w * a * b * c;
  }
  CHECK(std::abs(total - 1.0) <= 1e-9);
  for (std::size_t e = 0; e < mix.size(); ++e) {
    CHECK(std::abs(mix[e] - s.v_max * p.targets[e]) <= 1e-8);
  }
  CHECK(cert["duals"].size() == p.constraint_count());
}

TEST_CASE("optimize and scan JSON are byte-stable") {
  SimplexConfig cfg;
  cfg.restarts = 2;
  cfg.max_iterations = 30;
  const std::vector<std::size_t> counts{2, 2, 2};
  const std::string a = to_json(minimize_vmax(counts, cfg));
  const std::string b = to_json(minimize_vmax(counts, cfg));
  CHECK(a == b);
  const auto j = Json::parse(a);
  CHECK(j["kind"] == "optimize");
  CHECK(j["restarts"].size() == 2);
  CHECK(j["config"]["initial_step"] == 0.5);

  const std::string s1 = to_json(random_scan(counts, 5, 3));
  CHECK(s1 == to_json(random_scan(counts, 5, 3)));
  const auto k = Json::parse(s1);
  CHECK(k["kind"] == "scan");
  CHECK(k["values"].size() == 5);

  const auto empty = Json::parse(to_json(random_scan(counts, 0, 3)));
  CHECK(empty["summary"].is_null());
  CHECK(empty["best_angles"].is_null());
}

TEST_CASE("CSV output") {
  const auto scan = random_scan(std::vector<std::size_t>{2, 2}, 4, 1);
  std::ostringstream out;
  write_csv(out, scan);
  std::istringstream in(out.str());
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 5);

  const auto grid = chsh_grid();
  const auto p = build_problem(grid);
  std::ostringstream vis;
  write_csv(vis, grid, p, solve_lp(p), false);
  CHECK(vis.str().find("0.707106781") != std::string::npos);
}

}  // TEST_SUITE
