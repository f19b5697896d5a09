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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using ghz::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "ghzlhv_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

}  // namespace

TEST_CASE("visibility prints v_max to nine decimals") {
  auto r = invoke({"visibility", "--paper-2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("v_max         0.500000000\n") != std::string::npos);

  r = invoke({"visibility", "--party", "0.3", "--party", "-1.1", "--party", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("v_max         1.000000000\n") != std::string::npos);

  const auto grid = scratch("mermin.txt");
  spit(grid, "# Mermin\n0 1.5707963267948966\n0 1.5707963267948966\n0 1.5707963267948966\n");
  r = invoke({"visibility", "--grid", grid.string(), "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["v_max"].get<double>() - 0.5) <= 1e-9);
}

TEST_CASE("five-setting preset") {
  const auto r = invoke({"visibility", "--paper-5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["v_max"].get<double>() - 0.5) <= 1e-4);
  CHECK(j["columns"] == 8192);
}

TEST_CASE("certificate and LP dump") {
  const auto mps = scratch("chsh.mps");
  const auto r = invoke({"visibility", "--party", "0 1.5707963267948966", "--party",
                         "-0.7853981633974483 0.7853981633974483", "--certificate",
                         "--dump-lp", mps.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.707106781") != std::string::npos);
  CHECK(r.out.find("certificate") != std::string::npos);
  CHECK(slurp(mps).find("OBJSENSE") != std::string::npos);
}

TEST_CASE("input errors exit 2 with a line number") {
  const auto bad = scratch("bad.txt");
  spit(bad, "0 1\n\n0 zz\n");
  auto r = invoke({"visibility", "--grid", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find(":3:") != std::string::npos);

  CHECK(invoke({"visibility"}).code == 2);
  CHECK(invoke({"visibility", "--paper-2", "--paper-5"}).code == 2);
  CHECK(invoke({"visibility", "--grid", scratch("missing.txt").string()}).code == 2);
  CHECK(invoke({"visibility", "--paper-2", "--format", "xml"}).code == 2);
  CHECK(invoke({"optimize"}).code == 2);
  CHECK(invoke({"optimize", "--counts", "2", "2", "--parties", "3"}).code == 2);
  CHECK(invoke({"optimize", "--counts", "2", "0", "2"}).code == 2);
  CHECK(invoke({"scan", "--counts", "2"}).code == 2);
  CHECK(invoke({"demo", "bell"}).code == 2);
  CHECK(invoke({}).code == 2);
}

TEST_CASE("help exits 0") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("visibility") != std::string::npos);
}

TEST_CASE("enumeration cap exits 3") {
  setenv("GHZLHV_ENUM_CAP", "4", 1);
  auto r = invoke({"visibility", "--paper-2"});
  CHECK(r.code == 3);
  CHECK(r.err.find("GHZLHV_ENUM_CAP") != std::string::npos);
  CHECK(invoke({"optimize", "--counts", "2", "2", "2"}).code == 3);
  setenv("GHZLHV_ENUM_CAP", "seven", 1);
  CHECK(invoke({"visibility", "--paper-2"}).code == 2);
  setenv("GHZLHV_ENUM_CAP", "6", 1);
  CHECK(invoke({"visibility", "--paper-2"}).code == 0);
  unsetenv("GHZLHV_ENUM_CAP");
  CHECK(invoke({"visibility", "--party", "0 1 2 3 4 5 6 7 8 9 10 11 12", "--party",
                "0 1 2 3 4 5 6 7 8 9 10 11 12"})
            .code == 3);
}

TEST_CASE("iteration limit exits 4") {
  CHECK(invoke({"visibility", "--paper-2", "--lp-iterations", "2"}).code == 4);
  CHECK(invoke({"optimize", "--counts", "2", "2", "2", "--restarts", "1", "--lp-iterations",
                "2"})
            .code == 4);
}

TEST_CASE("optimize writes a grid that visibility reproduces") {
  const auto grid = scratch("best.txt");
  const auto r = invoke({"optimize", "--counts", "2", "2", "2", "--restarts", "3", "--seed", "4",
                         "--format", "json", "--grid-out", grid.string()});
  REQUIRE(r.code == 0);
  const double best = nlohmann::json::parse(r.out)["best_v"].get<double>();
  const auto v = invoke({"visibility", "--grid", grid.string(), "--format", "json"});
  REQUIRE(v.code == 0);
  CHECK(std::abs(nlohmann::json::parse(v.out)["v_max"].get<double>() - best) <= 1e-6);
}

TEST_CASE("trivial optimize") {
  const auto r = invoke({"optimize", "--counts", "1", "--parties", "3", "--restarts", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("best v_max    1.000000000") != std::string::npos);
}

TEST_CASE("structured output is byte-identical across runs and thread counts") {
  const std::vector<std::string> opt{"optimize", "--counts", "2", "2", "2", "--restarts", "3",
                                     "--format", "json"};
  auto a = opt, b = opt;
  a.insert(a.end(), {"--threads", "1"});
  b.insert(b.end(), {"--threads", "2"});
  CHECK(invoke(a).out == invoke(b).out);

  const std::vector<std::string> scan{"scan", "--counts", "2", "2", "2", "--samples", "100",
                                      "--seed", "7", "--format", "csv"};
  const auto first = invoke(scan);
  CHECK(first.code == 0);
  CHECK(first.out == invoke(scan).out);

  const auto out = scratch("scan.json");
  auto with_out = scan;
  with_out.back() = "json";
  with_out.insert(with_out.end(), {"--out", out.string()});
  const auto r = invoke(with_out);
  CHECK(r.code == 0);
  CHECK(r.out.find("min") != std::string::npos);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["values"].size() == 100);
}

TEST_CASE("empty scan") {
  const auto r = invoke({"scan", "--counts", "2", "2", "2", "--samples", "0", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["values"].empty());
}

TEST_CASE("demos") {
  auto r = invoke({"demo", "ghz"});
  CHECK(r.code == 0);
  CHECK(r.out.size() >= 38);
  CHECK(r.out.substr(r.out.size() - 38) == "derived +1, quantum -1, contradiction\n");

  r = invoke({"demo", "chsh"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2.828427125") != std::string::npos);
  CHECK(r.out.find("violated") != std::string::npos);

  r = invoke({"demo", "chsh", "--classical"});
  CHECK(r.code == 0);
  CHECK(r.out.find("max |S| over 16 assignments: 2") != std::string::npos);

  r = invoke({"demo", "ghz", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["satisfying_assignments"] == 0);
}
