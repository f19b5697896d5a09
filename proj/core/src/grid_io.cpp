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

#include "ghzlhv/grid_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace ghz {

GridParseError::GridParseError(std::string_view source, std::size_t line,
                               const std::string& what)
    : InputError(std::string(source) +
                 (line > 0 ? ":" + std::to_string(line) : std::string()) +
                 ": " + what),
      line_(line) {}

SettingsGrid parse_grid(std::istream& in, std::string_view source) {
  std::vector<std::vector<double>> parties;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream tokens(line);
    std::vector<double> angles;
    std::string tok;
    while (tokens >> tok) {
      errno = 0;
      char* end = nullptr;
      const double v = std::strtod(tok.c_str(), &end);
      if (end != tok.c_str() + tok.size() || errno == ERANGE) {
        throw GridParseError(source, lineno, "invalid angle '" + tok + "'");
      }
      if (!std::isfinite(v)) {
        throw GridParseError(source, lineno, "angle '" + tok + "' is not finite");
      }
      angles.push_back(v);
    }
    if (!angles.empty()) parties.push_back(std::move(angles));
  }
  if (parties.size() < 2) {
    throw GridParseError(source, 0,
                         "a grid needs at least 2 parties (non-empty lines), got " +
                             std::to_string(parties.size()));
  }
  return SettingsGrid::from_angles(parties);
}

SettingsGrid read_grid_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GridParseError(path.string(), 0, "cannot open grid file");
  return parse_grid(in, path.string());
}

std::string format_angle(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_grid(std::ostream& out, const SettingsGrid& grid,
                std::string_view comment) {
  while (!comment.empty()) {
    const auto nl = comment.find('\n');
    out << "# " << comment.substr(0, nl) << '\n';
    comment = nl == std::string_view::npos ? std::string_view{} : comment.substr(nl + 1);
  }
  for (std::size_t p = 0; p < grid.party_count(); ++p) {
    const auto angles = grid.angles(p);
    for (std::size_t i = 0; i < angles.size(); ++i) {
      out << (i ? " " : "") << format_angle(angles[i]);
    }
    out << '\n';
  }
}

}  // namespace ghz
