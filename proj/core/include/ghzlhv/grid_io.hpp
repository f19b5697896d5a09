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

#ifndef GHZLHV_GRID_IO_HPP
#define GHZLHV_GRID_IO_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ghzlhv/errors.hpp"
#include "ghzlhv/settings.hpp"

namespace ghz {

/// A grid file could not be parsed. `line()` is 1-based, 0 when the problem
/// is not tied to one line.
class GridParseError : public InputError {
 public:
  GridParseError(std::string_view source, std::size_t line,
                 const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Grid text format: one line per party holding that party's coplanar angles
/// in radians, separated by whitespace. '#' starts a comment; blank lines are
/// skipped.
SettingsGrid parse_grid(std::istream& in, std::string_view source = "<input>");
SettingsGrid read_grid_file(const std::filesystem::path& path);

/// Writes a grid in the text format, angles with 12 significant digits.
void write_grid(std::ostream& out, const SettingsGrid& grid,
                std::string_view comment = {});

/// printf("%.12g") of x, the angle format used in all outputs.
std::string format_angle(double x);

}  // namespace ghz

#endif  // GHZLHV_GRID_IO_HPP
