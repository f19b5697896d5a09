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

#ifndef GHZLHV_ERRORS_HPP
#define GHZLHV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ghz {

// Malformed user input: bad grid, out-of-range visibility, wrong party count.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested strategy enumeration is larger than the configured cap.
class CapExceededError : public std::length_error {
 public:
  CapExceededError(std::size_t requested, std::size_t cap)
      : std::length_error("strategy enumeration needs 2^" +
                          std::to_string(requested) +
                          " raw strategies, above the enumeration cap of 2^" +
                          std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

// The LP solver did not reach an optimal basis.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ghz

#endif  // GHZLHV_ERRORS_HPP
