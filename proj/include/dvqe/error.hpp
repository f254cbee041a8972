// Copyright 2026 The dvqe developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dvqe {

/**
 * Error taxonomy used across the library. The CLI maps each type to a
 * distinct process exit code (parse=2, config=3, numeric=4, infeasible=5).
 */
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string &msg) : std::runtime_error(msg) {}
};

// Dimension mismatches, invalid indices, capacity limits, bad run setups.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

// Violated numeric contracts: lost normalization, entanglement leaks,
// non-finite energies.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace dvqe
