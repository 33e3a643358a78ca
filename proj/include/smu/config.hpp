// Copyright 2026 The smu-codes Authors
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

#pragma once

// Run configuration for the command-line front end. The text format is flat
// "key = value" lines with dotted section keys; '#' starts a comment. Lists
// are comma separated.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smu/dynamics.hpp"
#include "smu/qspin.hpp"

namespace smu {

/// Malformed, unknown or out-of-range configuration. Maps to exit status 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Settings = std::map<std::string, std::string>;

struct TimeSpec {
  double start = 0.0;
  double stop = 10.0;
  int steps = 50;
};

struct RunConfig {
  std::vector<double> mu{0.7};
  int qubits = 2;
  SpinStrategy strategy = SpinStrategy::Enveloping;
  std::optional<BaseCase> base_case;
  BathSpec bath{{1.0, 1.5}, 4};
  /// "random" (drawn from the seed) or "vacuum".
  std::string bath_state = "random";
  std::vector<double> g{0.1, 0.1};
  std::vector<double> h{0.1, 0.1};
  TimeSpec times;
  /// Evaluation time for the kraus command.
  double time = 1.0;
  /// "invariant" (joint kernel) or "product" (|+...+>).
  std::string code = "invariant";
  std::uint64_t seed = 1;
  /// Empty means standard output.
  std::string output;
  std::vector<double> check_mu_grid{-0.7, -0.3, 0.3, 0.7, 1.0};
  /// Test fixture: name of a module whose inputs the check suite corrupts.
  std::string inject_fault;

  /// Every key with its resolved value, in a fixed order.
  std::vector<std::pair<std::string, std::string>> resolved() const;
};

/// Every key RunConfig understands.
const std::vector<std::string>& known_keys();

/// Reads "key = value" lines. Later keys override earlier ones.
Settings parse_settings(std::istream& in);

/// Builds and validates a RunConfig; unspecified keys keep their defaults.
/// Throws ConfigError listing every unknown key, or naming the first bad value.
RunConfig resolve_config(const Settings& settings);

}  // namespace smu
