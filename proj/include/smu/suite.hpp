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

// Property suite behind `smucodes check`: module invariants sampled over a mu
// grid, summarized as JSON.

#include <string>
#include <vector>

#include "smu/config.hpp"

namespace smu {

struct PropertyResult {
  std::string module;
  std::string property;
  double mu = 0.0;
  double value = 0.0;
  double tolerance = 0.0;
  /// "<=" when value must stay below tolerance, ">" for negative controls.
  std::string comparison = "<=";
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<PropertyResult> results;
  /// Informational lines, e.g. method comparisons that are expected to differ.
  std::vector<std::string> notes;
  std::string injected_fault;

  bool passed() const;
  /// Sorted, without duplicates.
  std::vector<std::string> failing_modules() const;
  std::string to_json() const;
};

/// Runs every property at each mu of config.check_mu_grid, drawing random
/// inputs from config.seed.
SuiteReport run_property_suite(const RunConfig& config);

}  // namespace smu
