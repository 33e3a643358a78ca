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

// Batch front end. Subcommands: invariants, evolve, kraus, check.
// Exit status: 0 success, 1 property or verdict failure, 2 configuration error.

#include <iosfwd>
#include <string>
#include <vector>

#include "smu/config.hpp"

namespace smu {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

/// Largest register handled by the joint-kernel method.
inline constexpr int kKernelQubitBudget = 10;

inline constexpr const char* kEvolveCsvHeader =
    "mu,state,t,fidelity,trace_distance,factorization_deviation,purity";

/// `args` excludes the program name. CSV goes to `out` unless the config names
/// an output file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Each command writes its CSV (or JSON for check) to `csv` and human-readable
/// status lines to `log`, returning the exit status.
int cmd_invariants(const RunConfig& config, std::ostream& csv, std::ostream& log);
int cmd_evolve(const RunConfig& config, std::ostream& csv, std::ostream& log);
int cmd_kraus(const RunConfig& config, std::ostream& csv, std::ostream& log);
int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& log);

}  // namespace smu
