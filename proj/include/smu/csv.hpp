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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace smu {

/// Full double precision in fixed scientific notation ("%.17e").
std::string format_double(double value);

/// Writes one "# key = value" comment line per entry.
void write_comment_header(std::ostream& out,
                          const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace smu
