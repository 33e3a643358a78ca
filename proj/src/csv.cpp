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

#include "smu/csv.hpp"

#include <cstdio>
#include <ostream>

namespace smu {

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // fold -0 so output is sign-stable
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17e", value);
  return buf;
}

void write_comment_header(std::ostream& out,
                          const std::vector<std::pair<std::string, std::string>>& entries) {
  for (const auto& [k, v] : entries) out << "# " << k << " = " << v << '\n';
}

}  // namespace smu
