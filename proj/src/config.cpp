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

#include "smu/config.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include "smu/csv.hpp"

namespace smu {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

double parse_real(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a real number, got '" + text + "'");
  }
}

long long parse_integer(const std::string& key, const std::string& text) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError(key + ": expected an integer, got '" + text + "'");
  return v;
}

std::vector<double> parse_reals(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) out.push_back(parse_real(key, item));
  return out;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += format_double(values[i]);
  }
  return out;
}

Matrix parse_block(const std::string& key, const std::string& text) {
  const auto v = parse_reals(key, text);
  if (v.size() != 8) throw ConfigError(key + ": expected 8 reals (re,im of a 2x2 row-major)");
  Matrix m(2, 2);
  for (int i = 0; i < 4; ++i) m(i / 2, i % 2) = Complex(v[2 * i], v[2 * i + 1]);
  return m;
}

std::string format_block(const Matrix& m) {
  std::vector<double> v;
  for (int i = 0; i < 4; ++i) {
    v.push_back(m(i / 2, i % 2).real());
    v.push_back(m(i / 2, i % 2).imag());
  }
  return join(v);
}

void check_mu(const std::string& key, const std::vector<double>& grid) {
  if (grid.empty()) throw ConfigError(key + ": empty mu grid");
  for (double mu : grid)
    if (!(mu >= -1.0 && mu <= 1.0) || mu == 0.0)
      throw ConfigError(key + ": mu must lie in [-1,1] without 0, got " + format_double(mu));
}

}  // namespace

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys{
      "mu",          "qubits",         "strategy",        "base_case.k1",  "base_case.k2",
      "base_case.k3", "bath.frequencies", "bath.truncation", "bath.state",   "couplings.g",
      "couplings.h", "times.start",    "times.stop",      "times.steps",   "time",
      "code",        "seed",           "output",          "check.mu_grid", "check.inject_fault"};
  return keys;
}

Settings parse_settings(std::istream& in) {
  Settings out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(number) + ": expected 'key = value'");
    const auto key = trim(std::string_view(line).substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(number) + ": empty key");
    out[key] = trim(std::string_view(line).substr(eq + 1));
  }
  return out;
}

RunConfig resolve_config(const Settings& settings) {
  std::vector<std::string> unknown;
  for (const auto& [key, value] : settings)
    if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end())
      unknown.push_back(key);
  if (!unknown.empty()) {
    std::string msg = "unknown config keys:";
    for (const auto& k : unknown) msg += " " + k;
    throw ConfigError(msg);
  }

  auto get = [&](const std::string& key) -> const std::string* {
    auto it = settings.find(key);
    return it == settings.end() ? nullptr : &it->second;
  };

  RunConfig c;
  if (auto v = get("mu")) c.mu = parse_reals("mu", *v);
  check_mu("mu", c.mu);
  if (auto v = get("check.mu_grid")) c.check_mu_grid = parse_reals("check.mu_grid", *v);
  check_mu("check.mu_grid", c.check_mu_grid);

  if (auto v = get("qubits")) c.qubits = static_cast<int>(parse_integer("qubits", *v));
  if (c.qubits < 1) throw ConfigError("qubits: must be at least 1");
  if (auto v = get("strategy")) {
    try {
      c.strategy = parse_strategy(*v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("strategy: ") + e.what());
    }
  }

  const bool any_block = get("base_case.k1") || get("base_case.k2") || get("base_case.k3");
  if (any_block) {
    if (!(get("base_case.k1") && get("base_case.k2") && get("base_case.k3")))
      throw ConfigError("base_case: k1, k2 and k3 must be given together");
    BaseCase b;
    b.k[0] = parse_block("base_case.k1", *get("base_case.k1"));
    b.k[1] = parse_block("base_case.k2", *get("base_case.k2"));
    b.k[2] = parse_block("base_case.k3", *get("base_case.k3"));
    c.base_case = b;
  }

  if (auto v = get("bath.frequencies")) c.bath.mode_frequencies = parse_reals("bath.frequencies", *v);
  if (c.bath.mode_frequencies.empty()) throw ConfigError("bath.frequencies: at least one mode");
  for (double w : c.bath.mode_frequencies)
    if (!(w > 0.0)) throw ConfigError("bath.frequencies: frequencies must be positive");
  if (auto v = get("bath.truncation"))
    c.bath.truncation = static_cast<int>(parse_integer("bath.truncation", *v));
  if (c.bath.truncation < 2) throw ConfigError("bath.truncation: must be at least 2");
  if (auto v = get("bath.state")) c.bath_state = *v;
  if (c.bath_state != "random" && c.bath_state != "vacuum")
    throw ConfigError("bath.state: expected random or vacuum");

  const std::size_t modes = c.bath.mode_frequencies.size();
  c.g.assign(modes, 0.1);
  c.h.assign(modes, 0.1);
  if (auto v = get("couplings.g")) c.g = parse_reals("couplings.g", *v);
  if (auto v = get("couplings.h")) c.h = parse_reals("couplings.h", *v);
  if (c.g.size() != modes || c.h.size() != modes)
    throw ConfigError("couplings: g and h need one entry per bath mode");

  if (auto v = get("times.start")) c.times.start = parse_real("times.start", *v);
  if (auto v = get("times.stop")) c.times.stop = parse_real("times.stop", *v);
  if (auto v = get("times.steps"))
    c.times.steps = static_cast<int>(parse_integer("times.steps", *v));
  if (c.times.steps < 1) throw ConfigError("times.steps: must be at least 1");
  if (auto v = get("time")) c.time = parse_real("time", *v);

  if (auto v = get("code")) c.code = *v;
  if (c.code != "invariant" && c.code != "product")
    throw ConfigError("code: expected invariant or product");
  if (auto v = get("seed")) {
    const auto s = parse_integer("seed", *v);
    if (s < 0) throw ConfigError("seed: must be non-negative");
    c.seed = static_cast<std::uint64_t>(s);
  }
  if (auto v = get("output")) c.output = *v;
  if (auto v = get("check.inject_fault")) c.inject_fault = *v;
  if (!c.inject_fault.empty() && c.inject_fault != "qalg")
    throw ConfigError("check.inject_fault: only 'qalg' is supported");
  return c;
}

std::vector<std::pair<std::string, std::string>> RunConfig::resolved() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("mu", join(mu));
  out.emplace_back("qubits", std::to_string(qubits));
  out.emplace_back("strategy", std::string(to_string(strategy)));
  for (std::size_t i = 0; i < 3; ++i)
    out.emplace_back("base_case.k" + std::to_string(i + 1),
                     base_case ? format_block(base_case->k[i]) : "default");
  out.emplace_back("bath.frequencies", join(bath.mode_frequencies));
  out.emplace_back("bath.truncation", std::to_string(bath.truncation));
  out.emplace_back("bath.state", bath_state);
  out.emplace_back("couplings.g", join(g));
  out.emplace_back("couplings.h", join(h));
  out.emplace_back("times.start", format_double(times.start));
  out.emplace_back("times.stop", format_double(times.stop));
  out.emplace_back("times.steps", std::to_string(times.steps));
  out.emplace_back("time", format_double(time));
  out.emplace_back("code", code);
  out.emplace_back("seed", std::to_string(seed));
  out.emplace_back("output", output.empty() ? "-" : output);
  out.emplace_back("check.mu_grid", join(check_mu_grid));
  out.emplace_back("check.inject_fault", inject_fault.empty() ? "none" : inject_fault);
  return out;
}

}  // namespace smu
