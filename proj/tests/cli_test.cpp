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

#include "smu/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"

namespace smu {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& config_text = "") {
  if (!config_text.empty()) {
    const auto path = std::filesystem::temp_directory_path() /
                      ("smucodes_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()
                                                                 ->random_seed()) +
                       ".conf");
    std::ofstream(path) << config_text;
    args.push_back("--config");
    args.push_back(path.string());
  }
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

using Rows = std::vector<std::vector<std::string>>;

/// Data rows of a CSV, skipping comments and the column header.
Rows data_rows(const std::string& csv) {
  Rows rows;
  std::istringstream in(csv);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Config, DefaultsAndOverrides) {
  std::istringstream in("# comment\nmu = 0.3, -0.5\nbath.frequencies = 2.0\nqubits=4 # trailing\n");
  const auto c = resolve_config(parse_settings(in));
  EXPECT_EQ(c.mu, (std::vector<double>{0.3, -0.5}));
  EXPECT_EQ(c.qubits, 4);
  EXPECT_EQ(c.g, std::vector<double>{0.1});
  EXPECT_EQ(c.times.steps, 50);
  EXPECT_EQ(c.strategy, SpinStrategy::Enveloping);
}

TEST(Config, Rejections) {
  auto resolve = [](const std::string& text) {
    std::istringstream in(text);
    return resolve_config(parse_settings(in));
  };
  EXPECT_THROW(resolve("mu = 0"), ConfigError);
  EXPECT_THROW(resolve("mu = 1.5"), ConfigError);
  EXPECT_THROW(resolve("mu ="), ConfigError);
  EXPECT_THROW(resolve("times.steps = 0"), ConfigError);
  EXPECT_THROW(resolve("couplings.g = 0.1"), ConfigError);
  EXPECT_THROW(resolve("qubits = two"), ConfigError);
  EXPECT_THROW(resolve("base_case.k1 = 1,0,0,0,0,0,1,0"), ConfigError);
  EXPECT_THROW(resolve("just text"), ConfigError);
}

TEST(Config, CustomBaseCaseRoundTrips) {
  std::istringstream in(
      "strategy = recurrence\n"
      "base_case.k1 = 0.5,0,0,0,0,0,-0.5,0\n"
      "base_case.k2 = 0,0,0,-0.5,0,0.5,0,0\n"
      "base_case.k3 = 0,0,0.5,0,0.5,0,0,0\n");
  const auto c = resolve_config(parse_settings(in));
  ASSERT_TRUE(c.base_case.has_value());
  EXPECT_EQ(c.base_case->k[1](0, 1), Complex(0.0, -0.5));
  EXPECT_TRUE(c.base_case->is_hermitian());
}

TEST(Cli, UnknownKeysAreListed) {
  auto r = run({"evolve"}, "bath.size = 3\nfoo = 1\n");
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("bath.size"), std::string::npos);
  EXPECT_NE(r.err.find("foo"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitConfig);
  EXPECT_EQ(run({"frobnicate"}).code, kExitConfig);
  EXPECT_EQ(run({"evolve", "--qubits", "x"}).code, kExitConfig);
  EXPECT_EQ(run({"evolve", "--mu", "0"}).code, kExitConfig);
  EXPECT_EQ(run({"evolve", "--config", "/nonexistent/file.conf"}).code, kExitConfig);
}

TEST(Cli, InvariantsSingletAtHalf) {
  auto r = run({"invariants", "--mu", "0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 4u);
  const Vector singlet = testing::deformed_singlet(0.5);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(rows[i][1], "0");
    EXPECT_NEAR(std::stod(rows[i][3]), singlet(static_cast<std::ptrdiff_t>(i)).real(), 1e-10);
    EXPECT_NEAR(std::stod(rows[i][4]), 0.0, 1e-10);
  }
  EXPECT_NE(r.err.find("dimension=1"), std::string::npos);
  EXPECT_NE(r.err.find("agree"), std::string::npos);
}

TEST(Cli, InvariantDimensions) {
  for (auto [qubits, dim] : {std::pair{"3", "0"}, std::pair{"4", "2"}, std::pair{"8", "14"}}) {
    auto r = run({"invariants", "--qubits", qubits});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.err.find(std::string("dimension=") + dim), std::string::npos) << r.err;
  }
}

TEST(Cli, InvariantsBudget) {
  auto r = run({"invariants", "--qubits", "11"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, RecurrenceDiscrepancyIsReported) {
  auto r = run({"invariants", "--strategy", "recurrence"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("DISAGREE"), std::string::npos);
}

TEST(Cli, EvolveDefaultConfig) {
  auto r = run({"evolve"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 100u);
  double control_min = 1.0;
  for (const auto& row : rows) {
    ASSERT_EQ(row.size(), 7u);
    const double fidelity = std::stod(row[3]);
    if (row[1] == "invariant") {
      EXPECT_NEAR(fidelity, 1.0, 1e-9);
      EXPECT_LE(std::stod(row[4]), 1e-9);
      EXPECT_LE(std::stod(row[5]), 1e-9);
    } else {
      ASSERT_EQ(row[1], "control");
      control_min = std::min(control_min, fidelity);
    }
  }
  EXPECT_LT(control_min, 1.0 - 1e-3);
}

TEST(Cli, EvolveSingleStep) {
  auto r = run({"evolve"}, "times.steps = 1\n");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) {
    EXPECT_EQ(std::stod(row[2]), 0.0);
    EXPECT_NEAR(std::stod(row[3]), 1.0, 1e-15);
  }
}

TEST(Cli, EvolveIsDeterministic) {
  auto a = run({"evolve", "--seed", "7", "--mu", "0.4,-0.6"});
  auto b = run({"evolve", "--seed", "7", "--mu", "0.4,-0.6"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  auto c = run({"evolve", "--seed", "8", "--mu", "0.4,-0.6"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, HeaderEchoesResolvedConfig) {
  auto r = run({"evolve", "--qubits", "4"}, "times.steps = 2\n");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const auto& key : known_keys())
    EXPECT_NE(r.out.find("# " + key + " = "), std::string::npos) << key;
  EXPECT_NE(r.out.find("# qubits = 4\n"), std::string::npos);
  EXPECT_NE(r.out.find("# times.steps = 2\n"), std::string::npos);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "smucodes_cli_out.csv";
  auto r = run({"evolve", "--out", path.string()}, "times.steps = 3\n");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  EXPECT_EQ(data_rows(contents.str()).size(), 6u);
  EXPECT_EQ(r.out.find("mu,state"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, KrausInvariantCode) {
  auto r = run({"kraus", "--time", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0][6], "error-avoiding");
  EXPECT_LE(std::stod(rows[0][2]), 1e-8);
  EXPECT_EQ(rows[0].size(), 7u + 16u);
}

TEST(Cli, KrausProductCodeFails) {
  auto r = run({"kraus"}, "code = product\n");
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(data_rows(r.out).at(0)[6], "error-avoiding");
}

TEST(Cli, KrausAtZeroTime) {
  auto r = run({"kraus", "--time", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_LE(std::stod(data_rows(r.out).at(0)[2]), 1e-12);
}

TEST(Cli, CheckPasses) {
  auto r = run({"check"});
  ASSERT_EQ(r.code, kExitOk) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_FALSE(j["properties"].empty());
}

TEST(Cli, CheckNamesCorruptedModule) {
  auto r = run({"check"}, "check.inject_fault = qalg\n");
  EXPECT_EQ(r.code, kExitFailure);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["failing_modules"], nlohmann::json::array({"qalg"}));
  EXPECT_NE(r.err.find("qalg"), std::string::npos);
}

TEST(Cli, CheckRejectsEmptyGrid) {
  EXPECT_EQ(run({"check"}, "check.mu_grid =\n").code, kExitConfig);
}

}  // namespace
}  // namespace smu
