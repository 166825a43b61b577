// Copyright 2026 The nekomata Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "neko/serialize.hpp"
#include "neko_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result neko_cmd(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = neko::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() / ("neko_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, BuildGridWritesFileAndAudit) {
  TempDir dir;
  const auto path = dir.file("grid.json");
  const auto r = neko_cmd({"build", "grid", "--n", "4", "--set", "slice:4:2", "--m", "2", "-o", path});
  ASSERT_EQ(r.code, neko::cli::kPass) << r.err;
  EXPECT_NE(r.out.find("depth=4 size=10 qubits=12"), std::string::npos) << r.out;
  const auto c = neko::parse_circuit(slurp(path));
  EXPECT_EQ(c.qubit_count(), 12);
  EXPECT_EQ(c.depth(), 4);
}

TEST(Cli, BuildToStdoutPutsAuditOnStderr) {
  const auto r = neko_cmd({"build", "modp-fanout", "--p", "2", "--n", "4"});
  ASSERT_EQ(r.code, neko::cli::kPass) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["qubits"], 14);
  EXPECT_NE(r.err.find("qubits=14"), std::string::npos);
}

TEST(Cli, BuildRejectsGammaOutsideDomain) {
  const auto r = neko_cmd({"build", "grid", "--n", "2", "--set", "slice:2:1"});
  EXPECT_EQ(r.code, neko::cli::kUsageError);
  EXPECT_NE(r.err.find("compute_m"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(neko_cmd({}).code, neko::cli::kUsageError);
  EXPECT_EQ(neko_cmd({"frobnicate"}).code, neko::cli::kUsageError);
  EXPECT_EQ(neko_cmd({"build", "grid", "--n", "four"}).code, neko::cli::kUsageError);
  EXPECT_EQ(neko_cmd({"verify", "moda", "--p", "4"}).code, neko::cli::kUsageError);
  EXPECT_EQ(neko_cmd({"build", "grid", "--set", "10,11"}).code, neko::cli::kUsageError);
  EXPECT_EQ(neko_cmd({"--help"}).code, neko::cli::kPass);
}

TEST(Cli, VerifyExamplesPass) {
  const auto moda = neko_cmd({"verify", "moda", "--p", "3", "--n", "2"});
  EXPECT_EQ(moda.code, neko::cli::kPass) << moda.err;
  const auto report = nlohmann::json::parse(moda.out);
  EXPECT_EQ(report["suite"], "moda");
  const auto bounds = neko_cmd({"verify", "grid-bounds", "--n", "64", "--mode", "symmetric"});
  ASSERT_EQ(bounds.code, neko::cli::kPass) << bounds.err;
  bool saw_zero = false;
  const auto bounds_doc = nlohmann::json::parse(bounds.out);
  for (const auto& check : bounds_doc["checks"]) {
    if (check["check"].get<std::string>().rfind("p_zero", 0) != 0) continue;
    saw_zero = true;
    EXPECT_GE(check["value"].get<double>(), 0.103);
  }
  EXPECT_TRUE(saw_zero);
  const auto restrict = neko_cmd({"verify", "restrict", "--n", "10", "--trials", "200"});
  EXPECT_EQ(restrict.code, neko::cli::kPass) << restrict.err;
  EXPECT_EQ(neko_cmd({"verify", "equivalences", "--n", "3"}).code, neko::cli::kPass);
}

TEST(Cli, FailingCheckExitsOne) {
  const auto r = neko_cmd({"verify", "fig2", "--preparer", "grid", "--n", "3", "--m", "3"});
  EXPECT_EQ(r.code, neko::cli::kCheckFailed);
  EXPECT_NE(r.err.find("check failed"), std::string::npos) << r.err;
}

TEST(Cli, BudgetExceededExitsThree) {
  TempDir dir;
  const auto path = dir.file("wide.json");
  ASSERT_EQ(neko_cmd({"build", "grid", "--n", "4", "--m", "11", "-o", path}).code, neko::cli::kPass);
  const auto r = neko_cmd({"run", path});
  EXPECT_EQ(r.code, neko::cli::kBudgetExceeded);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, BuildThenRunRoundTrip) {
  TempDir dir;
  const auto path = dir.file("cat.json");
  ASSERT_EQ(neko_cmd({"build", "cat-parity", "--n", "3", "-o", path}).code, neko::cli::kPass);
  // b = 1, x = 011: b xor x_1 xor x_2 xor x_3 = 1.
  const auto r = neko_cmd({"run", path, "--input", "1011"});
  ASSERT_EQ(r.code, neko::cli::kPass) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["construction"], "cat-parity");
  EXPECT_EQ(doc["outcomes"][0]["bits"], "101100");
  EXPECT_NEAR(doc["outcomes"][0]["probability"].get<double>(), 1.0, 1e-12);
  const auto zero = nlohmann::json::parse(neko_cmd({"run", path, "--input", "0110"}).out);
  EXPECT_EQ(zero["outcomes"][0]["bits"], "011000");
}

TEST(Cli, RunReportsNekomataFidelity) {
  TempDir dir;
  const auto path = dir.file("g.json");
  ASSERT_EQ(neko_cmd({"build", "grid", "--n", "3", "--set", "111", "--m", "3", "-o", path}).code, neko::cli::kPass);
  const auto doc = nlohmann::json::parse(neko_cmd({"run", path, "--targets", "0:2"}).out);
  ASSERT_TRUE(doc.contains("nekomata_fidelity"));
  EXPECT_GT(doc["nekomata_fidelity"].get<double>(), 0.5);
  EXPECT_LT(doc["nekomata_fidelity"].get<double>(), 1.0);
}

TEST(Cli, SweepEmptyRangeIsHeaderOnly) {
  const auto r = neko_cmd({"sweep", "grid", "--n", "10:8"});
  ASSERT_EQ(r.code, neko::cli::kPass);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
  EXPECT_EQ(r.out.rfind("n,set,m,gamma1,", 0), 0u);
}

TEST(Cli, SweepsAreDeterministic) {
  const std::vector<std::string> grid = {"sweep", "grid", "--n", "42,48,54,60,64", "--jobs", "3"};
  const auto a = neko_cmd(grid);
  const auto b = neko_cmd(grid);
  ASSERT_EQ(a.code, neko::cli::kPass);
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> serial = grid;
  serial.back() = "1";
  EXPECT_EQ(neko_cmd(serial).out, a.out);
  const std::vector<std::string> subs = {"verify", "subs", "--n", "7", "--trials", "30", "--seed", "5"};
  EXPECT_EQ(neko_cmd(subs).out, neko_cmd(subs).out);
}

TEST(Cli, GridSweepFidelityRisesWithN) {
  const auto r = neko_cmd({"sweep", "grid"});
  ASSERT_EQ(r.code, neko::cli::kPass) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  double previous = 0.0;
  int rows = 0;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    ASSERT_GE(cells.size(), 13u);
    const double fidelity = std::stod(cells[7]);
    EXPECT_GT(fidelity, previous);
    EXPECT_EQ(cells.back(), "true");
    previous = fidelity;
    ++rows;
  }
  EXPECT_EQ(rows, 5);
}

TEST(Cli, BudgetRowsAreSkipped) {
  const auto r = neko_cmd({"sweep", "grid", "--n", "10,24", "--weight", "2", "--mode", "dense"});
  ASSERT_EQ(r.code, neko::cli::kPass) << r.err;
  EXPECT_NE(r.out.find(",skipped"), std::string::npos) << r.out;
}

TEST(Cli, StructureSweeps) {
  const auto r = neko_cmd({"sweep", "toffoli-tree", "--n", "2:4"});
  ASSERT_EQ(r.code, neko::cli::kPass) << r.err;
  EXPECT_EQ(r.out.rfind("n,epsilon,qubits,depth,size", 0), 0u) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
  const auto m = neko_cmd({"sweep", "modp-fanout", "--p", "2", "--n", "4"});
  EXPECT_NE(m.out.find("2,4,14,"), std::string::npos) << m.out;
}
