// Copyright 2026 The ubound Authors
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

// End-to-end tests of the ubound executable: exit codes, output formats and
// determinism.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gtest/gtest.h"

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run(const std::string& args) {
    // ctest runs test cases in parallel; keep stderr captures apart.
    static int counter = 0;
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    const std::string err_path = ::testing::TempDir() + "ubound_cli_" + info->name() + "_" +
                                 std::to_string(counter++) + ".err";
    const std::string cmd = std::string(UBOUND_CLI) + " " + args + " 2>" + err_path;
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err_path)};
}

std::string sample(const char* name) { return std::string(UBOUND_SAMPLES) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(cli, report_spin1_json) {
    CliResult r = run("report " + sample("spin1_theta0.json") + " --json");
    ASSERT_EQ(r.exit_code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_NEAR(j["inequalities"]["eq4"]["lhs"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["inequalities"]["eq4"]["rhs"].get<double>(), 1.0, 1e-12);
    EXPECT_TRUE(j["inequalities"]["eq3"]["trivial"].get<bool>());
    EXPECT_FALSE(j["inequalities"]["eq4"]["trivial"].get<bool>());
}

TEST(cli, report_table_default) {
    CliResult r = run("report " + sample("spin1_theta0.json"));
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_NE(r.out.find("eq4"), std::string::npos);
    EXPECT_NE(r.out.find("relation"), std::string::npos);
}

TEST(cli, report_without_witness) {
    CliResult r = run("report " + sample("spin1_theta0_nowitness.json") + " --json");
    ASSERT_EQ(r.exit_code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["inequalities"].size(), 2u);
    EXPECT_TRUE(j["inequalities"].contains("robertson"));
    EXPECT_TRUE(j["inequalities"].contains("schrodinger"));
    EXPECT_FALSE(j.contains("witness"));
}

TEST(cli, report_non_hermitian_is_input_error) {
    std::string path = write_temp("nonherm.json", R"({"dimension": 2,
      "state": [[1, 0], [0, 0]],
      "A": [[[0, 0], [1, 0]], [[0, 0], [0, 0]]],
      "B": [[[1, 0], [0, 0]], [[0, 0], [-1, 0]]]})");
    CliResult r = run("report " + path);
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.err.find("A: matrix is not Hermitian"), std::string::npos) << r.err;
}

TEST(cli, report_parse_error_is_input_error) {
    std::string path = write_temp("garbage.json", "{ \"dimension\": 2,\n \"state\": ]");
    CliResult r = run("report " + path);
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(cli, report_constraint_violations) {
    std::string path = write_temp("nonorth.json", R"({"dimension": 2,
      "state": [[1, 0], [0, 0]],
      "A": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]],
      "B": [[[1, 0], [0, 0]], [[0, 0], [-1, 0]]],
      "witness": [[0.6, 0], [0.8, 0]]})");
    EXPECT_EQ(run("report " + path).exit_code, 3);

    std::string unnorm = write_temp("unnorm.json", R"({"dimension": 2,
      "state": [[1, 0], [0.1, 0]],
      "A": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]],
      "B": [[[1, 0], [0, 0]], [[0, 0], [-1, 0]]]})");
    EXPECT_EQ(run("report " + unnorm).exit_code, 3);
    // A loose enough tolerance lets it through.
    EXPECT_EQ(run("report " + unnorm + " --tol 0.1").exit_code, 0);
}

TEST(cli, scan_outputs) {
    CliResult full = run("scan --family spin1 --steps 181");
    ASSERT_EQ(full.exit_code, 0) << full.err;
    std::istringstream in(full.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "# schema=1");
    std::getline(in, line);
    EXPECT_EQ(line.rfind("theta,", 0), 0u);
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 181);
    EXPECT_EQ(run("scan --family spin1 --steps 181").out, full.out);

    std::string csv = ::testing::TempDir() + "scan2.csv";
    ASSERT_EQ(run("scan --steps 2 --theta-min 0 --theta-max 1 --output " + csv).exit_code, 0);
    std::istringstream two(slurp(csv));
    int lines = 0;
    while (std::getline(two, line)) ++lines;
    EXPECT_EQ(lines, 4);

    EXPECT_EQ(run("scan --steps 1").exit_code, 2);
    EXPECT_EQ(run("scan --theta-min 2 --theta-max 1").exit_code, 2);
    EXPECT_EQ(run("scan --family spin2").exit_code, 2);
}

TEST(cli, verify_clean_and_deterministic) {
    CliResult a = run("verify --dim 3 --trials 200 --seed 42");
    ASSERT_EQ(a.exit_code, 0) << a.err;
    EXPECT_NE(a.out.find("violations 0"), std::string::npos);
    CliResult once = run("verify --trials 1 --seed 9");
    EXPECT_EQ(once.exit_code, 0);
    EXPECT_EQ(run("verify --trials 1 --seed 9").out, once.out);
    EXPECT_EQ(run("verify --dim 2 --trials 100").exit_code, 0);
    EXPECT_EQ(run("verify --dim 1").exit_code, 2);
}

TEST(cli, optimize_qubit_and_spin1) {
    CliResult q = run("optimize --input " + sample("qubit_xy.json") + " --objective mp_rhs --seed 3");
    ASSERT_EQ(q.exit_code, 0) << q.err;
    json j = json::parse(q.out);
    EXPECT_NEAR(j["objective"].get<double>(), 2.0, 1e-12);
    auto w = j["witness"];
    EXPECT_NEAR(std::hypot(w[1][0].get<double>(), w[1][1].get<double>()), 1.0, 1e-12);
    EXPECT_TRUE(j["report"]["inequalities"].contains("mp_plus"));

    CliResult s = run("optimize --input " + sample("spin1_theta0_nowitness.json") +
                " --objective eq4_rhs --restarts 4 --iters 100 --seed 5");
    ASSERT_EQ(s.exit_code, 0) << s.err;
    EXPECT_GE(json::parse(s.out)["objective"].get<double>(), 1.0 - 1e-12);
    EXPECT_EQ(run("optimize --input " + sample("spin1_theta0_nowitness.json") +
                  " --objective eq4_rhs --restarts 4 --iters 100 --seed 5")
                  .out,
              s.out);
}

TEST(cli, optimize_errors) {
    EXPECT_EQ(run("optimize --input " + sample("qubit_xy.json") + " --objective bogus").exit_code,
              2);
    EXPECT_EQ(run("optimize --input " + sample("spin1_theta0.json")).exit_code, 2);
    EXPECT_EQ(run("optimize").exit_code, 2);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run("").exit_code, 2);
    EXPECT_EQ(run("frobnicate").exit_code, 2);
    EXPECT_EQ(run("--help").exit_code, 0);
}
