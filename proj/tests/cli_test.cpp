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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace fs = std::filesystem;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI binary and captures exit code + combined stdout/stderr.
CommandResult run_cli(const std::string &args) {
    static int counter = 0;
    const fs::path capture =
        fs::temp_directory_path() / ("dvqe-cli-capture-" + std::to_string(counter++) + ".txt");
    const std::string cmd =
        std::string(DVQE_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    CommandResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    fs::remove(capture);
    return result;
}

std::string data(const std::string &name) { return std::string(DVQE_DATA_DIR) + "/" + name; }

} // namespace

TEST(Cli, SolveExample1) {
    const fs::path out = fs::temp_directory_path() / "dvqe-cli-ex1";
    fs::remove_all(out);
    const CommandResult result =
        run_cli("solve --problem " + data("ex1.json") +
                " --mode monolithic --depth 2 --init 3 --seed 3 --out " + out.string());
    EXPECT_EQ(result.exit_code, 0) << result.output;
    EXPECT_NE(result.output.find("solution: [0 0 0]"), std::string::npos) << result.output;
    EXPECT_NE(result.output.find("cost: 0"), std::string::npos);
    EXPECT_TRUE(fs::exists(out / "solution.json"));
    EXPECT_TRUE(fs::exists(out / "histogram.json"));
    EXPECT_TRUE(fs::exists(out / "convergence.csv"));
    EXPECT_TRUE(fs::exists(out / "circuit.txt"));
    fs::remove_all(out);
}

TEST(Cli, SolveDistributedWithoutQpusIsConfigError) {
    const CommandResult result = run_cli("solve --mode distributed --problem " +
                                         data("ex2.json") + " --max-iters 5 --out /tmp/x-cli");
    EXPECT_EQ(result.exit_code, 3);
}

TEST(Cli, MalformedProblemIsParseError) {
    const fs::path bad = fs::temp_directory_path() / "dvqe-bad.json";
    {
        std::ofstream f(bad);
        f << "{ not json";
    }
    const CommandResult result =
        run_cli("solve --problem " + bad.string() + " --out /tmp/x-cli2");
    EXPECT_EQ(result.exit_code, 2);
    fs::remove(bad);
}

TEST(Cli, UnknownFlagValueIsConfigError) {
    const CommandResult result =
        run_cli("solve --problem " + data("ex1.json") + " --init 9 --out /tmp/x-cli3");
    EXPECT_EQ(result.exit_code, 3);
}

TEST(Cli, InfeasibleUnitCommitmentExitsFive) {
    const fs::path uc = fs::temp_directory_path() / "dvqe-uc-infeasible.json";
    {
        std::ofstream f(uc);
        f << R"({"costs":[1],"powers":[10],"demand":25,"penalty_lambda":5,"epsilon_D":0})";
    }
    const CommandResult result =
        run_cli("solve --uc --problem " + uc.string() +
                " --pop 4 --meta-iters 3 --max-iters 5 --out /tmp/x-cli4");
    EXPECT_EQ(result.exit_code, 5) << result.output;
    EXPECT_NE(result.output.find("feasible: false"), std::string::npos);
    fs::remove(uc);
}

TEST(Cli, BruteSubcommand) {
    const CommandResult ex3 = run_cli("brute --problem " + data("ex3.json"));
    EXPECT_EQ(ex3.exit_code, 0);
    EXPECT_NE(ex3.output.find("solution: [1 0 0 0 1]"), std::string::npos);
    EXPECT_NE(ex3.output.find("cost: -4"), std::string::npos);

    const CommandResult ex4 = run_cli("brute --problem " + data("ex4.json"));
    EXPECT_NE(ex4.output.find("solution: [0 0 0 0 0 0 0 0]"), std::string::npos);
    EXPECT_NE(ex4.output.find("cost: 0"), std::string::npos);
}

TEST(Cli, FidelityPrintsTwelveDecimals) {
    const CommandResult result = run_cli("fidelity --n 6 --depth 2 --qpus 2,2,2 --seed 5");
    EXPECT_EQ(result.exit_code, 0);
    EXPECT_EQ(result.output, "1.000000000000\n");
}

TEST(Cli, RemapShowsTelegateStructure) {
    const CommandResult result = run_cli("remap --n 6 --depth 2 --qpus 2,2,2");
    EXPECT_EQ(result.exit_code, 0);
    EXPECT_NE(result.output.find("# q2 QPU0.comm"), std::string::npos) << result.output;
    EXPECT_NE(result.output.find(" TG"), std::string::npos);
    EXPECT_NE(result.output.find("RY q0 theta[0]"), std::string::npos);
}

TEST(Cli, UcBuildRoundTripsThroughBrute) {
    const fs::path qubo = fs::temp_directory_path() / "dvqe-s1-qubo.json";
    const CommandResult build =
        run_cli("uc-build --problem " + data("scenario1.json") + " --out " + qubo.string());
    EXPECT_EQ(build.exit_code, 0) << build.output;
    const CommandResult brute = run_cli("brute --problem " + qubo.string());
    EXPECT_EQ(brute.exit_code, 0);
    EXPECT_NE(brute.output.find("solution: [0 0 1 1 1]"), std::string::npos) << brute.output;
    EXPECT_NE(brute.output.find("cost: 45"), std::string::npos);
    fs::remove(qubo);
}

TEST(Cli, NoSubcommandIsConfigError) {
    const CommandResult result = run_cli("");
    EXPECT_EQ(result.exit_code, 3);
}
