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

#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "dvqe/sampler.hpp"
#include "dvqe/telegate.hpp"
#include "test_util.hpp"

using namespace dvqe;
namespace tt = dvqe::testing;

TEST(ExecuteAndSample, ZeroThetaIsPointMass) {
    const Circuit c = build_monolithic_ansatz({3, 2});
    const std::vector<double> theta(c.n_params, 0.0);
    const Histogram histogram = execute_and_sample(c, theta, 1000, 5);
    ASSERT_EQ(histogram.size(), 1u);
    EXPECT_EQ(histogram.at("000"), 1000u);
}

TEST(ExecuteAndSample, BellLikeStateHasTwoKeys) {
    const Circuit c = build_monolithic_ansatz({2, 1});
    const std::vector<double> theta{std::numbers::pi / 2.0, 0.0};
    const Histogram histogram = execute_and_sample(c, theta, 4000, 11);
    ASSERT_EQ(histogram.size(), 2u);
    EXPECT_TRUE(histogram.count("00"));
    EXPECT_TRUE(histogram.count("11"));
    EXPECT_EQ(histogram.at("00") + histogram.at("11"), 4000u);
}

TEST(ExecuteAndSample, FixedSeedReplays) {
    const Circuit c = build_monolithic_ansatz({4, 2});
    const std::vector<double> theta(c.n_params, 0.9);
    EXPECT_EQ(execute_and_sample(c, theta, 2000, 77), execute_and_sample(c, theta, 2000, 77));
}

TEST(ExecuteAndSample, DistributedProjectsOntoComputeBits) {
    const Circuit mono = build_monolithic_ansatz({4, 2});
    const Topology topo({2, 2});
    const Circuit dist = remap(mono, topo);
    const std::vector<double> theta(mono.n_params, 1.1);
    const Histogram from_mono = execute_and_sample(mono, theta, 4000, 42);
    const Histogram from_dist = execute_and_sample(dist, topo, theta, 4000, 42);
    // Comm qubits carry no probability, so the joint CDF collapses onto the
    // compute outcomes and the same seed reproduces the same histogram.
    EXPECT_EQ(from_mono, from_dist);
}

TEST(ExecuteAndSample, CommBitViolationIsAnError) {
    const Topology topo({1, 1});
    Circuit broken;
    broken.n_qubits = topo.n_total();
    broken.gates.push_back(Gate::x(topo.comm_of(0))); // deliberately corrupt a comm qubit
    const std::vector<double> theta;
    EXPECT_THROW(execute_and_sample(broken, topo, theta, 10, 1), NumericError);
}

TEST(SelectSolution, PointMassOnExample1) {
    const IsingHamiltonian ham = qubo_to_hamiltonian(tt::example1());
    Histogram histogram{{"000", 4000}};
    const SelectionResult result = select_solution(histogram, ham, {});
    EXPECT_EQ(result.z, (std::vector<int>{0, 0, 0}));
    EXPECT_NEAR(result.cost, 0.0, 1e-12);
    EXPECT_TRUE(result.feasible);
}

TEST(SelectSolution, PicksLowerEnergyKeyOnExample2) {
    const IsingHamiltonian ham = qubo_to_hamiltonian(tt::example2());
    Histogram histogram{{"0110", 3}, {"1111", 3997}};
    const SelectionResult result = select_solution(histogram, ham, {});
    EXPECT_EQ(result.z, (std::vector<int>{0, 1, 1, 0}));
    EXPECT_NEAR(result.cost, -1.0, 1e-12);
}

TEST(SelectSolution, SelectionIgnoresCounts) {
    const IsingHamiltonian ham = qubo_to_hamiltonian(tt::example2());
    Histogram a{{"0110", 1}, {"0000", 9999}};
    Histogram b{{"0110", 9999}, {"0000", 1}};
    EXPECT_EQ(select_solution(a, ham, {}).z, select_solution(b, ham, {}).z);
}

TEST(SelectSolution, TieBreaksLexicographically) {
    IsingHamiltonian flat;
    flat.n = 2;
    flat.h = {0.0, 0.0};
    Histogram histogram{{"10", 5}, {"01", 5}};
    const SelectionResult result = select_solution(histogram, flat, {});
    EXPECT_EQ(result.z, (std::vector<int>{0, 1}));
}

TEST(SelectSolution, UcFilterExcludesWrongPowerSums) {
    const UcInstance uc = tt::uc_scenario(1);
    const IsingHamiltonian ham = qubo_to_hamiltonian(build_uc_qubo(uc));
    SelectionConfig cfg;
    cfg.uc_filter = UcFilter{uc.powers, uc.demand, 0.0};

    // 00111 meets the demand exactly (20+25+35=80); the others do not.
    Histogram histogram{{"00111", 10}, {"11000", 2000}, {"00011", 1990}};
    const SelectionResult result = select_solution(histogram, ham, cfg);
    EXPECT_TRUE(result.feasible);
    EXPECT_EQ(result.z, (std::vector<int>{0, 0, 1, 1, 1}));
    EXPECT_NEAR(result.cost, 45.0, 1e-9);

    // Direct power-sum check of the filter decision for every key.
    for (const auto &[key, count] : histogram) {
        double power = 0.0;
        for (std::size_t i = 0; i < key.size(); ++i) {
            power += uc.powers[i] * (key[i] == '1');
        }
        EXPECT_EQ(power == uc.demand, key == "00111");
    }
}

TEST(SelectSolution, InfiniteEpsilonIsNoFilter) {
    const UcInstance uc = tt::uc_scenario(1);
    const IsingHamiltonian ham = qubo_to_hamiltonian(build_uc_qubo(uc));
    Histogram histogram{{"11000", 1}, {"00111", 1}, {"10101", 1}};

    SelectionConfig wide;
    wide.uc_filter = UcFilter{uc.powers, uc.demand, std::numeric_limits<double>::infinity()};
    const SelectionResult filtered = select_solution(histogram, ham, wide);
    const SelectionResult plain = select_solution(histogram, ham, {});
    EXPECT_EQ(filtered.z, plain.z);
    EXPECT_TRUE(filtered.feasible);
}

TEST(SelectSolution, EmptyFeasibleSetReportsInfeasible) {
    const UcInstance uc = tt::uc_scenario(1);
    const IsingHamiltonian ham = qubo_to_hamiltonian(build_uc_qubo(uc));
    SelectionConfig cfg;
    cfg.uc_filter = UcFilter{uc.powers, uc.demand, 0.0};
    Histogram histogram{{"11000", 3000}, {"00011", 1000}}; // neither meets demand
    const SelectionResult result = select_solution(histogram, ham, cfg);
    EXPECT_FALSE(result.feasible);
    // Diagnostics carry the unfiltered argmin.
    const double e_a = energy_of_bitstring(ham, bitstring_to_bits("11000"));
    const double e_b = energy_of_bitstring(ham, bitstring_to_bits("00011"));
    EXPECT_EQ(result.z, bitstring_to_bits(e_a <= e_b ? "11000" : "00011"));
}

TEST(SelectSolution, EmptyHistogramThrows) {
    const IsingHamiltonian ham = qubo_to_hamiltonian(tt::example1());
    EXPECT_THROW(select_solution({}, ham, {}), ConfigError);
}

TEST(SelectSolution, NeverBeatsBruteForce) {
    const QuboProblem p = tt::example3();
    const IsingHamiltonian ham = qubo_to_hamiltonian(p);
    const double optimum = brute_force(p).best_cost;
    Histogram histogram{{"00000", 1}, {"10001", 1}, {"11111", 1}, {"01010", 1}};
    const SelectionResult result = select_solution(histogram, ham, {});
    EXPECT_GE(result.cost, optimum - 1e-12);
    EXPECT_NEAR(result.cost, optimum, 1e-12); // the optimum is in the support here
}

TEST(Serialization, HistogramKeysSorted) {
    Histogram histogram{{"10", 1}, {"00", 2}, {"11", 3}};
    EXPECT_EQ(histogram_to_json(histogram), R"({"00":2,"10":1,"11":3})");
}

TEST(Serialization, SolutionReportShape) {
    SelectionResult result;
    result.z = {0, 1};
    result.cost = -1.5;
    result.feasible = true;
    EXPECT_EQ(solution_to_json(result, 4000),
              R"({"z":[0,1],"cost":-1.5,"feasible":true,"shots":4000})");
}
