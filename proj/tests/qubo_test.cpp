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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "dvqe/qubo.hpp"
#include "test_util.hpp"

using namespace dvqe;
namespace tt = dvqe::testing;

TEST(Cost, Example1Zeros) {
    const QuboProblem p = tt::example1();
    EXPECT_DOUBLE_EQ(cost(p, {0, 0, 0}), 0.0);
}

TEST(Cost, SingleBit) {
    const QuboProblem p = tt::example1();
    EXPECT_DOUBLE_EQ(cost(p, {1, 0, 0}), 1.0); // Q00 + q0 = 2 - 1
}

TEST(Cost, Example3Optimum) {
    const QuboProblem p = tt::example3();
    EXPECT_DOUBLE_EQ(cost(p, {1, 0, 0, 0, 1}), -4.0);
}

TEST(Cost, LengthMismatchThrows) {
    const QuboProblem p = tt::example1();
    EXPECT_THROW(cost(p, {0, 0}), ConfigError);
}

TEST(Cost, InvariantUnderSymmetrization) {
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto Q = tt::random_matrix(n, rng);
        const auto q = tt::random_vector(n, rng);
        const QuboProblem p(n, Q, q, 0.25);
        for (std::uint64_t b = 0; b < (1u << n); ++b) {
            const auto x = tt::bits_of(b, n);
            EXPECT_NEAR(cost(p, x), tt::raw_objective(Q, q, 0.25, x), 1e-12);
        }
    }
}

TEST(BruteForce, Example2) {
    const auto result = brute_force(tt::example2());
    EXPECT_EQ(result.best_x, (std::vector<int>{0, 1, 1, 0}));
    EXPECT_DOUBLE_EQ(result.best_cost, -1.0);
}

TEST(BruteForce, AllPositiveLinear) {
    const QuboProblem p(2, {0, 0, 0, 0}, {1, 1});
    const auto result = brute_force(p);
    EXPECT_EQ(result.best_x, (std::vector<int>{0, 0}));
    EXPECT_DOUBLE_EQ(result.best_cost, 0.0);
}

TEST(BruteForce, Example1TieBreaksLexicographically) {
    const QuboProblem p = tt::example1();
    // Both assignments reach the optimum; the smaller one must win.
    EXPECT_DOUBLE_EQ(cost(p, {0, 0, 0}), 0.0);
    EXPECT_DOUBLE_EQ(cost(p, {0, 0, 1}), 0.0);
    const auto result = brute_force(p);
    EXPECT_EQ(result.best_x, (std::vector<int>{0, 0, 0}));
    EXPECT_DOUBLE_EQ(result.best_cost, 0.0);
}

TEST(BruteForce, CapacityError) {
    const std::size_t n = 25;
    const QuboProblem p(n, std::vector<double>(n * n, 0.0), std::vector<double>(n, 0.0));
    EXPECT_THROW(brute_force(p), ConfigError);
}

TEST(BruteForce, LowerBoundsRandomAssignments) {
    std::mt19937_64 rng(99);
    const QuboProblem p = tt::random_qubo(12, rng);
    const auto result = brute_force(p);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> x(12);
        for (int &v : x) {
            v = bit(rng);
        }
        EXPECT_LE(result.best_cost, cost(p, x) + 1e-9);
    }
}

TEST(BruteForce, MatchesNaiveEnumeration) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(trial);
        const QuboProblem p = tt::random_qubo(n, rng);
        double best = cost(p, tt::bits_of(0, n));
        std::uint64_t best_b = 0;
        for (std::uint64_t b = 1; b < (1u << n); ++b) {
            const double c = cost(p, tt::bits_of(b, n));
            if (c < best) {
                best = c;
                best_b = b;
            }
        }
        const auto result = brute_force(p);
        EXPECT_EQ(result.best_x, tt::bits_of(best_b, n));
        EXPECT_NEAR(result.best_cost, best, 1e-12);
    }
}

namespace {

double penalized_objective(const UcInstance &uc, const std::vector<int> &x) {
    double linear = 0.0;
    double power = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        linear += uc.costs[i] * x[i];
        power += uc.powers[i] * x[i];
    }
    const double gap = power - uc.demand;
    return linear + uc.penalty_lambda * gap * gap;
}

UcInstance scenario1() { return {{10, 20, 15, 13, 17}, {30, 40, 20, 25, 35}, 80.0, 100.0, 0.0}; }

UcInstance scenario3() {
    return {{10, 20, 15, 13, 17, 11, 18, 16}, {30, 40, 20, 25, 35, 30, 45, 50}, 160.0, 100.0,
            0.0};
}

} // namespace

TEST(BuildUcQubo, Scenario1OptimumFromEnumeration) {
    const UcInstance uc = scenario1();
    const QuboProblem qubo = build_uc_qubo(uc);

    // Exhaustive oracle over the penalized objective itself.
    double best = penalized_objective(uc, tt::bits_of(0, 5));
    std::uint64_t best_b = 0;
    for (std::uint64_t b = 1; b < 32; ++b) {
        const double c = penalized_objective(uc, tt::bits_of(b, 5));
        if (c < best) {
            best = c;
            best_b = b;
        }
    }
    EXPECT_EQ(tt::bits_of(best_b, 5), (std::vector<int>{0, 0, 1, 1, 1}));
    EXPECT_DOUBLE_EQ(best, 45.0); // generators {2,3,4}: powers 20+25+35 = 80, costs 15+13+17

    const auto result = brute_force(qubo);
    EXPECT_EQ(result.best_x, (std::vector<int>{0, 0, 1, 1, 1}));
    EXPECT_DOUBLE_EQ(result.best_cost, 45.0);
}

TEST(BuildUcQubo, SingleGenerator) {
    const UcInstance uc{{5}, {10}, 10.0, 1.0, 0.0};
    const auto result = brute_force(build_uc_qubo(uc));
    EXPECT_EQ(result.best_x, (std::vector<int>{1}));
    EXPECT_DOUBLE_EQ(result.best_cost, 5.0);
}

TEST(BuildUcQubo, Scenario3MeetsDemandExactly) {
    const UcInstance uc = scenario3();
    const auto result = brute_force(build_uc_qubo(uc));
    double power = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        power += uc.powers[i] * result.best_x[i];
    }
    EXPECT_DOUBLE_EQ(power, 160.0);
}

TEST(BuildUcQubo, ExactOnEveryBitstring) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> costs_dist(1.0, 30.0);
    std::uniform_real_distribution<double> powers_dist(5.0, 60.0);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 9);
        UcInstance uc;
        for (std::size_t i = 0; i < n; ++i) {
            uc.costs.push_back(costs_dist(rng));
            uc.powers.push_back(powers_dist(rng));
        }
        uc.demand = powers_dist(rng) * 2.0;
        uc.penalty_lambda = 100.0;
        const QuboProblem qubo = build_uc_qubo(uc);
        for (std::uint64_t b = 0; b < (1u << n); ++b) {
            const auto x = tt::bits_of(b, n);
            const double expected = penalized_objective(uc, x);
            const double got = cost(qubo, x);
            EXPECT_NEAR(got, expected, 1e-9 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST(BuildUcQubo, RejectsInvalidInstances) {
    EXPECT_THROW(build_uc_qubo({{1}, {1, 2}, 1.0, 1.0, 0.0}), ConfigError);
    EXPECT_THROW(build_uc_qubo({{1}, {1}, 1.0, 0.0, 0.0}), ConfigError);
    EXPECT_THROW(build_uc_qubo({{}, {}, 1.0, 1.0, 0.0}), ConfigError);
    EXPECT_THROW(build_uc_qubo({{1}, {1}, 1.0, 1.0, -0.5}), ConfigError);
}

TEST(ProblemIo, TrivialSingleVariable) {
    const QuboProblem p = load_problem(R"({"Q":[[0]],"q":[0]})");
    EXPECT_EQ(p.num_vars(), 1u);
    EXPECT_DOUBLE_EQ(cost(p, {1}), 0.0);
}

TEST(ProblemIo, Example1RoundTrip) {
    const QuboProblem p = tt::example1();
    const QuboProblem q = load_problem(save_problem(p));
    EXPECT_EQ(q.num_vars(), p.num_vars());
    EXPECT_EQ(q.quad_matrix(), p.quad_matrix());
    EXPECT_EQ(q.linear_vector(), p.linear_vector());
    EXPECT_DOUBLE_EQ(q.offset(), p.offset());
}

TEST(ProblemIo, AsymmetricInputIsSymmetrized) {
    const QuboProblem p = load_problem(R"({"Q":[[0,2],[0,0]],"q":[0,0]})");
    EXPECT_DOUBLE_EQ(p.quad(0, 1), 1.0);
    EXPECT_DOUBLE_EQ(p.quad(1, 0), 1.0);
    // Every cost stays what the raw asymmetric matrix would give.
    const std::vector<double> raw{0, 2, 0, 0};
    for (std::uint64_t b = 0; b < 4; ++b) {
        const auto x = tt::bits_of(b, 2);
        EXPECT_DOUBLE_EQ(cost(p, x), tt::raw_objective(raw, {0, 0}, 0.0, x));
    }
    EXPECT_DOUBLE_EQ(cost(p, {1, 1}), 2.0);
}

TEST(ProblemIo, ParseErrors) {
    EXPECT_THROW(load_problem("not json"), ParseError);
    EXPECT_THROW(load_problem(R"({"q":[0]})"), ParseError);
    EXPECT_THROW(load_problem(R"({"Q":[[0,1]],"q":[0]})"), ParseError);       // non-square
    EXPECT_THROW(load_problem(R"({"Q":[[0]],"q":[0,1]})"), ParseError);       // q length
    EXPECT_THROW(load_problem(R"({"Q":[[0]],"q":[0],"offset":"x"})"), ParseError);
}

TEST(ProblemIo, UcRoundTrip) {
    const UcInstance uc = scenario1();
    const UcInstance loaded = load_uc(save_uc(uc));
    EXPECT_EQ(loaded.costs, uc.costs);
    EXPECT_EQ(loaded.powers, uc.powers);
    EXPECT_DOUBLE_EQ(loaded.demand, uc.demand);
    EXPECT_DOUBLE_EQ(loaded.penalty_lambda, uc.penalty_lambda);
    EXPECT_DOUBLE_EQ(loaded.epsilon_demand, uc.epsilon_demand);
}

TEST(ProblemIo, UcParseErrors) {
    EXPECT_THROW(load_uc(R"({"costs":[1]})"), ParseError);
    EXPECT_THROW(load_uc(R"({"costs":[1],"powers":[1,2],"demand":1,"penalty_lambda":1})"),
                 ParseError);
}
