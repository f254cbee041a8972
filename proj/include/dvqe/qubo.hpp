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

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dvqe/error.hpp"

namespace dvqe {

// Enumeration cap for the exhaustive oracle; 2^24 keeps it under a few seconds.
inline constexpr std::size_t kBruteForceMaxVars = 24;

/**
 * A QUBO instance: minimize x^T Q x + q^T x + offset over x in {0,1}^n.
 * Q is stored dense row-major and is symmetric after construction.
 */
class QuboProblem {
  public:
    QuboProblem(std::size_t n, std::vector<double> quadratic, std::vector<double> linear,
                double offset = 0.0)
        : n_(n), Q_(std::move(quadratic)), q_(std::move(linear)), offset_(offset) {
        if (n_ == 0) {
            throw ConfigError("QuboProblem: variable count must be >= 1");
        }
        if (Q_.size() != n_ * n_) {
            throw ConfigError("QuboProblem: Q must be " + std::to_string(n_) + "x" +
                              std::to_string(n_));
        }
        if (q_.size() != n_) {
            throw ConfigError("QuboProblem: q length " + std::to_string(q_.size()) +
                              " does not match n=" + std::to_string(n_));
        }
        symmetrize();
    }

    std::size_t num_vars() const { return n_; }
    double quad(std::size_t i, std::size_t j) const { return Q_[i * n_ + j]; }
    double linear(std::size_t i) const { return q_[i]; }
    double offset() const { return offset_; }
    const std::vector<double> &quad_matrix() const { return Q_; }
    const std::vector<double> &linear_vector() const { return q_; }

  private:
    void symmetrize() {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                double s = 0.5 * (Q_[i * n_ + j] + Q_[j * n_ + i]);
                Q_[i * n_ + j] = s;
                Q_[j * n_ + i] = s;
            }
        }
    }

    std::size_t n_;
    std::vector<double> Q_;
    std::vector<double> q_;
    double offset_;
};

/**
 * A unit-commitment instance: each generator runs at a fixed level, turning it
 * on costs a fixed amount, and the selected levels must meet the demand.
 */
struct UcInstance {
    std::vector<double> costs;
    std::vector<double> powers;
    double demand = 0.0;
    double penalty_lambda = 1.0;
    double epsilon_demand = 0.0;

    void validate() const {
        if (costs.empty() || costs.size() != powers.size()) {
            throw ConfigError("UcInstance: costs and powers must have equal length >= 1");
        }
        if (!(penalty_lambda > 0.0)) {
            throw ConfigError("UcInstance: penalty_lambda must be > 0");
        }
        if (epsilon_demand < 0.0) {
            throw ConfigError("UcInstance: epsilon_D must be >= 0");
        }
    }
};

inline double cost(const QuboProblem &p, const std::vector<int> &x) {
    const std::size_t n = p.num_vars();
    if (x.size() != n) {
        throw ConfigError("cost: bit vector length " + std::to_string(x.size()) +
                          " does not match n=" + std::to_string(n));
    }
    double acc = p.offset();
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) {
            continue;
        }
        acc += p.linear(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (x[j] != 0) {
                acc += p.quad(i, j);
            }
        }
    }
    return acc;
}

struct BruteForceResult {
    std::vector<int> best_x;
    double best_cost = 0.0;
};

/**
 * Exhaustive minimization over all 2^n bitstrings. Enumeration follows
 * ascending basis index with bit 0 as the most significant position, which is
 * exactly lexicographic order on bitstrings, so keeping the first strict
 * minimum implements the lexicographic tie-break. Costs are maintained by
 * incremental single-bit flip deltas; the winner is re-evaluated exactly.
 */
inline BruteForceResult brute_force(const QuboProblem &p) {
    const std::size_t n = p.num_vars();
    if (n > kBruteForceMaxVars) {
        throw ConfigError("brute_force: n=" + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(kBruteForceMaxVars));
    }
    const std::uint64_t total = std::uint64_t{1} << n;

    std::vector<int> x(n, 0);
    std::vector<double> row_sum(n, 0.0); // row_sum[k] = sum_j Q_kj x_j
    double value = p.offset();           // cost of the all-zeros assignment
    double best = value;
    std::uint64_t best_index = 0;

    auto flip = [&](std::size_t k) {
        const double s = x[k] ? -1.0 : 1.0;
        value += s * (p.linear(k) + p.quad(k, k) + 2.0 * (row_sum[k] - p.quad(k, k) * x[k]));
        x[k] = 1 - x[k];
        for (std::size_t j = 0; j < n; ++j) {
            row_sum[j] += s * p.quad(j, k);
        }
    };

    for (std::uint64_t b = 1; b < total; ++b) {
        // Binary increment: index bits 0..t flip, where t is the lowest zero of b-1.
        std::uint64_t changed = b ^ (b - 1);
        while (changed != 0) {
            const unsigned ibit = static_cast<unsigned>(std::countr_zero(changed));
            flip(n - 1 - ibit); // index bit ibit holds variable n-1-ibit
            changed &= changed - 1;
        }
        if (value < best) {
            best = value;
            best_index = b;
        }
    }

    BruteForceResult result;
    result.best_x.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        result.best_x[k] = static_cast<int>((best_index >> (n - 1 - k)) & 1u);
    }
    result.best_cost = cost(p, result.best_x);
    return result;
}

/**
 * Encodes sum_i costs_i x_i + lambda * (powers^T x - D)^2 as a QuboProblem:
 * Q = lambda * powers powers^T (diagonal kept quadratic), q = costs - 2 lambda D powers,
 * offset = lambda D^2. Exact for every bitstring.
 */
inline QuboProblem build_uc_qubo(const UcInstance &uc) {
    uc.validate();
    const std::size_t n = uc.costs.size();
    std::vector<double> Q(n * n, 0.0);
    std::vector<double> q(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Q[i * n + j] = uc.penalty_lambda * uc.powers[i] * uc.powers[j];
        }
        q[i] = uc.costs[i] - 2.0 * uc.penalty_lambda * uc.demand * uc.powers[i];
    }
    return QuboProblem(n, std::move(Q), std::move(q), uc.penalty_lambda * uc.demand * uc.demand);
}

namespace detail {

inline std::vector<double> parse_number_row(const nlohmann::json &row, std::size_t expected,
                                            const std::string &where) {
    if (!row.is_array() || row.size() != expected) {
        throw ParseError(where + ": expected an array of " + std::to_string(expected) +
                         " numbers");
    }
    std::vector<double> out;
    out.reserve(expected);
    for (const auto &v : row) {
        if (!v.is_number()) {
            throw ParseError(where + ": non-numeric entry");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

inline nlohmann::json parse_json_text(const std::string &text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace detail

/**
 * Loads `{"Q": [[...]], "q": [...], "offset": 0.0}`; offset is optional.
 * Asymmetric Q is replaced by (Q + Q^T)/2, which leaves every cost unchanged.
 */
inline QuboProblem load_problem(const std::string &text) {
    const nlohmann::json j = detail::parse_json_text(text);
    if (!j.is_object() || !j.contains("Q") || !j.contains("q")) {
        throw ParseError("problem JSON must be an object with fields \"Q\" and \"q\"");
    }
    const auto &jq = j.at("Q");
    if (!jq.is_array() || jq.empty()) {
        throw ParseError("field \"Q\": expected a non-empty array of rows");
    }
    const std::size_t n = jq.size();
    std::vector<double> Q;
    Q.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = detail::parse_number_row(jq.at(i), n, "field \"Q\" row " + std::to_string(i));
        Q.insert(Q.end(), row.begin(), row.end());
    }
    std::vector<double> q = detail::parse_number_row(j.at("q"), n, "field \"q\"");
    double offset = 0.0;
    if (j.contains("offset")) {
        if (!j.at("offset").is_number()) {
            throw ParseError("field \"offset\": expected a number");
        }
        offset = j.at("offset").get<double>();
    }
    return QuboProblem(n, std::move(Q), std::move(q), offset);
}

inline std::string save_problem(const QuboProblem &p) {
    nlohmann::ordered_json j;
    const std::size_t n = p.num_vars();
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < n; ++k) {
            row.push_back(p.quad(i, k));
        }
        rows.push_back(std::move(row));
    }
    j["Q"] = std::move(rows);
    j["q"] = p.linear_vector();
    j["offset"] = p.offset();
    return j.dump();
}

/**
 * Loads `{"costs":[...], "powers":[...], "demand":..., "penalty_lambda":...,
 * "epsilon_D":...}`; epsilon_D is optional and defaults to 0 (exact match).
 */
inline UcInstance load_uc(const std::string &text) {
    const nlohmann::json j = detail::parse_json_text(text);
    if (!j.is_object() || !j.contains("costs") || !j.contains("powers") ||
        !j.contains("demand") || !j.contains("penalty_lambda")) {
        throw ParseError("UC JSON must contain \"costs\", \"powers\", \"demand\", "
                         "\"penalty_lambda\"");
    }
    if (!j.at("costs").is_array() || j.at("costs").empty()) {
        throw ParseError("field \"costs\": expected a non-empty array");
    }
    UcInstance uc;
    uc.costs = detail::parse_number_row(j.at("costs"), j.at("costs").size(), "field \"costs\"");
    uc.powers =
        detail::parse_number_row(j.at("powers"), uc.costs.size(), "field \"powers\"");
    if (!j.at("demand").is_number() || !j.at("penalty_lambda").is_number()) {
        throw ParseError("fields \"demand\" and \"penalty_lambda\" must be numbers");
    }
    uc.demand = j.at("demand").get<double>();
    uc.penalty_lambda = j.at("penalty_lambda").get<double>();
    if (j.contains("epsilon_D")) {
        if (!j.at("epsilon_D").is_number()) {
            throw ParseError("field \"epsilon_D\": expected a number");
        }
        uc.epsilon_demand = j.at("epsilon_D").get<double>();
    }
    uc.validate();
    return uc;
}

inline std::string save_uc(const UcInstance &uc) {
    nlohmann::ordered_json j;
    j["costs"] = uc.costs;
    j["powers"] = uc.powers;
    j["demand"] = uc.demand;
    j["penalty_lambda"] = uc.penalty_lambda;
    j["epsilon_D"] = uc.epsilon_demand;
    return j.dump();
}

} // namespace dvqe
