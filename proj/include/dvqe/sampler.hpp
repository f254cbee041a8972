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

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "dvqe/circuit.hpp"
#include "dvqe/error.hpp"
#include "dvqe/hamiltonian.hpp"
#include "dvqe/rng.hpp"
#include "dvqe/statevector.hpp"
#include "dvqe/topology.hpp"

namespace dvqe {

// Counts per sampled compute-qubit bitstring; keys sorted lexicographically.
using Histogram = std::map<std::string, std::uint64_t>;

struct UcFilter {
    std::vector<double> powers;
    double demand = 0.0;
    double epsilon = 0.0; // exact demand match by default
};

struct SelectionConfig {
    std::uint64_t shots = 4000;
    std::optional<UcFilter> uc_filter;
};

inline std::vector<int> bitstring_to_bits(const std::string &key) {
    std::vector<int> bits(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) {
        bits[i] = key[i] == '1' ? 1 : 0;
    }
    return bits;
}

// Histogram of a state that holds compute qubits only.
inline Histogram sample_state_histogram(const StateVector &state, std::uint64_t shots,
                                        Rng &rng) {
    Histogram histogram;
    for (const auto &[index, count] : state.sample(shots, rng)) {
        histogram[index_to_bitstring(index, state.num_qubits())] += count;
    }
    return histogram;
}

inline Histogram execute_and_sample(const Circuit &circuit, std::span<const double> theta,
                                    std::uint64_t shots, std::uint64_t seed) {
    const StateVector state = bind_and_run(circuit, theta);
    Rng rng(seed);
    return sample_state_histogram(state, shots, rng);
}

/**
 * Runs the distributed circuit on the joint register, samples it, and
 * projects every sample onto the compute qubits in global variable order.
 * The communication qubits carry zero probability mass when the TeleGate
 * protocol is intact, so a sampled comm bit of 1 is a protocol violation.
 */
inline Histogram execute_and_sample(const Circuit &distributed_circuit,
                                    const Topology &topology, std::span<const double> theta,
                                    std::uint64_t shots, std::uint64_t seed) {
    if (distributed_circuit.n_qubits != topology.n_total()) {
        throw ConfigError("execute_and_sample: circuit does not match topology");
    }
    const StateVector state = bind_and_run(distributed_circuit, theta);
    Rng rng(seed);
    const std::size_t n_total = topology.n_total();
    const auto &order = topology.compute_order();

    std::size_t comm_mask = 0;
    for (std::size_t k = 0; k < topology.num_qpus(); ++k) {
        comm_mask |= std::size_t{1} << (n_total - 1 - topology.comm_of(k));
    }

    Histogram histogram;
    for (const auto &[index, count] : state.sample(shots, rng)) {
        if ((index & comm_mask) != 0) {
            throw NumericError("execute_and_sample: sampled a communication qubit in |1> "
                               "(TeleGate protocol violation)");
        }
        std::string key(order.size(), '0');
        for (std::size_t v = 0; v < order.size(); ++v) {
            if ((index >> (n_total - 1 - order[v])) & 1u) {
                key[v] = '1';
            }
        }
        histogram[key] += count;
    }
    return histogram;
}

struct SelectionResult {
    std::vector<int> z;
    double cost = 0.0;
    bool feasible = true;
};

/**
 * Picks the minimum-energy bitstring over the sampled support, restricted to
 * |powers^T z - D| <= epsilon when the unit-commitment filter is active.
 * Ties go to the lexicographically smallest bitstring. When the filter
 * empties the support the unfiltered optimum is returned with feasible=false
 * so callers can report the infeasibility along with the best candidate.
 */
inline SelectionResult select_solution(const Histogram &histogram, const IsingHamiltonian &ham,
                                       const SelectionConfig &cfg) {
    if (histogram.empty()) {
        throw ConfigError("select_solution: empty histogram");
    }
    if (cfg.uc_filter && cfg.uc_filter->powers.size() != ham.n) {
        throw ConfigError("select_solution: filter powers length does not match n");
    }

    bool have_feasible = false;
    std::string best_feasible;
    double best_feasible_energy = 0.0;
    bool have_any = false;
    std::string best_any;
    double best_any_energy = 0.0;

    for (const auto &[key, count] : histogram) {
        if (key.size() != ham.n) {
            throw ConfigError("select_solution: bitstring length does not match Hamiltonian");
        }
        const std::vector<int> bits = bitstring_to_bits(key);
        const double e = energy_of_bitstring(ham, bits);
        if (!have_any || e < best_any_energy) { // map order makes ties lexicographic
            have_any = true;
            best_any = key;
            best_any_energy = e;
        }
        bool feasible = true;
        if (cfg.uc_filter) {
            double power = 0.0;
            for (std::size_t i = 0; i < bits.size(); ++i) {
                power += cfg.uc_filter->powers[i] * bits[i];
            }
            feasible = std::abs(power - cfg.uc_filter->demand) <= cfg.uc_filter->epsilon;
        }
        if (feasible && (!have_feasible || e < best_feasible_energy)) {
            have_feasible = true;
            best_feasible = key;
            best_feasible_energy = e;
        }
    }

    SelectionResult result;
    if (have_feasible) {
        result.z = bitstring_to_bits(best_feasible);
        result.cost = best_feasible_energy;
        result.feasible = true;
    } else {
        result.z = bitstring_to_bits(best_any);
        result.cost = best_any_energy;
        result.feasible = false;
    }
    return result;
}

inline std::string histogram_to_json(const Histogram &histogram) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto &[key, count] : histogram) { // map iteration is already sorted
        j[key] = count;
    }
    return j.dump();
}

inline std::string solution_to_json(const SelectionResult &result, std::uint64_t shots) {
    nlohmann::ordered_json j;
    j["z"] = result.z;
    j["cost"] = result.cost;
    j["feasible"] = result.feasible;
    j["shots"] = shots;
    return j.dump();
}

} // namespace dvqe
