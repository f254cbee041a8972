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

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dvqe/circuit.hpp"
#include "dvqe/error.hpp"
#include "dvqe/hamiltonian.hpp"
#include "dvqe/qubo.hpp"
#include "dvqe/sampler.hpp"
#include "dvqe/telegate.hpp"
#include "dvqe/topology.hpp"
#include "dvqe/trainer.hpp"
#include "dvqe/warm_start.hpp"

namespace dvqe {

enum class RunMode { monolithic, distributed };

/**
 * Full solver configuration. All randomness derives from `seed`, split into
 * named streams (warm start, sampling, stochastic TeleGate), so toggling one
 * stage never reshuffles the others.
 */
struct RunConfig {
    RunMode mode = RunMode::monolithic;
    std::string problem_path;
    bool uc = false; // problem file is a unit-commitment instance
    std::size_t depth = 2;
    int init_type = 4;
    double lr = 0.05;
    std::size_t max_iters = 200;
    double rel_tol = 1e-3;
    std::vector<std::size_t> qpus; // compute qubits per QPU (distributed only)
    std::uint64_t shots = 4000;
    std::uint64_t seed = 1;
    TelegateMode telegate = TelegateMode::deferred;
    std::string out_dir; // artifacts skipped when empty
    std::size_t meta_population = 20;
    std::size_t meta_iters = 50;
    std::size_t abc_limit = 20;
    double fd_step = 1e-2;
};

struct RunResult {
    std::vector<int> z;
    double cost = 0.0;
    bool feasible = true;
    bool converged = false;
    std::size_t iterations = 0;
    double initial_energy = 0.0;
    double final_energy = 0.0;
    Histogram histogram;
    TrainHistory history;
    std::string solution_path;
    std::string histogram_path;
    std::string history_path;
    std::string circuit_path;
};

namespace detail {

inline std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ConfigError("cannot write file: " + path);
    }
    out << content;
    if (!out) {
        throw ConfigError("write failed: " + path);
    }
}

struct LoadedProblem {
    QuboProblem problem;
    std::optional<UcFilter> uc_filter;
};

inline LoadedProblem load_problem_file(const std::string &path, bool uc) {
    const std::string text = read_text_file(path);
    if (uc) {
        const UcInstance instance = load_uc(text);
        return {build_uc_qubo(instance),
                UcFilter{instance.powers, instance.demand, instance.epsilon_demand}};
    }
    return {load_problem(text), std::nullopt};
}

} // namespace detail

/**
 * The end-to-end solver: load -> Ising mapping -> topology -> warm start ->
 * ansatz (+ TeleGate remap) -> ADAM training -> sampling -> selection, with
 * optional artifact emission (solution.json, histogram.json, convergence.csv,
 * circuit.txt). Identical configuration and seed reproduce identical bytes.
 */
inline RunResult run_dvqe(const RunConfig &cfg) {
    auto [problem, uc_filter] = detail::load_problem_file(cfg.problem_path, cfg.uc);
    const IsingHamiltonian ham = qubo_to_hamiltonian(problem);
    const std::size_t n = problem.num_vars();

    std::optional<Topology> topology;
    if (cfg.mode == RunMode::distributed) {
        if (cfg.qpus.empty()) {
            throw ConfigError("distributed mode requires a QPU configuration");
        }
        std::size_t total = 0;
        for (std::size_t c : cfg.qpus) {
            total += c;
        }
        if (total != n) {
            throw ConfigError("QPU compute-qubit sum " + std::to_string(total) +
                              " does not match problem size " + std::to_string(n));
        }
        topology.emplace(cfg.qpus);
    }

    const Circuit mono = build_monolithic_ansatz({n, cfg.depth});
    std::optional<Circuit> dist;
    if (topology) {
        dist = remap(mono, *topology);
    }

    const bool stochastic = topology && cfg.telegate == TelegateMode::stochastic;
    std::optional<EnergyEvaluator> exact_eval;
    std::optional<StochasticEnergyEvaluator> stochastic_eval;
    if (!topology) {
        exact_eval.emplace(mono, ham);
    } else if (!stochastic) {
        exact_eval.emplace(*dist, ham, *topology);
    } else {
        stochastic_eval.emplace(mono, ham, *topology,
                                derive_stream_seed(cfg.seed, "telegate", 0));
    }
    auto evaluate = [&](std::span<const double> theta) {
        return stochastic ? (*stochastic_eval)(theta) : (*exact_eval)(theta);
    };

    InitConfig init_cfg;
    init_cfg.init_type = cfg.init_type;
    init_cfg.population = cfg.meta_population;
    init_cfg.max_iter = cfg.meta_iters;
    init_cfg.seed = cfg.seed;
    init_cfg.abc_limit = cfg.abc_limit;
    const WarmStartResult start = warm_start(evaluate, mono.n_params, init_cfg);

    TrainConfig train_cfg;
    train_cfg.lr = cfg.lr;
    train_cfg.max_iters = cfg.max_iters;
    train_cfg.rel_tol = cfg.rel_tol;
    train_cfg.fd_step = cfg.fd_step;
    auto [theta_star, history] = train(evaluate, start.theta, train_cfg);

    Histogram histogram;
    const std::uint64_t sampling_seed = derive_stream_seed(cfg.seed, "sampling", 0);
    if (!topology) {
        histogram = execute_and_sample(mono, theta_star, cfg.shots, sampling_seed);
    } else if (!stochastic) {
        histogram = execute_and_sample(*dist, *topology, theta_star, cfg.shots, sampling_seed);
    } else {
        const StateVector compute = run_stochastic_telegate(
            mono, *topology, theta_star, derive_stream_seed(cfg.seed, "telegate", 1));
        Rng rng(sampling_seed);
        histogram = sample_state_histogram(compute, cfg.shots, rng);
    }

    SelectionConfig select_cfg;
    select_cfg.shots = cfg.shots;
    select_cfg.uc_filter = uc_filter;
    const SelectionResult selection = select_solution(histogram, ham, select_cfg);

    RunResult result;
    result.z = selection.z;
    result.cost = selection.cost;
    result.feasible = selection.feasible;
    result.converged = history.converged;
    result.iterations = history.iterations_used;
    result.initial_energy = history.energies.empty() ? start.energy : history.energies.front();
    result.final_energy = history.energies.empty() ? start.energy : history.energies.back();
    result.histogram = histogram;
    result.history = history;

    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        const std::filesystem::path out(cfg.out_dir);
        result.solution_path = (out / "solution.json").string();
        result.histogram_path = (out / "histogram.json").string();
        result.history_path = (out / "convergence.csv").string();
        result.circuit_path = (out / "circuit.txt").string();
        detail::write_text_file(result.solution_path, solution_to_json(selection, cfg.shots));
        detail::write_text_file(result.histogram_path, histogram_to_json(histogram));
        detail::write_text_file(result.history_path, history_to_csv(history));
        if (topology) {
            detail::write_text_file(result.circuit_path,
                                    render_text(*dist, topology->qubit_labels(),
                                                topology->comm_mask()));
        } else {
            detail::write_text_file(result.circuit_path, render_text(mono));
        }
    }
    return result;
}

// Monolithic/distributed equivalence check with a seeded random parameter set.
inline double run_fidelity(std::size_t n, std::size_t depth,
                           const std::vector<std::size_t> &qpus, std::uint64_t seed) {
    std::size_t total = 0;
    for (std::size_t c : qpus) {
        total += c;
    }
    if (qpus.empty() || total != n) {
        throw ConfigError("fidelity: QPU compute-qubit sum must equal n");
    }
    const Topology topology(qpus);
    const std::vector<double> theta =
        random_init(n * depth, derive_stream_seed(seed, "fidelity-theta", 0));
    return verify_equivalence({n, depth}, topology, theta);
}

inline BruteForceResult run_brute(const std::string &problem_path, bool uc) {
    auto [problem, filter] = detail::load_problem_file(problem_path, uc);
    return brute_force(problem);
}

} // namespace dvqe
