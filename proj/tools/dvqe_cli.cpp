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

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dvqe/dvqe.hpp"

namespace {

// Exit codes: 0 ok, 2 parse, 3 config, 4 numeric, 5 infeasible.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitInfeasible = 5;

std::string bits_to_string(const std::vector<int> &bits) {
    std::string out = "[";
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i > 0) {
            out += " ";
        }
        out += std::to_string(bits[i]);
    }
    out += "]";
    return out;
}

struct SolveArgs {
    std::string mode = "monolithic";
    std::string problem;
    bool uc = false;
    std::size_t depth = 2;
    int init_type = 4;
    double lr = 0.05;
    std::size_t max_iters = 200;
    double rel_tol = 1e-3;
    std::vector<std::size_t> qpus;
    std::uint64_t shots = 4000;
    std::uint64_t seed = 1;
    std::string telegate = "deferred";
    std::string out_dir = "dvqe-out";
    std::size_t pop = 20;
    std::size_t meta_iters = 50;
    std::size_t abc_limit = 20;
    double fd_step = 1e-2;
};

int do_solve(const SolveArgs &args) {
    dvqe::RunConfig cfg;
    cfg.mode = args.mode == "distributed" ? dvqe::RunMode::distributed
                                          : dvqe::RunMode::monolithic;
    cfg.problem_path = args.problem;
    cfg.uc = args.uc;
    cfg.depth = args.depth;
    cfg.init_type = args.init_type;
    cfg.lr = args.lr;
    cfg.max_iters = args.max_iters;
    cfg.rel_tol = args.rel_tol;
    cfg.qpus = args.qpus;
    cfg.shots = args.shots;
    cfg.seed = args.seed;
    cfg.telegate = args.telegate == "stochastic" ? dvqe::TelegateMode::stochastic
                                                 : dvqe::TelegateMode::deferred;
    cfg.out_dir = args.out_dir;
    cfg.meta_population = args.pop;
    cfg.meta_iters = args.meta_iters;
    cfg.abc_limit = args.abc_limit;
    cfg.fd_step = args.fd_step;

    const dvqe::RunResult result = dvqe::run_dvqe(cfg);
    std::cout << "solution: " << bits_to_string(result.z) << "\n";
    std::printf("cost: %.12g\n", result.cost);
    std::cout << "feasible: " << (result.feasible ? "true" : "false") << "\n";
    std::cout << "converged: " << (result.converged ? "true" : "false") << "\n";
    std::cout << "iterations: " << result.iterations << "\n";
    if (!result.solution_path.empty()) {
        std::cout << "artifacts: " << result.solution_path << " " << result.histogram_path
                  << " " << result.history_path << " " << result.circuit_path << "\n";
    }
    return result.feasible ? kExitOk : kExitInfeasible;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Distributed variational quantum eigensolver for QUBO problems"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App *solve = app.add_subcommand("solve", "Run the full DVQE pipeline on a problem");
    solve->add_option("--mode", solve_args.mode, "Execution architecture")
        ->check(CLI::IsMember({"monolithic", "distributed"}))
        ->capture_default_str();
    solve->add_option("--problem", solve_args.problem, "Problem JSON file")->required();
    solve->add_flag("--uc", solve_args.uc, "Treat the problem file as a unit-commitment instance");
    solve->add_option("--depth", solve_args.depth, "Ansatz depth")->capture_default_str();
    solve->add_option("--init", solve_args.init_type, "Init strategy 1=random 2=BH 3=GWO 4=ABC")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    solve->add_option("--lr", solve_args.lr, "ADAM learning rate")->capture_default_str();
    solve->add_option("--max-iters", solve_args.max_iters, "Training iteration budget")
        ->capture_default_str();
    solve->add_option("--rel-tol", solve_args.rel_tol, "Relative convergence tolerance")
        ->capture_default_str();
    solve->add_option("--qpus", solve_args.qpus, "Compute qubits per QPU, e.g. 2,2,2")
        ->delimiter(',');
    solve->add_option("--shots", solve_args.shots, "Sampling shots")->capture_default_str();
    solve->add_option("--seed", solve_args.seed, "Root seed for all random streams")
        ->capture_default_str();
    solve->add_option("--telegate", solve_args.telegate, "Remote-gate realization")
        ->check(CLI::IsMember({"deferred", "stochastic"}))
        ->capture_default_str();
    solve->add_option("--out", solve_args.out_dir, "Artifact directory")->capture_default_str();
    solve->add_option("--pop", solve_args.pop, "Metaheuristic population size")
        ->capture_default_str();
    solve->add_option("--meta-iters", solve_args.meta_iters, "Metaheuristic iterations")
        ->capture_default_str();
    solve->add_option("--abc-limit", solve_args.abc_limit, "ABC abandonment limit")
        ->capture_default_str();
    solve->add_option("--fd-step", solve_args.fd_step, "Finite-difference step (radians)")
        ->capture_default_str();

    std::size_t fid_n = 6;
    std::size_t fid_depth = 2;
    std::vector<std::size_t> fid_qpus;
    std::uint64_t fid_seed = 1;
    CLI::App *fid = app.add_subcommand(
        "fidelity", "Fidelity between monolithic and distributed ansatz outputs");
    fid->add_option("--n", fid_n, "Compute qubit count")->required();
    fid->add_option("--depth", fid_depth, "Ansatz depth")->capture_default_str();
    fid->add_option("--qpus", fid_qpus, "Compute qubits per QPU")->required()->delimiter(',');
    fid->add_option("--seed", fid_seed, "Seed for the random parameters")->capture_default_str();

    std::size_t remap_n = 6;
    std::size_t remap_depth = 2;
    std::vector<std::size_t> remap_qpus;
    CLI::App *remap_cmd =
        app.add_subcommand("remap", "Print the TeleGate-expanded distributed ansatz");
    remap_cmd->add_option("--n", remap_n, "Compute qubit count")->required();
    remap_cmd->add_option("--depth", remap_depth, "Ansatz depth")->capture_default_str();
    remap_cmd->add_option("--qpus", remap_qpus, "Compute qubits per QPU")
        ->required()
        ->delimiter(',');

    std::string brute_problem;
    bool brute_uc = false;
    CLI::App *brute = app.add_subcommand("brute", "Exhaustive reference solution");
    brute->add_option("--problem", brute_problem, "Problem JSON file")->required();
    brute->add_flag("--uc", brute_uc, "Treat the problem file as a unit-commitment instance");

    std::string ucb_problem;
    std::string ucb_out;
    CLI::App *ucb = app.add_subcommand("uc-build", "Convert a unit-commitment instance to QUBO");
    ucb->add_option("--problem", ucb_problem, "UC JSON file")->required();
    ucb->add_option("--out", ucb_out, "Output QUBO JSON path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (solve->parsed()) {
            return do_solve(solve_args);
        }
        if (fid->parsed()) {
            const double f = dvqe::run_fidelity(fid_n, fid_depth, fid_qpus, fid_seed);
            std::printf("%.12f\n", f);
            return kExitOk;
        }
        if (remap_cmd->parsed()) {
            std::size_t total = 0;
            for (std::size_t c : remap_qpus) {
                total += c;
            }
            if (total != remap_n) {
                throw dvqe::ConfigError("QPU compute-qubit sum must equal n");
            }
            const dvqe::Topology topology(remap_qpus);
            const dvqe::Circuit mono =
                dvqe::build_monolithic_ansatz({remap_n, remap_depth});
            const dvqe::Circuit dist = dvqe::remap(mono, topology);
            std::cout << dvqe::render_text(dist, topology.qubit_labels(),
                                           topology.comm_mask());
            return kExitOk;
        }
        if (brute->parsed()) {
            const dvqe::BruteForceResult result = dvqe::run_brute(brute_problem, brute_uc);
            std::cout << "solution: " << bits_to_string(result.best_x) << "\n";
            std::printf("cost: %.12g\n", result.best_cost);
            return kExitOk;
        }
        if (ucb->parsed()) {
            const dvqe::UcInstance uc =
                dvqe::load_uc(dvqe::detail::read_text_file(ucb_problem));
            const std::string json = dvqe::save_problem(dvqe::build_uc_qubo(uc));
            if (ucb_out.empty()) {
                std::cout << json << "\n";
            } else {
                dvqe::detail::write_text_file(ucb_out, json);
            }
            return kExitOk;
        }
    } catch (const dvqe::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dvqe::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const dvqe::NumericError &e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
