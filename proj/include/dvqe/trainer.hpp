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
#include <cstdio>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dvqe/circuit.hpp"
#include "dvqe/error.hpp"
#include "dvqe/hamiltonian.hpp"
#include "dvqe/telegate.hpp"
#include "dvqe/topology.hpp"

namespace dvqe {

struct TrainConfig {
    double lr = 0.05;
    std::size_t max_iters = 200;
    double rel_tol = 1e-3; // relative energy change, 1e-3 = 0.1%
    double fd_step = 1e-2; // radians
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;

    void validate() const {
        if (!(lr > 0.0) || !(rel_tol > 0.0) || !(fd_step > 0.0)) {
            throw ConfigError("TrainConfig: lr, rel_tol and fd_step must be > 0");
        }
        if (!(adam_beta1 > 0.0 && adam_beta1 < 1.0 && adam_beta2 > 0.0 && adam_beta2 < 1.0)) {
            throw ConfigError("TrainConfig: betas must lie in (0, 1)");
        }
    }
};

struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    std::uint64_t t = 0;

    explicit AdamState(std::size_t p) : m(p, 0.0), v(p, 0.0) {}
};

struct TrainHistory {
    std::vector<double> energies;
    bool converged = false;
    std::size_t iterations_used = 0;
};

/**
 * Exact energy of the circuit output under a diagonal Hamiltonian over the
 * compute qubits. For distributed circuits the joint probabilities are
 * marginalized onto the compute bits; the communication qubits stay in |0>
 * so the marginal equals the compute-subspace expectation. The Hamiltonian
 * diagonal is tabulated once, so one evaluation is a circuit run plus a
 * single pass over the amplitudes.
 */
class EnergyEvaluator {
  public:
    EnergyEvaluator(const Circuit &circuit, const IsingHamiltonian &ham)
        : circuit_(&circuit), table_(energy_table(ham)) {
        if (circuit.n_qubits != ham.n) {
            throw ConfigError("EnergyEvaluator: circuit/Hamiltonian size mismatch");
        }
    }

    EnergyEvaluator(const Circuit &distributed_circuit, const IsingHamiltonian &ham,
                    const Topology &topology)
        : circuit_(&distributed_circuit), table_(energy_table(ham)) {
        if (topology.n_compute() != ham.n || distributed_circuit.n_qubits != topology.n_total()) {
            throw ConfigError("EnergyEvaluator: circuit/topology/Hamiltonian size mismatch");
        }
        build_joint_map(topology, ham.n);
    }

    double operator()(std::span<const double> theta) const {
        const StateVector state = bind_and_run(*circuit_, theta);
        return energy_of_state(state);
    }

    double energy_of_state(const StateVector &state) const {
        double e = 0.0;
        if (joint_to_compute_.empty()) {
            for (std::size_t b = 0; b < state.size(); ++b) {
                e += std::norm(state.amp(b)) * table_[b];
            }
        } else {
            for (std::size_t b = 0; b < state.size(); ++b) {
                e += std::norm(state.amp(b)) * table_[joint_to_compute_[b]];
            }
        }
        return e;
    }

  private:
    void build_joint_map(const Topology &topology, std::size_t n_compute) {
        const std::size_t n_total = topology.n_total();
        joint_to_compute_.assign(std::size_t{1} << n_total, 0);
        const auto &order = topology.compute_order();
        for (std::size_t b = 0; b < joint_to_compute_.size(); ++b) {
            std::uint32_t compute_index = 0;
            for (std::size_t v = 0; v < n_compute; ++v) {
                const std::size_t bit = (b >> (n_total - 1 - order[v])) & 1u;
                compute_index |= static_cast<std::uint32_t>(bit) << (n_compute - 1 - v);
            }
            joint_to_compute_[b] = compute_index;
        }
    }

    const Circuit *circuit_;
    std::vector<double> table_;
    std::vector<std::uint32_t> joint_to_compute_;
};

/**
 * Energy evaluator backed by stochastic TeleGate execution of the monolithic
 * circuit. Measurement outcomes draw from the supplied generator; the energy
 * value itself is outcome-independent, so training remains deterministic.
 */
class StochasticEnergyEvaluator {
  public:
    StochasticEnergyEvaluator(const Circuit &circuit_monolithic, const IsingHamiltonian &ham,
                              const Topology &topology, std::uint64_t seed)
        : circuit_(&circuit_monolithic), topology_(&topology), table_(energy_table(ham)),
          rng_(seed) {
        if (circuit_monolithic.n_qubits != ham.n || topology.n_compute() != ham.n) {
            throw ConfigError("StochasticEnergyEvaluator: size mismatch");
        }
    }

    double operator()(std::span<const double> theta) {
        const StateVector compute = run_stochastic_telegate(*circuit_, *topology_, theta, rng_);
        double e = 0.0;
        for (std::size_t b = 0; b < compute.size(); ++b) {
            e += std::norm(compute.amp(b)) * table_[b];
        }
        return e;
    }

  private:
    const Circuit *circuit_;
    const Topology *topology_;
    std::vector<double> table_;
    Rng rng_;
};

inline double energy(const Circuit &circuit, const IsingHamiltonian &ham,
                     std::span<const double> theta) {
    return EnergyEvaluator(circuit, ham)(theta);
}

inline double energy(const Circuit &distributed_circuit, const IsingHamiltonian &ham,
                     const Topology &topology, std::span<const double> theta) {
    return EnergyEvaluator(distributed_circuit, ham, topology)(theta);
}

/**
 * Central finite differences g_j = [E(theta + s e_j) - E(theta - s e_j)] / 2s,
 * 2p energy evaluations, assembled in parameter order.
 */
template <class EnergyFn>
std::vector<double> fd_gradient(EnergyFn &&energy_fn, std::span<const double> theta,
                                double fd_step) {
    if (!(fd_step > 0.0)) {
        throw ConfigError("fd_gradient: fd_step must be > 0");
    }
    std::vector<double> probe(theta.begin(), theta.end());
    std::vector<double> grad(theta.size(), 0.0);
    for (std::size_t j = 0; j < theta.size(); ++j) {
        const double original = probe[j];
        probe[j] = original + fd_step;
        const double e_plus = energy_fn(std::span<const double>(probe));
        probe[j] = original - fd_step;
        const double e_minus = energy_fn(std::span<const double>(probe));
        probe[j] = original;
        grad[j] = (e_plus - e_minus) / (2.0 * fd_step);
    }
    return grad;
}

inline std::vector<double> fd_gradient(const Circuit &circuit, const IsingHamiltonian &ham,
                                       std::span<const double> theta, double fd_step) {
    return fd_gradient(EnergyEvaluator(circuit, ham), theta, fd_step);
}

/**
 * One bias-corrected ADAM update. Returns the new parameters; the state is
 * advanced in place.
 */
inline std::vector<double> adam_step(AdamState &state, std::span<const double> theta,
                                     std::span<const double> grad, const TrainConfig &cfg) {
    if (theta.size() != grad.size() || theta.size() != state.m.size()) {
        throw ConfigError("adam_step: inconsistent vector lengths");
    }
    state.t += 1;
    const double bc1 = 1.0 - std::pow(cfg.adam_beta1, static_cast<double>(state.t));
    const double bc2 = 1.0 - std::pow(cfg.adam_beta2, static_cast<double>(state.t));
    std::vector<double> next(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j) {
        state.m[j] = cfg.adam_beta1 * state.m[j] + (1.0 - cfg.adam_beta1) * grad[j];
        state.v[j] = cfg.adam_beta2 * state.v[j] + (1.0 - cfg.adam_beta2) * grad[j] * grad[j];
        const double m_hat = state.m[j] / bc1;
        const double v_hat = state.v[j] / bc2;
        next[j] = theta[j] - cfg.lr * m_hat / (std::sqrt(v_hat) + cfg.adam_eps);
    }
    return next;
}

/**
 * The closed training loop: evaluate the energy, stop once the relative
 * change |E_t - E_{t-1}| / max(|E_t|, 1e-8) drops below rel_tol, otherwise
 * take a finite-difference ADAM step. Every evaluated energy is recorded.
 * The optional observer sees each visited parameter vector before its
 * evaluation (used to replay trajectories through a second circuit).
 */
template <class EnergyFn>
std::pair<std::vector<double>, TrainHistory>
train(EnergyFn &&energy_fn, std::vector<double> theta, const TrainConfig &cfg,
      const std::function<void(const std::vector<double> &)> &observer = {}) {
    cfg.validate();
    TrainHistory history;
    AdamState adam(theta.size());
    double previous = 0.0;
    for (std::size_t t = 0; t < cfg.max_iters; ++t) {
        if (observer) {
            observer(theta);
        }
        const double e = energy_fn(std::span<const double>(theta));
        if (!std::isfinite(e)) {
            throw NumericError("train: non-finite energy at iteration " + std::to_string(t));
        }
        history.energies.push_back(e);
        if (t > 0 && std::abs(e - previous) / std::max(std::abs(e), 1e-8) < cfg.rel_tol) {
            history.converged = true;
            break;
        }
        previous = e;
        const std::vector<double> grad =
            fd_gradient(energy_fn, std::span<const double>(theta), cfg.fd_step);
        theta = adam_step(adam, theta, grad, cfg);
    }
    history.iterations_used = history.energies.size();
    return {std::move(theta), std::move(history)};
}

inline std::pair<std::vector<double>, TrainHistory>
train(const Circuit &circuit, const IsingHamiltonian &ham, std::vector<double> theta,
      const TrainConfig &cfg) {
    return train(EnergyEvaluator(circuit, ham), std::move(theta), cfg);
}

struct SharedTrainResult {
    TrainHistory monolithic;
    TrainHistory distributed;
    double max_energy_gap = 0.0;
    std::vector<double> theta;
};

/**
 * Trains on the monolithic circuit and replays the identical parameter
 * trajectory through the distributed circuit, so both architectures receive
 * the same optimizer updates. The per-iteration energies must agree within
 * `gap_tol`; a larger gap means the two circuits are not equivalent.
 */
inline SharedTrainResult train_shared(const Circuit &circuit_monolithic,
                                      const Circuit &circuit_distributed,
                                      const Topology &topology, const IsingHamiltonian &ham,
                                      std::vector<double> theta, const TrainConfig &cfg,
                                      double gap_tol = 1e-9) {
    EnergyEvaluator mono_eval(circuit_monolithic, ham);
    EnergyEvaluator dist_eval(circuit_distributed, ham, topology);

    std::vector<std::vector<double>> trajectory;
    auto [theta_final, mono_history] =
        train(mono_eval, std::move(theta), cfg,
              [&trajectory](const std::vector<double> &point) { trajectory.push_back(point); });

    SharedTrainResult result;
    result.monolithic = mono_history;
    result.distributed.converged = mono_history.converged;
    result.theta = std::move(theta_final);
    for (std::size_t t = 0; t < mono_history.energies.size(); ++t) {
        const double e_dist = dist_eval(std::span<const double>(trajectory[t]));
        result.distributed.energies.push_back(e_dist);
        result.max_energy_gap =
            std::max(result.max_energy_gap, std::abs(e_dist - mono_history.energies[t]));
    }
    result.distributed.iterations_used = result.distributed.energies.size();
    if (result.max_energy_gap > gap_tol) {
        throw NumericError("train_shared: monolithic and distributed energies diverged by " +
                           std::to_string(result.max_energy_gap));
    }
    return result;
}

// CSV export with header `iter,energy`, one row per recorded iteration.
inline std::string history_to_csv(const TrainHistory &history) {
    std::string out = "iter,energy\n";
    char buf[64];
    for (std::size_t t = 0; t < history.energies.size(); ++t) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", t, history.energies[t]);
        out += buf;
    }
    return out;
}

} // namespace dvqe
