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

#include <span>
#include <vector>

#include "dvqe/circuit.hpp"
#include "dvqe/error.hpp"
#include "dvqe/rng.hpp"
#include "dvqe/statevector.hpp"
#include "dvqe/topology.hpp"

namespace dvqe {

/**
 * deferred:   cross-QPU gates compile to a fixed unitary sequence (the
 *             deferred-measurement form of the cat-entangler/disentangler);
 *             the result is an ordinary Circuit.
 * stochastic: cross-QPU gates are executed with genuine projective
 *             measurements and classically conditioned corrections; see
 *             run_stochastic_telegate.
 */
enum class TelegateMode { deferred, stochastic };

namespace detail {

/**
 * Deferred-measurement expansion of a remote CNOT(c, t) through the
 * communication qubits e_a (control side) and e_b (target side), both |0>:
 *   1. H(e_a); CNOT(e_a, e_b)   EPR pair between the comm qubits
 *   2. CNOT(c, e_a)             entangle control with its comm qubit
 *   3. CNOT(e_a, e_b)           deferred cat measurement + conditioned X
 *   4. CNOT(e_b, t)             local CNOT on the target QPU
 *   5. H(e_b); CZ(e_b, c)       deferred cat disentangler (conditioned Z)
 *   6. H(e_a); H(e_b)           both comm qubits factor out as |+>; reset
 * After step 5 the comm qubits are exactly |+> x |+>, so step 6 restores
 * |0> x |0> deterministically and the compute qubits hold CNOT(c, t).
 */
inline void append_remote_cnot(Circuit &out, std::size_t c, std::size_t t, std::size_t e_a,
                               std::size_t e_b) {
    out.gates.push_back(Gate::h(e_a));
    out.gates.push_back(Gate::cnot(e_a, e_b));
    out.gates.push_back(Gate::cnot(c, e_a));
    out.gates.push_back(Gate::cnot(e_a, e_b));
    out.gates.push_back(Gate::cnot(e_b, t));
    out.gates.push_back(Gate::h(e_b));
    out.gates.push_back(Gate::cz(e_b, c));
    out.gates.push_back(Gate::h(e_a));
    out.gates.push_back(Gate::h(e_b));
}

} // namespace detail

/**
 * Converts a monolithic circuit over compute qubits into its distributed
 * counterpart over the full register. Single-qubit gates and same-QPU pairs
 * are re-indexed; each CNOT crossing a QPU boundary expands through the
 * TeleGate sequence. A remote CZ goes through CNOT conjugated by H on the
 * target side. Parameter slots pass through untouched.
 */
inline Circuit remap(const Circuit &circuit, const Topology &topology,
                     TelegateMode mode = TelegateMode::deferred) {
    if (circuit.n_qubits != topology.n_compute()) {
        throw ConfigError("remap: circuit has " + std::to_string(circuit.n_qubits) +
                          " qubits, topology expects " +
                          std::to_string(topology.n_compute()));
    }
    if (mode != TelegateMode::deferred) {
        throw ConfigError("remap: only deferred mode compiles to a gate list; use "
                          "run_stochastic_telegate for stochastic execution");
    }
    Circuit out;
    out.n_qubits = topology.n_total();
    out.n_params = circuit.n_params;

    auto expand_cnot = [&](std::size_t c_var, std::size_t t_var) {
        const std::size_t c = topology.compute_to_global(c_var);
        const std::size_t t = topology.compute_to_global(t_var);
        const std::size_t qpu_c = topology.qpu_of_variable(c_var);
        const std::size_t qpu_t = topology.qpu_of_variable(t_var);
        if (qpu_c == qpu_t) {
            out.gates.push_back(Gate::cnot(c, t));
        } else {
            detail::append_remote_cnot(out, c, t, topology.comm_of(qpu_c),
                                       topology.comm_of(qpu_t));
        }
    };

    for (const Gate &g : circuit.gates) {
        if (!is_two_qubit(g.kind)) {
            Gate mapped = g;
            mapped.q0 = topology.compute_to_global(g.q0);
            out.gates.push_back(mapped);
            continue;
        }
        if (g.kind == GateKind::CNOT) {
            expand_cnot(g.q0, g.q1);
        } else { // CZ = H(t) CNOT(c, t) H(t)
            const std::size_t qpu_a = topology.qpu_of_variable(g.q0);
            const std::size_t qpu_b = topology.qpu_of_variable(g.q1);
            if (qpu_a == qpu_b) {
                out.gates.push_back(Gate::cz(topology.compute_to_global(g.q0),
                                             topology.compute_to_global(g.q1)));
            } else {
                const std::size_t t = topology.compute_to_global(g.q1);
                out.gates.push_back(Gate::h(t));
                expand_cnot(g.q0, g.q1);
                out.gates.push_back(Gate::h(t));
            }
        }
    }
    out.validate();
    return out;
}

/**
 * Executes the distributed circuit with genuine mid-circuit measurements on
 * the communication qubits: the cat measurement collapses e_a and sends one
 * classical bit (conditioned X on e_b), the disentangler measures e_b in the
 * H basis and sends one bit back (conditioned Z on the control). Measured
 * comm qubits are re-initialized to |0>. For every outcome path the compute
 * state is identical to the deferred-mode output, and that is what is
 * returned (comm qubits stripped).
 */
inline StateVector run_stochastic_telegate(const Circuit &circuit_monolithic,
                                           const Topology &topology,
                                           std::span<const double> theta, Rng &rng) {
    if (circuit_monolithic.n_qubits != topology.n_compute()) {
        throw ConfigError("run_stochastic_telegate: circuit/topology size mismatch");
    }
    if (theta.size() != circuit_monolithic.n_params) {
        throw ConfigError("run_stochastic_telegate: parameter length mismatch");
    }
    StateVector state(topology.n_total());

    auto remote_cnot = [&](std::size_t c, std::size_t t, std::size_t e_a, std::size_t e_b) {
        state.apply_h(e_a);
        state.apply_cnot(e_a, e_b);
        state.apply_cnot(c, e_a);
        const int m1 = state.measure(e_a, rng); // cat-measure bus carries m1
        if (m1 == 1) {
            state.apply_x(e_b);
            state.apply_x(e_a); // re-initialize the collapsed comm qubit
        }
        state.apply_cnot(e_b, t);
        state.apply_h(e_b);
        const int m2 = state.measure(e_b, rng); // disentangler bit m2
        if (m2 == 1) {
            state.apply_z(c);
            state.apply_x(e_b);
        }
    };

    for (const Gate &g : circuit_monolithic.gates) {
        if (!is_two_qubit(g.kind)) {
            Gate mapped = g;
            mapped.q0 = topology.compute_to_global(g.q0);
            apply_gate(state, mapped, theta);
            continue;
        }
        const std::size_t c = topology.compute_to_global(g.q0);
        const std::size_t t = topology.compute_to_global(g.q1);
        const std::size_t qpu_c = topology.qpu_of_variable(g.q0);
        const std::size_t qpu_t = topology.qpu_of_variable(g.q1);
        if (qpu_c == qpu_t) {
            if (g.kind == GateKind::CNOT) {
                state.apply_cnot(c, t);
            } else {
                state.apply_cz(c, t);
            }
            continue;
        }
        if (g.kind == GateKind::CZ) {
            state.apply_h(t);
        }
        remote_cnot(c, t, topology.comm_of(qpu_c), topology.comm_of(qpu_t));
        if (g.kind == GateKind::CZ) {
            state.apply_h(t);
        }
    }
    return extract_subspace(state, topology.compute_order());
}

inline StateVector run_stochastic_telegate(const Circuit &circuit_monolithic,
                                           const Topology &topology,
                                           std::span<const double> theta, std::uint64_t seed) {
    Rng rng(seed);
    return run_stochastic_telegate(circuit_monolithic, topology, theta, rng);
}

/**
 * Builds the monolithic ansatz, runs it next to its remapped distributed
 * counterpart with the same parameters, strips the communication qubits
 * (which must pass the entanglement-leak check) and returns the fidelity
 * between the two compute states.
 */
inline double verify_equivalence(const AnsatzSpec &spec, const Topology &topology,
                                 std::span<const double> theta) {
    if (spec.n_qubits != topology.n_compute()) {
        throw ConfigError("verify_equivalence: ansatz/topology size mismatch");
    }
    const Circuit mono = build_monolithic_ansatz(spec);
    const StateVector reference = bind_and_run(mono, theta);
    const Circuit dist = remap(mono, topology);
    const StateVector joint = bind_and_run(dist, theta);
    const StateVector compute = extract_subspace(joint, topology.compute_order());
    return fidelity(reference, compute);
}

} // namespace dvqe
