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

#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dvqe/error.hpp"
#include "dvqe/statevector.hpp"

namespace dvqe {

enum class GateKind { RX, RY, RZ, H, X, Z, CNOT, CZ };

inline bool is_rotation(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

inline bool is_two_qubit(GateKind kind) { return kind == GateKind::CNOT || kind == GateKind::CZ; }

inline const char *gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    }
    return "?";
}

/**
 * One gate: rotations carry either a fixed angle or a slot index into the
 * parameter vector; the remaining kinds carry neither.
 */
struct Gate {
    GateKind kind = GateKind::H;
    std::size_t q0 = 0;
    std::size_t q1 = 0;     // second operand of two-qubit kinds
    double angle = 0.0;     // fixed angle, used when slot < 0
    int slot = -1;          // parameter slot, -1 for fixed gates

    bool parametric() const { return slot >= 0; }

    static Gate rotation(GateKind kind, std::size_t qubit, int slot) {
        return Gate{kind, qubit, 0, 0.0, slot};
    }
    static Gate rotation_fixed(GateKind kind, std::size_t qubit, double angle) {
        return Gate{kind, qubit, 0, angle, -1};
    }
    static Gate h(std::size_t qubit) { return Gate{GateKind::H, qubit, 0, 0.0, -1}; }
    static Gate x(std::size_t qubit) { return Gate{GateKind::X, qubit, 0, 0.0, -1}; }
    static Gate z(std::size_t qubit) { return Gate{GateKind::Z, qubit, 0, 0.0, -1}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        return Gate{GateKind::CNOT, control, target, 0.0, -1};
    }
    static Gate cz(std::size_t a, std::size_t b) { return Gate{GateKind::CZ, a, b, 0.0, -1}; }
};

/**
 * Ordered gate list over a fixed register with symbolic parameter slots.
 * Immutable by convention once built; executing never mutates the circuit.
 */
struct Circuit {
    std::size_t n_qubits = 0;
    std::size_t n_params = 0;
    std::vector<Gate> gates;

    void validate() const {
        if (n_qubits == 0) {
            throw ConfigError("Circuit: qubit count must be >= 1");
        }
        std::vector<bool> slot_seen(n_params, false);
        for (const Gate &g : gates) {
            if (g.q0 >= n_qubits || (is_two_qubit(g.kind) && g.q1 >= n_qubits)) {
                throw ConfigError("Circuit: gate qubit index out of range");
            }
            if (is_two_qubit(g.kind) && g.q0 == g.q1) {
                throw ConfigError("Circuit: two-qubit gate with identical operands");
            }
            if (g.parametric()) {
                if (!is_rotation(g.kind)) {
                    throw ConfigError("Circuit: only rotations may carry parameter slots");
                }
                if (static_cast<std::size_t>(g.slot) >= n_params) {
                    throw ConfigError("Circuit: parameter slot out of range");
                }
                slot_seen[static_cast<std::size_t>(g.slot)] = true;
            }
        }
        for (std::size_t s = 0; s < n_params; ++s) {
            if (!slot_seen[s]) {
                throw ConfigError("Circuit: parameter slot " + std::to_string(s) +
                                  " is never referenced");
            }
        }
    }
};

/**
 * Layered hardware-efficient ansatz: depth d layers, each an RY rotation on
 * every qubit followed by the linear CNOT chain (i -> i+1). Slots are
 * layer-major, so slot = layer * n + qubit and n_params = n * d.
 */
struct AnsatzSpec {
    std::size_t n_qubits = 0;
    std::size_t depth = 1;
};

inline Circuit build_monolithic_ansatz(const AnsatzSpec &spec) {
    if (spec.n_qubits == 0 || spec.depth == 0) {
        throw ConfigError("AnsatzSpec: n_qubits and depth must be >= 1");
    }
    Circuit c;
    c.n_qubits = spec.n_qubits;
    c.n_params = spec.n_qubits * spec.depth;
    c.gates.reserve(spec.depth * (2 * spec.n_qubits - 1));
    for (std::size_t layer = 0; layer < spec.depth; ++layer) {
        for (std::size_t q = 0; q < spec.n_qubits; ++q) {
            c.gates.push_back(
                Gate::rotation(GateKind::RY, q, static_cast<int>(layer * spec.n_qubits + q)));
        }
        for (std::size_t q = 0; q + 1 < spec.n_qubits; ++q) {
            c.gates.push_back(Gate::cnot(q, q + 1));
        }
    }
    return c;
}

inline void apply_gate(StateVector &state, const Gate &g, std::span<const double> theta) {
    double angle = g.angle;
    if (g.parametric()) {
        angle = theta[static_cast<std::size_t>(g.slot)];
    }
    switch (g.kind) {
    case GateKind::RX: state.apply_rx(g.q0, angle); break;
    case GateKind::RY: state.apply_ry(g.q0, angle); break;
    case GateKind::RZ: state.apply_rz(g.q0, angle); break;
    case GateKind::H: state.apply_h(g.q0); break;
    case GateKind::X: state.apply_x(g.q0); break;
    case GateKind::Z: state.apply_z(g.q0); break;
    case GateKind::CNOT: state.apply_cnot(g.q0, g.q1); break;
    case GateKind::CZ: state.apply_cz(g.q0, g.q1); break;
    }
}

inline StateVector bind_and_run(const Circuit &circuit, std::span<const double> theta,
                                StateVector initial) {
    if (theta.size() != circuit.n_params) {
        throw ConfigError("bind_and_run: got " + std::to_string(theta.size()) +
                          " parameters, circuit expects " + std::to_string(circuit.n_params));
    }
    if (initial.num_qubits() != circuit.n_qubits) {
        throw ConfigError("bind_and_run: initial state size does not match circuit");
    }
    for (const Gate &g : circuit.gates) {
        apply_gate(initial, g, theta);
    }
    return initial;
}

inline StateVector bind_and_run(const Circuit &circuit, std::span<const double> theta) {
    return bind_and_run(circuit, theta, StateVector(circuit.n_qubits));
}

namespace detail {

inline std::string format_angle(double angle) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", angle);
    return buf;
}

} // namespace detail

/**
 * Stable line-oriented rendering: one gate per line, e.g. `RY q3 theta[5]`
 * or `CNOT q0 q1`. Annotation lines map qubits to their QPU roles when the
 * caller supplies them; gates touching a communication qubit get a TG tag.
 */
inline std::string render_text(const Circuit &circuit,
                               const std::vector<std::string> &qubit_labels = {},
                               const std::vector<bool> &comm_qubits = {}) {
    std::string out = "circuit qubits=" + std::to_string(circuit.n_qubits) +
                      " params=" + std::to_string(circuit.n_params) + "\n";
    for (std::size_t q = 0; q < qubit_labels.size(); ++q) {
        out += "# q" + std::to_string(q) + " " + qubit_labels[q] + "\n";
    }
    for (const Gate &g : circuit.gates) {
        out += gate_name(g.kind);
        out += " q" + std::to_string(g.q0);
        if (is_two_qubit(g.kind)) {
            out += " q" + std::to_string(g.q1);
        }
        if (is_rotation(g.kind)) {
            out += g.parametric() ? " theta[" + std::to_string(g.slot) + "]"
                                  : " " + detail::format_angle(g.angle);
        }
        const bool touches_comm =
            !comm_qubits.empty() &&
            (comm_qubits[g.q0] || (is_two_qubit(g.kind) && comm_qubits[g.q1]));
        if (touches_comm) {
            out += " TG";
        }
        out += "\n";
    }
    return out;
}

} // namespace dvqe
