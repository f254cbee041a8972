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
#include <utility>
#include <vector>

#include "dvqe/error.hpp"
#include "dvqe/qubo.hpp"

namespace dvqe {

/**
 * Diagonal Ising cost operator sum_i h_i Z_i + sum_{i<j} J_ij Z_i Z_j + const.
 * Bit value 0 corresponds to spin z = +1; the constant term is carried so that
 * bitstring energies equal the originating QUBO costs exactly.
 */
struct IsingHamiltonian {
    std::size_t n = 0;
    std::vector<double> h;
    std::map<std::pair<std::size_t, std::size_t>, double> J; // keys i < j
    double const_offset = 0.0;
};

/**
 * Substitutes x_i = (1 - z_i)/2 into the QUBO objective and collects terms.
 * With symmetric Q:
 *   h_i  = -(q_i + Q_ii)/2 - sum_{j != i} Q_ij / 2
 *   J_ij = Q_ij / 2                       (i < j, zero couplings dropped)
 *   const = offset + sum_i (q_i + Q_ii)/2 + sum_{i<j} Q_ij / 2
 */
inline IsingHamiltonian qubo_to_hamiltonian(const QuboProblem &p) {
    const std::size_t n = p.num_vars();
    IsingHamiltonian ham;
    ham.n = n;
    ham.h.assign(n, 0.0);
    ham.const_offset = p.offset();
    for (std::size_t i = 0; i < n; ++i) {
        const double diag = p.linear(i) + p.quad(i, i);
        ham.h[i] -= 0.5 * diag;
        ham.const_offset += 0.5 * diag;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double coupling = p.quad(i, j);
            if (coupling == 0.0) {
                continue;
            }
            ham.J[{i, j}] = 0.5 * coupling;
            ham.h[i] -= 0.5 * coupling;
            ham.h[j] -= 0.5 * coupling;
            ham.const_offset += 0.5 * coupling;
        }
    }
    return ham;
}

inline double energy_of_bitstring(const IsingHamiltonian &ham, const std::vector<int> &x) {
    if (x.size() != ham.n) {
        throw ConfigError("energy_of_bitstring: bit vector length " +
                          std::to_string(x.size()) + " does not match n=" +
                          std::to_string(ham.n));
    }
    double e = ham.const_offset;
    for (std::size_t i = 0; i < ham.n; ++i) {
        e += ham.h[i] * (1.0 - 2.0 * x[i]);
    }
    for (const auto &[pair, coupling] : ham.J) {
        e += coupling * (1.0 - 2.0 * x[pair.first]) * (1.0 - 2.0 * x[pair.second]);
    }
    return e;
}

// Bitstring for basis index b: qubit 0 is the most significant bit.
inline std::vector<int> index_to_bits(std::uint64_t b, std::size_t n) {
    std::vector<int> x(n);
    for (std::size_t k = 0; k < n; ++k) {
        x[k] = static_cast<int>((b >> (n - 1 - k)) & 1u);
    }
    return x;
}

/**
 * Diagonal of the Hamiltonian over all 2^n basis states, indexed with qubit 0
 * as the most significant bit. Precomputed once per training run.
 */
inline std::vector<double> energy_table(const IsingHamiltonian &ham) {
    const std::uint64_t dim = std::uint64_t{1} << ham.n;
    std::vector<double> table(dim);
    for (std::uint64_t b = 0; b < dim; ++b) {
        table[b] = energy_of_bitstring(ham, index_to_bits(b, ham.n));
    }
    return table;
}

/**
 * Exact expectation sum_b probs[b] * E(b); H is diagonal in the computational
 * basis so no operator algebra is involved.
 */
inline double expectation(const IsingHamiltonian &ham, const std::vector<double> &probs) {
    const std::uint64_t dim = std::uint64_t{1} << ham.n;
    if (probs.size() != dim) {
        throw ConfigError("expectation: probability vector length does not match 2^n");
    }
    double total = 0.0;
    for (double p : probs) {
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw NumericError("expectation: probabilities sum to " + std::to_string(total) +
                           ", expected 1 within 1e-9");
    }
    double e = 0.0;
    for (std::uint64_t b = 0; b < dim; ++b) {
        e += probs[b] * energy_of_bitstring(ham, index_to_bits(b, ham.n));
    }
    return e;
}

} // namespace dvqe
