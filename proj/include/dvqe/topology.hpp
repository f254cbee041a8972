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

#include <algorithm>
#include <string>
#include <vector>

#include "dvqe/error.hpp"

namespace dvqe {

/**
 * Multi-QPU register layout. Each QPU holds a contiguous block of compute
 * qubits followed by its single reserved communication qubit:
 *   QPU0.compute..., QPU0.comm, QPU1.compute..., QPU1.comm, ...
 * Problem variable i is the i-th compute qubit in this global order.
 */
class Topology {
  public:
    struct Qpu {
        std::size_t compute_count = 0;
        std::vector<std::size_t> compute_global;
        std::size_t comm_global = 0;
    };

    explicit Topology(const std::vector<std::size_t> &per_qpu_compute) {
        if (per_qpu_compute.empty()) {
            throw ConfigError("Topology: at least one QPU required");
        }
        std::size_t cursor = 0;
        for (std::size_t k = 0; k < per_qpu_compute.size(); ++k) {
            const std::size_t count = per_qpu_compute[k];
            if (count == 0) {
                throw ConfigError("Topology: QPU " + std::to_string(k) +
                                  " would hold zero compute qubits");
            }
            Qpu qpu;
            qpu.compute_count = count;
            for (std::size_t j = 0; j < count; ++j) {
                qpu.compute_global.push_back(cursor++);
                var_to_global_.push_back(qpu.compute_global.back());
                var_to_qpu_.push_back(k);
            }
            qpu.comm_global = cursor++;
            qpus_.push_back(std::move(qpu));
        }
        n_total_ = cursor;
    }

    std::size_t num_qpus() const { return qpus_.size(); }
    std::size_t n_compute() const { return var_to_global_.size(); }
    std::size_t n_total() const { return n_total_; }
    const std::vector<Qpu> &qpus() const { return qpus_; }

    std::size_t compute_to_global(std::size_t variable) const {
        if (variable >= var_to_global_.size()) {
            throw ConfigError("Topology: variable index " + std::to_string(variable) +
                              " out of range");
        }
        return var_to_global_[variable];
    }

    std::size_t qpu_of_variable(std::size_t variable) const {
        if (variable >= var_to_qpu_.size()) {
            throw ConfigError("Topology: variable index " + std::to_string(variable) +
                              " out of range");
        }
        return var_to_qpu_[variable];
    }

    std::size_t comm_of(std::size_t qpu_index) const {
        if (qpu_index >= qpus_.size()) {
            throw ConfigError("Topology: QPU index " + std::to_string(qpu_index) +
                              " out of range");
        }
        return qpus_[qpu_index].comm_global;
    }

    // Compute qubits in variable order; the keep-list for subspace extraction.
    const std::vector<std::size_t> &compute_order() const { return var_to_global_; }

    std::vector<bool> comm_mask() const {
        std::vector<bool> mask(n_total_, false);
        for (const Qpu &qpu : qpus_) {
            mask[qpu.comm_global] = true;
        }
        return mask;
    }

    // `QPUk.compute.j` / `QPUk.comm` labels for circuit rendering.
    std::vector<std::string> qubit_labels() const {
        std::vector<std::string> labels(n_total_);
        for (std::size_t k = 0; k < qpus_.size(); ++k) {
            for (std::size_t j = 0; j < qpus_[k].compute_global.size(); ++j) {
                labels[qpus_[k].compute_global[j]] =
                    "QPU" + std::to_string(k) + ".compute." + std::to_string(j);
            }
            labels[qpus_[k].comm_global] = "QPU" + std::to_string(k) + ".comm";
        }
        return labels;
    }

  private:
    std::vector<Qpu> qpus_;
    std::vector<std::size_t> var_to_global_;
    std::vector<std::size_t> var_to_qpu_;
    std::size_t n_total_ = 0;
};

/**
 * Least-load assignment: variables 0..n-1 go one at a time to the QPU with
 * the smallest current load, ties to the lowest QPU index. The result is a
 * balanced partition (counts differ by at most one).
 */
inline std::vector<std::size_t> greedy_allocate(std::size_t n_compute, std::size_t m_qpus) {
    if (m_qpus == 0 || m_qpus > n_compute) {
        throw ConfigError("greedy_allocate: need 1 <= m_qpus <= n_compute");
    }
    std::vector<std::size_t> counts(m_qpus, 0);
    for (std::size_t v = 0; v < n_compute; ++v) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < m_qpus; ++k) {
            if (counts[k] < counts[best]) {
                best = k;
            }
        }
        ++counts[best];
    }
    return counts;
}

inline Topology topology_from_config(const std::vector<std::size_t> &per_qpu_compute) {
    return Topology(per_qpu_compute);
}

} // namespace dvqe
