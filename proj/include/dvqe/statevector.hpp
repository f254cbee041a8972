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
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dvqe/error.hpp"
#include "dvqe/rng.hpp"

namespace dvqe {

using cdouble = std::complex<double>;

// Dense statevector cap: 2^24 amplitudes (256 MiB of complex doubles).
inline constexpr std::size_t kMaxQubits = 24;

/**
 * A 2x2 unitary. Row-major entries; construction through from_matrix checks
 * U^dagger U = I within 1e-12.
 */
struct Unitary1Q {
    std::array<cdouble, 4> m{}; // {u00, u01, u10, u11}

    static Unitary1Q from_matrix(cdouble u00, cdouble u01, cdouble u10, cdouble u11) {
        Unitary1Q u{{u00, u01, u10, u11}};
        // U^dagger U entries
        const cdouble a = std::conj(u00) * u00 + std::conj(u10) * u10;
        const cdouble b = std::conj(u00) * u01 + std::conj(u10) * u11;
        const cdouble c = std::conj(u01) * u00 + std::conj(u11) * u10;
        const cdouble d = std::conj(u01) * u01 + std::conj(u11) * u11;
        const double dev = std::max(std::max(std::abs(a - 1.0), std::abs(d - 1.0)),
                                    std::max(std::abs(b), std::abs(c)));
        if (dev > 1e-12) {
            throw ConfigError("Unitary1Q: matrix is not unitary (deviation " +
                              std::to_string(dev) + ")");
        }
        return u;
    }

    static Unitary1Q identity() { return {{1.0, 0.0, 0.0, 1.0}}; }

    static Unitary1Q rx(double theta) {
        const double c = std::cos(0.5 * theta);
        const double s = std::sin(0.5 * theta);
        return {{cdouble(c, 0.0), cdouble(0.0, -s), cdouble(0.0, -s), cdouble(c, 0.0)}};
    }

    // exp(-i theta Y / 2): a real rotation in the amplitude plane.
    static Unitary1Q ry(double theta) {
        const double c = std::cos(0.5 * theta);
        const double s = std::sin(0.5 * theta);
        return {{cdouble(c, 0.0), cdouble(-s, 0.0), cdouble(s, 0.0), cdouble(c, 0.0)}};
    }

    // exp(-i theta Z / 2)
    static Unitary1Q rz(double theta) {
        return {{std::polar(1.0, -0.5 * theta), 0.0, 0.0, std::polar(1.0, 0.5 * theta)}};
    }

    static Unitary1Q hadamard() {
        const double r = 1.0 / std::sqrt(2.0);
        return {{cdouble(r, 0.0), cdouble(r, 0.0), cdouble(r, 0.0), cdouble(-r, 0.0)}};
    }

    static Unitary1Q pauli_x() { return {{0.0, 1.0, 1.0, 0.0}}; }
    static Unitary1Q pauli_z() { return {{1.0, 0.0, 0.0, -1.0}}; }
};

/**
 * Complex-amplitude register over n qubits. Qubit 0 is the most significant
 * bit of the amplitude index; every interface in the library shares this
 * convention.
 */
class StateVector {
  public:
    // |0...0>
    explicit StateVector(std::size_t n_qubits) : n_(n_qubits) {
        if (n_ < 1 || n_ > kMaxQubits) {
            throw ConfigError("StateVector: qubit count " + std::to_string(n_qubits) +
                              " outside [1, " + std::to_string(kMaxQubits) + "]");
        }
        amps_.assign(std::size_t{1} << n_, cdouble(0.0, 0.0));
        amps_[0] = 1.0;
    }

    static StateVector from_amplitudes(std::size_t n_qubits, std::vector<cdouble> amps) {
        StateVector sv(n_qubits);
        if (amps.size() != sv.size()) {
            throw ConfigError("StateVector: amplitude count does not match 2^n");
        }
        sv.amps_ = std::move(amps);
        double norm = sv.norm_sq();
        if (std::abs(norm - 1.0) > 1e-9) {
            throw NumericError("StateVector: amplitudes have norm " + std::to_string(norm));
        }
        return sv;
    }

    std::size_t num_qubits() const { return n_; }
    std::size_t size() const { return amps_.size(); }
    const std::vector<cdouble> &amps() const { return amps_; }
    cdouble amp(std::size_t index) const { return amps_[index]; }

    double norm_sq() const {
        double acc = 0.0;
        for (const cdouble &a : amps_) {
            acc += std::norm(a);
        }
        return acc;
    }

    void apply_unitary(std::size_t qubit, const Unitary1Q &u) {
        const std::size_t s = stride(qubit);
        const cdouble u00 = u.m[0], u01 = u.m[1], u10 = u.m[2], u11 = u.m[3];
        cdouble *a = amps_.data();
        const std::size_t dim = amps_.size();
        for (std::size_t base = 0; base < dim; base += 2 * s) {
            for (std::size_t off = 0; off < s; ++off) {
                const std::size_t i0 = base + off;
                const std::size_t i1 = i0 + s;
                const cdouble a0 = a[i0];
                const cdouble a1 = a[i1];
                a[i0] = u00 * a0 + u01 * a1;
                a[i1] = u10 * a0 + u11 * a1;
            }
        }
    }

    // Real-rotation fast path; RY and the ansatz layers live here.
    void apply_ry(std::size_t qubit, double theta) {
        const std::size_t s = stride(qubit);
        const double c = std::cos(0.5 * theta);
        const double sn = std::sin(0.5 * theta);
        cdouble *a = amps_.data();
        const std::size_t dim = amps_.size();
        for (std::size_t base = 0; base < dim; base += 2 * s) {
            for (std::size_t off = 0; off < s; ++off) {
                const std::size_t i0 = base + off;
                const std::size_t i1 = i0 + s;
                const cdouble a0 = a[i0];
                const cdouble a1 = a[i1];
                a[i0] = c * a0 - sn * a1;
                a[i1] = sn * a0 + c * a1;
            }
        }
    }

    void apply_rx(std::size_t qubit, double theta) { apply_unitary(qubit, Unitary1Q::rx(theta)); }

    void apply_rz(std::size_t qubit, double theta) {
        const std::size_t s = stride(qubit);
        const cdouble p0 = std::polar(1.0, -0.5 * theta);
        const cdouble p1 = std::polar(1.0, 0.5 * theta);
        cdouble *a = amps_.data();
        const std::size_t dim = amps_.size();
        for (std::size_t base = 0; base < dim; base += 2 * s) {
            for (std::size_t off = 0; off < s; ++off) {
                a[base + off] *= p0;
                a[base + off + s] *= p1;
            }
        }
    }

    void apply_h(std::size_t qubit) {
        const std::size_t s = stride(qubit);
        const double r = 1.0 / std::sqrt(2.0);
        cdouble *a = amps_.data();
        const std::size_t dim = amps_.size();
        for (std::size_t base = 0; base < dim; base += 2 * s) {
            for (std::size_t off = 0; off < s; ++off) {
                const std::size_t i0 = base + off;
                const std::size_t i1 = i0 + s;
                const cdouble a0 = a[i0];
                const cdouble a1 = a[i1];
                a[i0] = r * (a0 + a1);
                a[i1] = r * (a0 - a1);
            }
        }
    }

    void apply_x(std::size_t qubit) {
        const std::size_t s = stride(qubit);
        cdouble *a = amps_.data();
        const std::size_t dim = amps_.size();
        for (std::size_t base = 0; base < dim; base += 2 * s) {
            for (std::size_t off = 0; off < s; ++off) {
                std::swap(a[base + off], a[base + off + s]);
            }
        }
    }

    void apply_z(std::size_t qubit) {
        const std::size_t s = stride(qubit);
        cdouble *a = amps_.data();
        const std::size_t dim = amps_.size();
        for (std::size_t base = 0; base < dim; base += 2 * s) {
            for (std::size_t off = 0; off < s; ++off) {
                a[base + off + s] = -a[base + off + s];
            }
        }
    }

    void apply_cnot(std::size_t control, std::size_t target) {
        const auto [cmask, tmask] = two_qubit_masks(control, target);
        cdouble *a = amps_.data();
        const std::size_t dim = amps_.size();
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & cmask) != 0 && (i & tmask) == 0) {
                std::swap(a[i], a[i | tmask]);
            }
        }
    }

    void apply_cz(std::size_t a_qubit, std::size_t b_qubit) {
        const auto [amask, bmask] = two_qubit_masks(a_qubit, b_qubit);
        cdouble *a = amps_.data();
        const std::size_t dim = amps_.size();
        const std::size_t both = amask | bmask;
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & both) == both) {
                a[i] = -a[i];
            }
        }
    }

    std::vector<double> probabilities() const {
        std::vector<double> probs(amps_.size());
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            probs[i] = std::norm(amps_[i]);
        }
        return probs;
    }

    /**
     * Draws `shots` basis-state indices by inverse CDF over the probability
     * vector; the generator alone determines the outcome sequence, so replay
     * with the same seed is bit-for-bit identical.
     */
    std::map<std::uint64_t, std::uint64_t> sample(std::uint64_t shots, Rng &rng) const {
        if (shots < 1) {
            throw ConfigError("sample: shots must be >= 1");
        }
        std::vector<double> cdf(amps_.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            acc += std::norm(amps_[i]);
            cdf[i] = acc;
        }
        const double total = cdf.back();
        std::map<std::uint64_t, std::uint64_t> histogram;
        for (std::uint64_t s = 0; s < shots; ++s) {
            const double u = rng.uniform() * total;
            const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            const std::size_t idx =
                it == cdf.end() ? amps_.size() - 1
                                : static_cast<std::size_t>(it - cdf.begin());
            ++histogram[idx];
        }
        return histogram;
    }

    /**
     * Projective Z measurement of one qubit: collapses the register and
     * renormalizes. Returns the observed bit.
     */
    int measure(std::size_t qubit, Rng &rng) {
        const std::size_t mask = stride(qubit);
        double p1 = 0.0;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & mask) != 0) {
                p1 += std::norm(amps_[i]);
            }
        }
        const int outcome = rng.uniform() < p1 ? 1 : 0;
        const double p_keep = outcome == 1 ? p1 : 1.0 - p1;
        if (p_keep <= 0.0) {
            throw NumericError("measure: zero-probability branch selected");
        }
        const double scale = 1.0 / std::sqrt(p_keep);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            const bool is_one = (i & mask) != 0;
            if (is_one != (outcome == 1)) {
                amps_[i] = 0.0;
            } else {
                amps_[i] *= scale;
            }
        }
        return outcome;
    }

  private:
    std::size_t stride(std::size_t qubit) const {
        if (qubit >= n_) {
            throw ConfigError("qubit index " + std::to_string(qubit) + " out of range for " +
                              std::to_string(n_) + " qubits");
        }
        return std::size_t{1} << (n_ - 1 - qubit);
    }

    std::pair<std::size_t, std::size_t> two_qubit_masks(std::size_t qa, std::size_t qb) const {
        if (qa == qb) {
            throw ConfigError("two-qubit gate requires distinct qubits");
        }
        return {stride(qa), stride(qb)};
    }

    std::size_t n_;
    std::vector<cdouble> amps_;
};

// |<a|b>|^2; global phase drops out by construction.
inline double fidelity(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ConfigError("fidelity: qubit counts differ");
    }
    cdouble overlap(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        overlap += std::conj(a.amp(i)) * b.amp(i);
    }
    return std::norm(overlap);
}

/**
 * Pure-state restriction to `keep` qubits (in the given order, which defines
 * the output bit order). The discarded qubits must carry no probability mass:
 * residual mass >= 1e-9 raises a NumericError, the signature of a TeleGate
 * whose communication qubits were not returned to |0>.
 */
inline StateVector extract_subspace(const StateVector &state,
                                    const std::vector<std::size_t> &keep,
                                    bool expect_rest_zero = true) {
    const std::size_t n = state.num_qubits();
    std::vector<bool> kept(n, false);
    for (std::size_t q : keep) {
        if (q >= n) {
            throw ConfigError("extract_subspace: qubit index out of range");
        }
        if (kept[q]) {
            throw ConfigError("extract_subspace: duplicate qubit in keep list");
        }
        kept[q] = true;
    }
    if (keep.empty() || keep.size() > n) {
        throw ConfigError("extract_subspace: keep list must name 1..n qubits");
    }

    std::size_t discard_mask = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (!kept[q]) {
            discard_mask |= std::size_t{1} << (n - 1 - q);
        }
    }

    double leak = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if ((i & discard_mask) != 0) {
            leak += std::norm(state.amp(i));
        }
    }
    if (expect_rest_zero && leak >= 1e-9) {
        throw NumericError("extract_subspace: discarded qubits carry probability " +
                           std::to_string(leak) + " (entanglement leak)");
    }

    const std::size_t k = keep.size();
    std::vector<cdouble> out(std::size_t{1} << k, cdouble(0.0, 0.0));
    for (std::size_t i = 0; i < state.size(); ++i) {
        if ((i & discard_mask) != 0) {
            continue;
        }
        std::size_t out_index = 0;
        for (std::size_t pos = 0; pos < k; ++pos) {
            const std::size_t bit = (i >> (n - 1 - keep[pos])) & 1u;
            out_index |= bit << (k - 1 - pos);
        }
        out[out_index] = state.amp(i);
    }

    double norm = 0.0;
    for (const cdouble &a : out) {
        norm += std::norm(a);
    }
    if (norm <= 0.0) {
        throw NumericError("extract_subspace: zero norm after projection");
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (cdouble &a : out) {
        a *= scale;
    }
    return StateVector::from_amplitudes(k, std::move(out));
}

// Basis index rendered with qubit 0 first ("010" has qubit 1 set).
inline std::string index_to_bitstring(std::uint64_t index, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t q = 0; q < n; ++q) {
        if ((index >> (n - 1 - q)) & 1u) {
            s[q] = '1';
        }
    }
    return s;
}

} // namespace dvqe
