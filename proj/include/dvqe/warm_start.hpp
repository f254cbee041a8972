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
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "dvqe/error.hpp"
#include "dvqe/rng.hpp"

namespace dvqe {

/**
 * init_type selects the parameter initialization strategy:
 *   1 random draw, 2 black hole, 3 gray wolf, 4 artificial bee colony.
 * Each strategy consumes a PRNG stream derived from (seed, init_type), so
 * switching strategies never reshuffles the other randomness in a run.
 */
struct InitConfig {
    int init_type = 1;
    std::size_t population = 20; // N
    std::size_t max_iter = 50;   // M
    std::uint64_t seed = 0;
    std::size_t abc_limit = 20;  // trials before a source is abandoned

    void validate() const {
        if (init_type < 1 || init_type > 4) {
            throw ConfigError("InitConfig: init_type must be in {1, 2, 3, 4}");
        }
        if (init_type != 1 && population < 2) {
            throw ConfigError("InitConfig: population must be >= 2 for metaheuristics");
        }
        if (max_iter == 0) {
            throw ConfigError("InitConfig: max_iter must be >= 1");
        }
        if (abc_limit == 0) {
            throw ConfigError("InitConfig: abc_limit must be >= 1");
        }
    }
};

struct WarmStartResult {
    std::vector<double> theta;
    double energy = 0.0;
};

inline std::vector<double> random_angles(std::size_t p, Rng &rng) {
    std::vector<double> theta(p);
    for (double &t : theta) {
        t = rng.angle();
    }
    return theta;
}

// Uniform i.i.d. draw from [0, 2*pi)^p.
inline std::vector<double> random_init(std::size_t p, std::uint64_t seed) {
    if (p == 0) {
        throw ConfigError("random_init: p must be >= 1");
    }
    Rng rng(seed);
    return random_angles(p, rng);
}

namespace detail {

inline Rng warm_start_rng(const InitConfig &cfg) {
    return Rng(derive_stream_seed(cfg.seed, "warm-start",
                                  static_cast<std::uint64_t>(cfg.init_type)));
}

// Indices of the population sorted by ascending energy, ties by index.
inline std::vector<std::size_t> rank_by_energy(const std::vector<double> &energies) {
    std::vector<std::size_t> order(energies.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return energies[a] < energies[b]; });
    return order;
}

// Fitness-proportionate onlooker weights: fit_i = 1/(1 + E_i - E_min),
// normalized into a probability distribution.
inline std::vector<double> abc_selection_weights(const std::vector<double> &energies) {
    const double e_min = *std::min_element(energies.begin(), energies.end());
    std::vector<double> weights(energies.size());
    double total = 0.0;
    for (std::size_t i = 0; i < energies.size(); ++i) {
        weights[i] = 1.0 / (1.0 + (energies[i] - e_min));
        total += weights[i];
    }
    for (double &w : weights) {
        w /= total;
    }
    return weights;
}

/**
 * One gray-wolf position update against the three leaders: for each leader L
 * the wolf computes X_L = x_L - A o |C o x_L - x| with per-dimension
 * coefficients A = 2 a r1 - a and C = 2 r2, then moves to the wrapped average
 * of the three X_L. With a = 0 this is exactly the leader centroid.
 */
inline std::vector<double> gwo_move(const std::vector<double> &wolf,
                                    const std::vector<const std::vector<double> *> &leaders,
                                    double a, Rng &rng) {
    const std::size_t p = wolf.size();
    std::vector<double> next(p, 0.0);
    for (const std::vector<double> *leader : leaders) {
        for (std::size_t d = 0; d < p; ++d) {
            const double coef_a = 2.0 * a * rng.uniform() - a;
            const double coef_c = 2.0 * rng.uniform();
            next[d] += (*leader)[d] - coef_a * std::abs(coef_c * (*leader)[d] - wolf[d]);
        }
    }
    for (double &x : next) {
        x = wrap_angle(x / static_cast<double>(leaders.size()));
    }
    return next;
}

} // namespace detail

/**
 * Black-hole search: the best star attracts the rest, x <- x + r o (x_bh - x)
 * with r per-dimension uniform. A star entering the event horizon
 * R = f_bh / sum_i f_i (shifted positive fitness f_i = E_i - E_min + 1e-9,
 * distances Euclidean in parameter space) is swallowed and re-randomized.
 * Returns the best parameters ever observed.
 */
template <class EnergyFn>
WarmStartResult black_hole_init(EnergyFn &&objective, std::size_t p, const InitConfig &cfg) {
    cfg.validate();
    if (p == 0) {
        throw ConfigError("black_hole_init: p must be >= 1");
    }
    constexpr double fitness_shift = 1e-9;
    Rng rng = detail::warm_start_rng(cfg);

    const std::size_t n = cfg.population;
    std::vector<std::vector<double>> stars(n);
    std::vector<double> energies(n);
    for (std::size_t i = 0; i < n; ++i) {
        stars[i] = random_angles(p, rng);
        energies[i] = objective(std::span<const double>(stars[i]));
    }
    std::size_t bh = static_cast<std::size_t>(
        std::min_element(energies.begin(), energies.end()) - energies.begin());
    WarmStartResult best{stars[bh], energies[bh]};

    for (std::size_t iter = 0; iter < cfg.max_iter; ++iter) {
        const std::vector<double> bh_pos = stars[bh];
        const double e_min = energies[bh];
        double fitness_sum = 0.0;
        for (double e : energies) {
            fitness_sum += (e - e_min) + fitness_shift;
        }
        const double horizon = fitness_shift / fitness_sum;

        for (std::size_t i = 0; i < n; ++i) {
            if (i == bh) {
                continue;
            }
            double dist_sq = 0.0;
            for (std::size_t d = 0; d < p; ++d) {
                stars[i][d] =
                    wrap_angle(stars[i][d] + rng.uniform() * (bh_pos[d] - stars[i][d]));
                const double delta = stars[i][d] - bh_pos[d];
                dist_sq += delta * delta;
            }
            if (std::sqrt(dist_sq) < horizon) {
                stars[i] = random_angles(p, rng); // swallowed
            }
            energies[i] = objective(std::span<const double>(stars[i]));
            if (energies[i] < energies[bh]) {
                bh = i;
            }
            if (energies[i] < best.energy) {
                best = {stars[i], energies[i]};
            }
        }
    }
    return best;
}

/**
 * Gray-wolf search: the three best wolves lead; every omega wolf moves to the
 * average of its three leader-relative positions, with the exploration
 * coefficient a shrinking linearly from 2 to 0 across the iteration budget.
 */
template <class EnergyFn>
WarmStartResult gray_wolf_init(EnergyFn &&objective, std::size_t p, const InitConfig &cfg) {
    cfg.validate();
    if (cfg.population < 4) {
        throw ConfigError("gray_wolf_init: population must be >= 4");
    }
    if (p == 0) {
        throw ConfigError("gray_wolf_init: p must be >= 1");
    }
    Rng rng = detail::warm_start_rng(cfg);

    const std::size_t n = cfg.population;
    std::vector<std::vector<double>> wolves(n);
    std::vector<double> energies(n);
    for (std::size_t i = 0; i < n; ++i) {
        wolves[i] = random_angles(p, rng);
        energies[i] = objective(std::span<const double>(wolves[i]));
    }
    auto order = detail::rank_by_energy(energies);
    WarmStartResult best{wolves[order[0]], energies[order[0]]};

    for (std::size_t iter = 0; iter < cfg.max_iter; ++iter) {
        const double a =
            cfg.max_iter > 1
                ? 2.0 * (1.0 - static_cast<double>(iter) / static_cast<double>(cfg.max_iter - 1))
                : 0.0;
        order = detail::rank_by_energy(energies);
        const std::vector<double> alpha = wolves[order[0]];
        const std::vector<double> beta = wolves[order[1]];
        const std::vector<double> delta = wolves[order[2]];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == order[0] || i == order[1] || i == order[2]) {
                continue;
            }
            wolves[i] = detail::gwo_move(wolves[i], {&alpha, &beta, &delta}, a, rng);
            energies[i] = objective(std::span<const double>(wolves[i]));
            if (energies[i] < best.energy) {
                best = {wolves[i], energies[i]};
            }
        }
    }
    return best;
}

/**
 * Artificial bee colony: employed bees perturb one dimension of their source
 * toward a random peer, onlookers re-sample sources with probability
 * proportional to fitness 1/(1 + E - E_min), and sources stale for abc_limit
 * trials are abandoned to scouts.
 */
template <class EnergyFn>
WarmStartResult bee_colony_init(EnergyFn &&objective, std::size_t p, const InitConfig &cfg) {
    cfg.validate();
    if (p == 0) {
        throw ConfigError("bee_colony_init: p must be >= 1");
    }
    Rng rng = detail::warm_start_rng(cfg);

    const std::size_t n = cfg.population;
    std::vector<std::vector<double>> sources(n);
    std::vector<double> energies(n);
    std::vector<std::size_t> trials(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        sources[i] = random_angles(p, rng);
        energies[i] = objective(std::span<const double>(sources[i]));
    }
    auto order = detail::rank_by_energy(energies);
    WarmStartResult best{sources[order[0]], energies[order[0]]};

    auto try_neighborhood = [&](std::size_t i) {
        const std::size_t dim = rng.index(p);
        std::size_t k = rng.index(n - 1);
        if (k >= i) {
            ++k; // peer distinct from the source
        }
        std::vector<double> candidate = sources[i];
        const double phi = rng.uniform(-1.0, 1.0);
        candidate[dim] = wrap_angle(candidate[dim] + phi * (candidate[dim] - sources[k][dim]));
        const double e = objective(std::span<const double>(candidate));
        if (e < best.energy) {
            best = {candidate, e};
        }
        if (e < energies[i]) {
            sources[i] = std::move(candidate);
            energies[i] = e;
            trials[i] = 0;
        } else {
            ++trials[i];
        }
    };

    for (std::size_t iter = 0; iter < cfg.max_iter; ++iter) {
        for (std::size_t i = 0; i < n; ++i) { // employed phase
            try_neighborhood(i);
        }

        const std::vector<double> weights = detail::abc_selection_weights(energies);
        for (std::size_t pick = 0; pick < n; ++pick) { // onlooker phase
            const double u = rng.uniform();
            double acc = 0.0;
            std::size_t chosen = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                acc += weights[i];
                if (u < acc) {
                    chosen = i;
                    break;
                }
            }
            try_neighborhood(chosen);
        }

        for (std::size_t i = 0; i < n; ++i) { // scout phase
            if (trials[i] >= cfg.abc_limit) {
                sources[i] = random_angles(p, rng);
                energies[i] = objective(std::span<const double>(sources[i]));
                trials[i] = 0;
                if (energies[i] < best.energy) {
                    best = {sources[i], energies[i]};
                }
            }
        }
    }
    return best;
}

template <class EnergyFn>
WarmStartResult warm_start(EnergyFn &&objective, std::size_t p, const InitConfig &cfg) {
    cfg.validate();
    switch (cfg.init_type) {
    case 1: {
        WarmStartResult result;
        result.theta = random_init(p, derive_stream_seed(cfg.seed, "warm-start", 1));
        result.energy = objective(std::span<const double>(result.theta));
        return result;
    }
    case 2: return black_hole_init(objective, p, cfg);
    case 3: return gray_wolf_init(objective, p, cfg);
    default: return bee_colony_init(objective, p, cfg);
    }
}

} // namespace dvqe
