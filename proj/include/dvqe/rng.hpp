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
#include <numbers>
#include <random>
#include <string_view>

namespace dvqe {

inline std::uint64_t splitmix64(std::uint64_t &state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/**
 * Derives an independent stream seed from (root seed, stream name, index).
 * Every randomized component draws from its own named stream so toggling one
 * component does not reshuffle the randomness seen by the others.
 */
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::string_view name,
                                        std::uint64_t index = 0) {
    std::uint64_t h = 0xcbf29ce484222325ull; // FNV-1a over the stream name
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::uint64_t state = seed ^ h;
    std::uint64_t mixed = splitmix64(state);
    state ^= index + 0x632be59bd9b4e019ull;
    return mixed ^ splitmix64(state);
}

/**
 * Deterministic uniform generator: a seeded mt19937_64 whose floating-point
 * outputs are produced by explicit bit manipulation, not by
 * std::uniform_real_distribution, so replay is identical across standard
 * library implementations.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random mantissa bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Rotation angle in [0, 2*pi).
    double angle() { return uniform() * (2.0 * std::numbers::pi); }

    // Uniform index in [0, k).
    std::size_t index(std::size_t k) { return static_cast<std::size_t>(next_u64() % k); }

  private:
    std::mt19937_64 engine_;
};

// Wraps an angle into [0, 2*pi); rotation parameters are periodic.
inline double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(theta, two_pi);
    if (w < 0.0) {
        w += two_pi;
    }
    return w == two_pi ? 0.0 : w;
}

} // namespace dvqe
