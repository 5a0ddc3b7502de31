// Copyright 2025-2026 The qwork developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Deterministic random streams.
 *
 * Every stochastic task (a shot, a grid point) derives its own generator
 * from (seed, stream index) through a SplitMix64 chain, so results are
 * reproducible regardless of execution order or caching, and independent
 * streams can run concurrently. Samplers below avoid std distributions:
 * their output is pinned by the standard only for the raw engine.
 */

#pragma once

#include <cstdint>
#include <random>

namespace qwork {

inline std::uint64_t splitmix64(std::uint64_t &state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Independent generator for task `stream_index` of run `seed`.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream_index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (stream_index * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL);
    std::uint64_t b = splitmix64(s);
    return std::mt19937_64(b);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(std::mt19937_64 &rng, double p) { return uniform01(rng) < p; }

/// Uniform integer in [0, n); n must be nonzero.
inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n) {
    // Rejection-free multiply-shift; bias is < 2^-64 * n, negligible here.
    unsigned __int128 wide = static_cast<unsigned __int128>(rng()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
}

} // namespace qwork
