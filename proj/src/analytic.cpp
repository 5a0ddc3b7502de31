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

#include "qwork/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qwork/rng.hpp"

namespace qwork::analytic {

namespace {

constexpr double kPi = std::numbers::pi;
// Switch to the series form inside this distance of the removable
// singularity; the direct formula loses ~8 digits there to cancellation.
constexpr double kSingularityRadius = 1e-4;

} // namespace

double g_env(double x) {
    x = std::abs(x);
    const double s = x - kPi;
    if (std::abs(s) < kSingularityRadius) {
        // 1 + cos(pi + s) = (s^2/2)(1 - s^2/12 + ...), and the pole factor
        // cancels exactly: g = pi^2 (pi+s)^2 / (2 pi + s)^2 * (1 - s^2/12).
        const double base = kPi * (kPi + s) / (2.0 * kPi + s);
        return base * base * (1.0 - s * s / 12.0);
    }
    const double x2 = x * x;
    const double d = kPi * kPi - x2;
    return 2.0 * kPi * kPi * x2 * (1.0 + std::cos(x)) / (d * d);
}

double gamma_k(double omega, double beta, int k) {
    if (k < 1) {
        throw std::invalid_argument("gamma_k: k must be >= 1");
    }
    const double bo = beta * omega;
    if (k % 2 == 1) {
        return 0.5 * std::pow(bo, k - 1);
    }
    if (std::abs(bo) < 1e-6) {
        // coth(z/2) ~ 2/z, so the even-k weight tends to (beta omega)^(k-2).
        return (k == 2) ? 1.0 : 0.0;
    }
    return 0.5 * std::pow(bo, k - 1) / std::tanh(0.5 * bo);
}

double kubo_relaxation(double t, double beta, int n_edges) {
    if (n_edges < 1) {
        throw std::invalid_argument("kubo_relaxation: need at least one edge");
    }
    if (!(beta >= 0.0)) {
        throw std::invalid_argument("kubo_relaxation: beta must be >= 0");
    }
    const double sech = 1.0 / std::cosh(beta);
    return (beta / (2.0 * n_edges)) * (std::tanh(beta) * std::cos(4.0 * t) + beta * sech * sech);
}

void LRTParams::validate() const {
    if (!(beta > 0.0)) {
        throw std::invalid_argument("LRTParams: beta must be positive");
    }
    if (n_edges < 1) {
        throw std::invalid_argument("LRTParams: need at least one edge");
    }
    if (!(tau > 0.0)) {
        throw std::invalid_argument("LRTParams: tau must be positive");
    }
}

double lrt_cumulant(int k, const LRTParams &p) {
    if (k < 1) {
        throw std::invalid_argument("lrt_cumulant: k must be >= 1");
    }
    p.validate();
    const double prefactor = p.gamma * p.gamma / p.n_edges;
    const double beta_part =
        0.5 * std::pow(p.beta, 1 - k) * std::tanh(p.beta) * gamma_k(4.0, p.beta, k);
    return prefactor * beta_part * g_env(4.0 * p.tau);
}

double lrt_slope(double beta) {
    if (!(beta > 0.0)) {
        throw std::invalid_argument("lrt_slope: beta must be positive");
    }
    return 2.0 * beta / std::tanh(2.0 * beta);
}

std::pair<double, double> wn_moments(int n_spin, double beta) {
    if (n_spin < 1) {
        throw std::invalid_argument("wn_moments: n_spin must be >= 1");
    }
    if (!(beta >= 0.0)) {
        throw std::invalid_argument("wn_moments: beta must be >= 0");
    }
    const double t = std::tanh(beta);
    return {n_spin * t, n_spin * (2.0 - t * t)};
}

std::vector<sim::TPMSample> wn_sampler(int n_spin, double beta, std::size_t shots,
                                       std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("wn_sampler: shots must be >= 1");
    }
    std::vector<sim::TPMSample> samples;
    samples.reserve(shots);
    for (std::size_t k = 0; k < shots; k++) {
        auto rng = make_stream(seed, k);
        Bitstring x = sim::sample_initial(beta, n_spin, rng);
        Bitstring y(n_spin);
        for (int q = 0; q < n_spin; q++) {
            y.set(q, bernoulli(rng, 0.5));
        }
        samples.push_back({std::move(x), std::move(y)});
    }
    return samples;
}

} // namespace qwork::analytic
