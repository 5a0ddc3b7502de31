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
 * Closed-form oracles from the linear-response analysis of the driven
 * transverse-field Ising chain, plus the extreme-depolarizing
 * ("white-noise") limit of the work distribution.
 *
 * Work cumulants in the weak-drive regime factorize as
 *   kappa_k = (gamma^2 / |E|) [beta^(1-k)/2 tanh(beta) gamma_k(4 beta)]
 *             g(4 tau),
 * so the mean is kappa_1 = (gamma^2/|E|) (tanh beta / 4) g(4 tau) and the
 * variance is kappa_2 = (gamma^2/|E|) tanh(beta) coth(2 beta) g(4 tau).
 */

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qwork/sim.hpp"

namespace qwork::analytic {

/// Spectral envelope g(x) = 2 pi^2 x^2 (1 + cos x) / (pi^2 - x^2)^2 with
/// removable singularities at x = +-pi (limit pi^2 / 4).
double g_env(double x);

/// Cumulant weight: (beta omega)^(k-1)/2 times coth(beta omega / 2) for
/// even k; the omega -> 0 limit is finite (1 for k = 2, 0 for even k > 2).
double gamma_k(double omega, double beta, int k);

/// Kubo relaxation function of the undriven chain:
/// Psi_0(t) = (beta / 2|E|) [tanh(beta) cos(4t) + beta sech^2(beta)].
double kubo_relaxation(double t, double beta, int n_edges);

struct LRTParams {
    double beta = 1.0;
    double gamma = 1.0;
    double tau = 1.0;
    int n_edges = 1;

    void validate() const;
};

/// k-th work cumulant in linear response (k = 1 mean, k = 2 variance).
double lrt_cumulant(int k, const LRTParams &p);

/// Slope of the parametric (bound, variance) line: m = 2 beta coth(2 beta).
double lrt_slope(double beta);

/// Moments under extreme depolarizing noise: mean = n tanh(beta),
/// variance = n (2 - tanh^2 beta).
std::pair<double, double> wn_moments(int n_spin, double beta);

/// Trajectories with thermal x and uniformly random y (independent).
std::vector<sim::TPMSample> wn_sampler(int n_spin, double beta, std::size_t shots,
                                       std::uint64_t seed);

} // namespace qwork::analytic
