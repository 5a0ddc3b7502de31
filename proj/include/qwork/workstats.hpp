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
 * Work-sample arithmetic, estimators, entropy production, and the
 * uncertainty-relation bound Var[W] >= h(Sigma) / beta^2 with
 * h(x) = x^2 f(x), f(x) = 1 / sinh^2(u) where u solves u tanh(u) = x/2.
 */

#pragma once

#include <span>
#include <string_view>

#include "qwork/bitstring.hpp"
#include "qwork/sim.hpp"

namespace qwork::workstats {

enum class Estimator { kRaw, kSqt, kExtSqt, kExact, kLrt, kWn };

std::string_view to_string(Estimator tag);
Estimator estimator_from_string(std::string_view name);

struct WorkStatistics {
    double mean = 0.0;
    double variance = 0.0;
    std::size_t n_samples = 0;
    Estimator tag = Estimator::kRaw;
};

struct TURRecord {
    double sigma = 0.0;    ///< entropy production beta * E[W]
    double bound = 0.0;    ///< beta^-2 h(sigma)
    double variance = 0.0;
    double slack = 0.0;    ///< variance - bound
    bool satisfied = true;
};

/// Diagonal energy of a basis state: sum_q (-1)^(x_q + 1) = 2 popcount - n.
long long energy_of(const Bitstring &bits);

/// Work of one trajectory, E_y - E_x (always an even integer).
long long work_of(const sim::TPMSample &sample);

/// Sample mean and 1/(N-1) variance of the work values.
WorkStatistics raw_estimators(std::span<const sim::TPMSample> samples);

/// Sigma = beta * mean; rejects beta = 0, where the bound degenerates.
double entropy_production(double mean, double beta);

/// f(sigma); strictly decreasing, f(sigma) ~ 2/sigma as sigma -> 0.
double tur_f(double sigma);

/// h(sigma) = sigma^2 f(sigma), continuously extended with h(0) = 0.
double tur_h(double sigma);

/**
 * Evaluate the uncertainty-relation record. A non-positive sampled mean
 * (possible from shot noise near Sigma = 0) degrades the bound to 0 rather
 * than erroring. `tol_abs` is the slack below which the relation is still
 * reported as satisfied.
 */
TURRecord tur_check(const WorkStatistics &stats, double beta, double tol_abs = 1e-9);

} // namespace qwork::workstats
