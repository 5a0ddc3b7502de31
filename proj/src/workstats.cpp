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

#include "qwork/workstats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qwork::workstats {

std::string_view to_string(Estimator tag) {
    switch (tag) {
    case Estimator::kRaw:
        return "raw";
    case Estimator::kSqt:
        return "sqt";
    case Estimator::kExtSqt:
        return "ext_sqt";
    case Estimator::kExact:
        return "exact";
    case Estimator::kLrt:
        return "lrt";
    case Estimator::kWn:
        return "wn";
    }
    return "?";
}

Estimator estimator_from_string(std::string_view name) {
    if (name == "raw") {
        return Estimator::kRaw;
    }
    if (name == "sqt") {
        return Estimator::kSqt;
    }
    if (name == "ext_sqt") {
        return Estimator::kExtSqt;
    }
    if (name == "exact") {
        return Estimator::kExact;
    }
    if (name == "lrt") {
        return Estimator::kLrt;
    }
    if (name == "wn") {
        return Estimator::kWn;
    }
    throw std::invalid_argument("unknown estimator: " + std::string(name));
}

long long energy_of(const Bitstring &bits) {
    return 2LL * bits.popcount() - bits.size();
}

long long work_of(const sim::TPMSample &sample) {
    if (sample.x.size() != sample.y.size()) {
        throw std::invalid_argument("work_of: bitstring lengths differ");
    }
    return energy_of(sample.y) - energy_of(sample.x);
}

WorkStatistics raw_estimators(std::span<const sim::TPMSample> samples) {
    if (samples.size() < 2) {
        throw std::invalid_argument("raw_estimators: need at least 2 samples");
    }
    const double n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (const auto &s : samples) {
        sum += static_cast<double>(work_of(s));
    }
    const double mean = sum / n;
    double ss = 0.0;
    for (const auto &s : samples) {
        const double d = static_cast<double>(work_of(s)) - mean;
        ss += d * d;
    }
    return {mean, ss / (n - 1.0), samples.size(), Estimator::kRaw};
}

double entropy_production(double mean, double beta) {
    if (!(beta > 0.0)) {
        throw std::invalid_argument("entropy production undefined at infinite temperature; "
                                    "use TUR in variance form with bound -> 0");
    }
    return beta * mean;
}

namespace {

// Solve u tanh(u) = s for u > 0 by safeguarded Newton iteration.
double inverse_x_tanh_x(double s) {
    // u tanh u <= u^2, so sqrt(s) brackets from below; and u tanh u >= ...
    // grows past s before max(sqrt(s), s) + 1.
    double lo = std::sqrt(s) * (1.0 - 1e-12);
    double hi = std::max(std::sqrt(s), s) + 1.0;
    auto value = [](double u) { return u * std::tanh(u); };
    while (value(hi) < s) {
        hi *= 2.0; // paranoid widening; not expected to trigger
    }
    double u = std::clamp(std::sqrt(s), lo, hi);
    for (int iter = 0; iter < 200; iter++) {
        const double t = std::tanh(u);
        const double f = u * t - s;
        if (std::abs(f) <= 1e-12) {
            return u;
        }
        if (f > 0.0) {
            hi = u;
        } else {
            lo = u;
        }
        const double sech2 = 1.0 - t * t;
        const double df = t + u * sech2;
        double next = u - f / df;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        u = next;
    }
    return u;
}

} // namespace

double tur_f(double sigma) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("tur_f: sigma must be positive");
    }
    const double u = inverse_x_tanh_x(0.5 * sigma);
    const double sh = std::sinh(u);
    return 1.0 / (sh * sh);
}

double tur_h(double sigma) {
    if (sigma < 0.0) {
        throw std::invalid_argument("tur_h: sigma must be >= 0");
    }
    if (sigma == 0.0) {
        return 0.0;
    }
    // sigma^2 f(sigma) computed as a squared ratio: stable for tiny sigma,
    // where sinh(u) ~ sqrt(sigma / 2) and h ~ 2 sigma.
    const double u = inverse_x_tanh_x(0.5 * sigma);
    const double ratio = sigma / std::sinh(u);
    return ratio * ratio;
}

TURRecord tur_check(const WorkStatistics &stats, double beta, double tol_abs) {
    if (!(beta > 0.0)) {
        throw std::invalid_argument("tur_check: beta must be positive");
    }
    TURRecord rec;
    rec.variance = stats.variance;
    rec.sigma = beta * stats.mean;
    rec.bound = (stats.mean > 0.0) ? tur_h(rec.sigma) / (beta * beta) : 0.0;
    rec.slack = rec.variance - rec.bound;
    rec.satisfied = rec.variance >= rec.bound - tol_abs;
    return rec;
}

} // namespace qwork::workstats
