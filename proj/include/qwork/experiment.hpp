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
 * Experiment runner: the three published sweep families (protocol duration,
 * drive strength, system size) plus free-form grids, with deterministic
 * seeding, bounded-concurrency execution, and CSV/JSON emission.
 */

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwork/lattice.hpp"
#include "qwork/sim.hpp"
#include "qwork/workstats.hpp"

namespace qwork::experiment {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::string family = "custom"; ///< scan | coupling | size | custom
    std::string graph_file;        ///< explicit graph instead of generated layouts
    std::vector<int> n_spins;
    std::vector<int> layout_indices; ///< "size" family; defaults to 1..15
    std::vector<double> taus, gammas, betas;
    /// Trotter step grid; empty in the "size" family means per-graph diameter.
    std::vector<int> n_trotters;
    std::size_t shots = 20000;
    sim::NoiseSpec noise;
    std::vector<workstats::Estimator> estimators;
    double delta = 1e-3; ///< Ext-SQT pruning mass tolerance
    std::uint64_t seed = 0;
    std::string out = "results";
    std::string samples_in; ///< post-process an external dump instead of sampling
    int max_statevector_qubits = 25;
    int oracle_max_qubits = 10;
    std::size_t max_subspace = 32000;
    int workers = 0; ///< 0 = hardware concurrency

    /// Parse the key = value config format (see README for the schema).
    static ExperimentConfig from_file(const std::string &path);

    /// Fill family-specific grid defaults for fields left empty.
    void apply_family_defaults();

    void validate() const; ///< throws ConfigError
};

struct ResultRow {
    int n_spin = 0;
    int n_edges = 0;
    double beta = 0.0, tau = 0.0, gamma = 0.0;
    int n_trotter = 0;
    workstats::Estimator tag = workstats::Estimator::kRaw;
    double mean_w = 0.0, var_w = 0.0;
    double sigma = 0.0, tur_bound = 0.0;
    bool tur_satisfied = true;
    std::size_t n_samples = 0; ///< samples drawn (0 for analytic estimators)
    std::size_t n_kept = 0;    ///< samples surviving parity post-selection
    std::size_t subspace_dim = 0;
    double gibbs_mass = 0.0;
    std::uint64_t seed = 0;
};

struct RunOutput {
    std::vector<ResultRow> rows;
    std::vector<std::string> notices;
    std::string csv_path;
    std::string manifest_path;
};

/// Execute the configured grid and write <out>.csv plus <out>.manifest.json.
RunOutput run_experiment(const ExperimentConfig &config);

void write_rows_csv(const std::string &path, std::span<const ResultRow> rows);
std::vector<ResultRow> read_rows_csv(const std::string &path);

/**
 * Emit per-panel plot data: <prefix>_mean.csv and <prefix>_var.csv against
 * the family's swept axis, and <prefix>_tur.csv with (bound, variance)
 * pairs ordered by that axis.
 */
void emit_plotdata(std::span<const ResultRow> rows, const std::string &family,
                   const std::string &prefix);

} // namespace qwork::experiment
