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
 * Brute-force reference implementations for small systems.
 *
 * Everything here works with explicit dense matrices and exact matrix
 * exponentials (eigendecompositions), independently of the gate kernels in
 * the simulator and of the Krylov machinery in the subspace module. The
 * drive conserves parity, so time evolution is computed per parity sector,
 * which quarters the dense-algebra cost without approximation.
 */

#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qwork/lattice.hpp"
#include "qwork/protocol.hpp"

namespace qwork::oracle {

using DenseOperator = Eigen::MatrixXcd;

inline constexpr int kMaxDenseQubits = 12;
inline constexpr int kMaxTableQubits = 10;

/// H = -sum_q Z_q + (lambda/|E|) sum_(p,r) X_p X_r as an explicit matrix.
DenseOperator dense_hamiltonian(const lattice::Graph &g, double lambda);

/// exp(-i theta H) of a Hermitian matrix via full eigendecomposition.
DenseOperator dense_expm(const Eigen::MatrixXcd &h, double theta);

/// Dense product of the exact step exponentials, in the same order as the
/// compiled gate program (step 0 acts first).
DenseOperator exact_trotter_unitary(const lattice::Graph &g, const protocol::DriveParams &p);

/**
 * Reference for the time-ordered evolution: the second-order product with
 * n_steps = refinement, certified by comparing against the doubled step
 * count. Throws with the achieved delta when the doubling still moves the
 * unitary by 1e-9 or more.
 */
DenseOperator continuum_evolution(const lattice::Graph &g, const protocol::DriveParams &p,
                                  int refinement = 4096);

struct TPMDistribution {
    int n_qubits = 0;
    /// Row-major table indexed by (y << n) | x.
    std::vector<double> table;

    double prob(std::size_t y, std::size_t x) const {
        return table[(y << n_qubits) | x];
    }
    double normalization() const;
    /// Exact mean and variance of the work by direct summation.
    std::pair<double, double> moments() const;
};

/// Ideal two-point distribution p(y, x) = |<y|U|x>|^2 p_th(x); n <= 10.
TPMDistribution exact_tpm_distribution(const lattice::Graph &g, const protocol::DriveParams &p,
                                       bool use_continuum = false);

/// Per-initial-state final-energy moments <H_0> and <H_0^2>; independent of
/// beta, so one table serves a whole temperature sweep.
struct ConditionalMomentTable {
    int n_qubits = 0;
    std::vector<double> h1; ///< <psi_x | H_0 | psi_x>
    std::vector<double> h2; ///< <psi_x | H_0^2 | psi_x>
};

ConditionalMomentTable conditional_moment_table(const lattice::Graph &g, double tau, double gamma,
                                                int n_trotter);

/// Gibbs-average the conditional table into (mean, variance) of the work.
std::pair<double, double> moments_from_table(const ConditionalMomentTable &table, double beta);

/// Exact Trotterized work moments at one parameter point.
std::pair<double, double> exact_moments(const lattice::Graph &g, const protocol::DriveParams &p);

} // namespace qwork::oracle
