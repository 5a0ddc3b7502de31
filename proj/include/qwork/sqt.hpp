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
 * Sample-based post-processing: the measured bitstrings span a subspace,
 * the Hamiltonian is projected onto it, and the two-point work distribution
 * is recomputed there with exact linear algebra. Raw sampled estimators are
 * biased by device noise; these subspace estimators rebuild the statistics
 * from the ideal projected dynamics instead.
 *
 * The projected coupling matrix has at most |E| entries per row, all equal
 * to 1/|E|, so the step exponentials are applied with an error-controlled
 * Lanczos action at O(M^2) total cost per evolution.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "qwork/bitstring.hpp"
#include "qwork/lattice.hpp"
#include "qwork/protocol.hpp"
#include "qwork/sim.hpp"
#include "qwork/workstats.hpp"

namespace qwork::sqt {

struct Subspace {
    std::vector<Bitstring> basis;
    std::unordered_map<Bitstring, int, BitstringHash> index_of;

    std::size_t size() const { return basis.size(); }
    bool contains(const Bitstring &z) const { return index_of.count(z) != 0; }
    /// Append z unless already present; returns its index either way.
    int insert(const Bitstring &z);
};

struct ProjectedOperators {
    std::vector<double> e_diag; ///< diagonal energies per basis state
    int n_edges = 0;            ///< every stored entry of V~ equals 1/n_edges
    /// CSR pattern of the symmetric coupling matrix (both triangles stored).
    std::vector<std::int64_t> row_ptr;
    std::vector<std::int32_t> col_idx;

    std::size_t dim() const { return e_diag.size(); }
    /// y = V~ x.
    void matvec(std::span<const std::complex<double>> x,
                std::span<std::complex<double>> y) const;
};

/// Union of all sampled bitstrings (x then y per sample), insertion-ordered.
Subspace build_subspace(std::span<const sim::TPMSample> samples);

/// Project the diagonal and coupling operators onto the subspace.
ProjectedOperators project_operators(const lattice::Graph &g, const Subspace &s);

struct ExpmOptions {
    double tol = 1e-10; ///< per-application L2 error target
    int max_krylov = 96;
};

/// y = exp(-i theta V~) v by adaptive Lanczos (truncated Taylor for tiny
/// systems). Throws if the error estimate cannot be met.
void expm_multiply(const ProjectedOperators &op, double theta,
                   std::span<const std::complex<double>> v, std::span<std::complex<double>> y,
                   const ExpmOptions &options = {});

/// Full projected evolution operator T (dense M x M); refuses M > 8192 --
/// use sqt_estimate, which streams columns, for larger subspaces.
Eigen::MatrixXcd evolve_subspace(const ProjectedOperators &op, const protocol::DriveParams &p,
                                 const ExpmOptions &options = {});

struct SQTEstimate {
    workstats::WorkStatistics stats;
    std::size_t subspace_dim = 0;
    /// Fraction of the full-space Gibbs weight carried by the subspace.
    double gibbs_mass = 0.0;
};

/// Work moments of the ideal dynamics projected onto s (tag "sqt").
SQTEstimate sqt_estimate(const lattice::Graph &g, const Subspace &s,
                         const protocol::DriveParams &p, const ExpmOptions &options = {});

/// Keep the smallest Gibbs-weight-ordered prefix holding mass >= 1 - delta
/// of the subspace total; ties resolved by insertion order.
Subspace prune(const Subspace &s, double beta, double delta);

/// All double-bit-flip neighbors of the contracted set, then the set itself.
Subspace extend(const Subspace &contracted, const lattice::Graph &g);

struct ExtSqtOptions {
    double delta = 1e-3;
    std::size_t max_subspace = 32000;
    ExpmOptions expm;
};

/// build_subspace -> prune -> extend -> sqt_estimate (tag "ext_sqt").
SQTEstimate ext_sqt_estimate(const lattice::Graph &g, std::span<const sim::TPMSample> samples,
                             const protocol::DriveParams &p, const ExtSqtOptions &options = {});

/// Sum of full-space Gibbs probabilities of the subspace states.
double gibbs_mass_of(const Subspace &s, double beta);

} // namespace qwork::sqt
