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

#include "qwork/oracle.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qwork::oracle {

namespace {

using cd = std::complex<double>;

double basis_energy(std::size_t index, int n) {
    return 2.0 * static_cast<double>(std::popcount(index)) - n;
}

void check_size(const lattice::Graph &g, int cap, const char *who) {
    if (g.n_vertices > cap) {
        std::ostringstream msg;
        msg << who << ": " << g.n_vertices << " qubits exceeds the cap of " << cap;
        throw std::invalid_argument(msg.str());
    }
}

// One parity sector: the global basis indices it contains, the diagonal
// energies, and the eigendecomposition of the projected coupling operator.
struct Sector {
    std::vector<std::size_t> states;     // global index per sector position
    Eigen::VectorXd energies;            // diagonal of H_0 in the sector
    Eigen::VectorXd coupling_eigenvalues;
    Eigen::MatrixXd coupling_vectors;    // V = Q diag(lambda) Q^T
};

std::vector<Sector> build_sectors(const lattice::Graph &g) {
    const int n = g.n_vertices;
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Sector> sectors(2);
    std::vector<int> position(dim);
    for (std::size_t i = 0; i < dim; i++) {
        auto &sec = sectors[std::popcount(i) & 1];
        position[i] = static_cast<int>(sec.states.size());
        sec.states.push_back(i);
    }
    const double inv_edges = 1.0 / static_cast<double>(g.edges.size());
    for (auto &sec : sectors) {
        const int m = static_cast<int>(sec.states.size());
        sec.energies.resize(m);
        for (int i = 0; i < m; i++) {
            sec.energies[i] = basis_energy(sec.states[i], n);
        }
        Eigen::MatrixXd v = Eigen::MatrixXd::Zero(m, m);
        for (int j = 0; j < m; j++) {
            const std::size_t col = sec.states[j];
            for (auto [p, r] : g.edges) {
                const std::size_t row = col ^ ((std::size_t{1} << p) | (std::size_t{1} << r));
                v(position[row], j) += inv_edges;
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(v);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("oracle: eigendecomposition failed");
        }
        sec.coupling_eigenvalues = solver.eigenvalues();
        sec.coupling_vectors = solver.eigenvectors();
    }
    return sectors;
}

// Accumulate the full product, step 0 first:
//   U <- exp(-i dt/2 D) exp(-i dt w_l V) exp(-i dt/2 D) U
Eigen::MatrixXcd evolve_sector(const Sector &sec, double tau, double gamma, int n_steps) {
    const int m = static_cast<int>(sec.states.size());
    const double dt = tau / n_steps;
    Eigen::VectorXcd half_phase(m);
    for (int i = 0; i < m; i++) {
        half_phase[i] = std::exp(cd{0.0, -0.5 * dt * sec.energies[i]});
    }
    const Eigen::MatrixXcd q = sec.coupling_vectors.cast<cd>();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(m, m);
    Eigen::MatrixXcd work(m, m);
    for (int l = 0; l < n_steps; l++) {
        const double t_mid = (l + 0.5) * dt;
        const double w = gamma * std::sin(std::numbers::pi * t_mid / tau);
        u.array().colwise() *= half_phase.array();
        work.noalias() = q.adjoint() * u;
        for (int i = 0; i < m; i++) {
            work.row(i) *= std::exp(cd{0.0, -dt * w * sec.coupling_eigenvalues[i]});
        }
        u.noalias() = q * work;
        u.array().colwise() *= half_phase.array();
    }
    return u;
}

Eigen::MatrixXcd assemble_full(const lattice::Graph &g, const std::vector<Sector> &sectors,
                               const std::vector<Eigen::MatrixXcd> &blocks) {
    const std::size_t dim = std::size_t{1} << g.n_vertices;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t s = 0; s < sectors.size(); s++) {
        const auto &states = sectors[s].states;
        for (std::size_t j = 0; j < states.size(); j++) {
            for (std::size_t i = 0; i < states.size(); i++) {
                u(states[i], states[j]) = blocks[s](i, j);
            }
        }
    }
    return u;
}

Eigen::MatrixXcd sectored_unitary(const lattice::Graph &g, double tau, double gamma,
                                  int n_steps) {
    const auto sectors = build_sectors(g);
    std::vector<Eigen::MatrixXcd> blocks;
    blocks.reserve(sectors.size());
    for (const auto &sec : sectors) {
        blocks.push_back(evolve_sector(sec, tau, gamma, n_steps));
    }
    return assemble_full(g, sectors, blocks);
}

std::vector<double> gibbs_weights(int n, double beta) {
    // p_th(x) = prod_q q(x_q); normalized product form, stable at any beta.
    const std::size_t dim = std::size_t{1} << n;
    const double log_q0 = -std::log1p(std::exp(-2.0 * beta));
    const double log_q1 = -2.0 * beta + log_q0;
    std::vector<double> w(dim);
    for (std::size_t x = 0; x < dim; x++) {
        const int ones = std::popcount(x);
        w[x] = std::exp(ones * log_q1 + (n - ones) * log_q0);
    }
    return w;
}

} // namespace

DenseOperator dense_hamiltonian(const lattice::Graph &g, double lambda) {
    g.validate();
    check_size(g, kMaxDenseQubits, "dense_hamiltonian");
    const int n = g.n_vertices;
    const std::size_t dim = std::size_t{1} << n;
    DenseOperator h = DenseOperator::Zero(dim, dim);
    for (std::size_t x = 0; x < dim; x++) {
        h(x, x) = basis_energy(x, n);
    }
    if (lambda != 0.0) {
        const double coupling = lambda / static_cast<double>(g.edges.size());
        for (std::size_t x = 0; x < dim; x++) {
            for (auto [p, r] : g.edges) {
                const std::size_t y = x ^ ((std::size_t{1} << p) | (std::size_t{1} << r));
                h(y, x) += coupling;
            }
        }
    }
    return h;
}

DenseOperator dense_expm(const Eigen::MatrixXcd &h, double theta) {
    if (h.rows() != h.cols() || h.rows() > 2048) {
        throw std::invalid_argument("dense_expm: need a square matrix of dim <= 2048");
    }
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
        throw std::invalid_argument("dense_expm: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("dense_expm: eigendecomposition failed");
    }
    const auto &q = solver.eigenvectors();
    Eigen::VectorXcd phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); i++) {
        phases[i] = std::exp(cd{0.0, -theta * solver.eigenvalues()[i]});
    }
    return q * phases.asDiagonal() * q.adjoint();
}

DenseOperator exact_trotter_unitary(const lattice::Graph &g, const protocol::DriveParams &p) {
    g.validate();
    p.validate();
    check_size(g, kMaxDenseQubits, "exact_trotter_unitary");
    return sectored_unitary(g, p.tau, p.gamma, p.n_trotter);
}

DenseOperator continuum_evolution(const lattice::Graph &g, const protocol::DriveParams &p,
                                  int refinement) {
    g.validate();
    p.validate();
    check_size(g, kMaxDenseQubits, "continuum_evolution");
    if (refinement < 1) {
        throw std::invalid_argument("continuum_evolution: refinement must be >= 1");
    }
    const auto u = sectored_unitary(g, p.tau, p.gamma, refinement);
    const auto u2 = sectored_unitary(g, p.tau, p.gamma, 2 * refinement);
    const double delta = (u - u2).norm();
    if (delta >= 1e-9) {
        std::ostringstream msg;
        msg << "continuum_evolution: not converged at refinement " << refinement
            << " (doubling moved the unitary by " << delta << ")";
        throw std::runtime_error(msg.str());
    }
    return u;
}

double TPMDistribution::normalization() const {
    double total = 0.0;
    for (double p : table) {
        total += p;
    }
    return total;
}

std::pair<double, double> TPMDistribution::moments() const {
    const std::size_t dim = std::size_t{1} << n_qubits;
    double mean = 0.0, second = 0.0;
    for (std::size_t y = 0; y < dim; y++) {
        for (std::size_t x = 0; x < dim; x++) {
            const double p = table[(y << n_qubits) | x];
            if (p == 0.0) {
                continue;
            }
            const double w = basis_energy(y, n_qubits) - basis_energy(x, n_qubits);
            mean += p * w;
            second += p * w * w;
        }
    }
    return {mean, second - mean * mean};
}

TPMDistribution exact_tpm_distribution(const lattice::Graph &g, const protocol::DriveParams &p,
                                       bool use_continuum) {
    g.validate();
    p.validate();
    check_size(g, kMaxTableQubits, "exact_tpm_distribution");
    const auto u = use_continuum ? continuum_evolution(g, p)
                                 : sectored_unitary(g, p.tau, p.gamma, p.n_trotter);
    const int n = g.n_vertices;
    const std::size_t dim = std::size_t{1} << n;
    const auto weights = gibbs_weights(n, p.beta);
    TPMDistribution dist;
    dist.n_qubits = n;
    dist.table.assign(dim * dim, 0.0);
    for (std::size_t x = 0; x < dim; x++) {
        for (std::size_t y = 0; y < dim; y++) {
            dist.table[(y << n) | x] = std::norm(u(y, x)) * weights[x];
        }
    }
    return dist;
}

ConditionalMomentTable conditional_moment_table(const lattice::Graph &g, double tau, double gamma,
                                                int n_trotter) {
    g.validate();
    check_size(g, kMaxDenseQubits, "conditional_moment_table");
    protocol::DriveParams probe{1.0, tau, gamma, n_trotter};
    probe.validate();
    const int n = g.n_vertices;
    const std::size_t dim = std::size_t{1} << n;
    ConditionalMomentTable out;
    out.n_qubits = n;
    out.h1.assign(dim, 0.0);
    out.h2.assign(dim, 0.0);
    const auto sectors = build_sectors(g);
    for (const auto &sec : sectors) {
        const auto u = evolve_sector(sec, tau, gamma, n_trotter);
        const int m = static_cast<int>(sec.states.size());
        for (int j = 0; j < m; j++) {
            double h1 = 0.0, h2 = 0.0;
            for (int i = 0; i < m; i++) {
                const double pr = std::norm(u(i, j));
                h1 += pr * sec.energies[i];
                h2 += pr * sec.energies[i] * sec.energies[i];
            }
            out.h1[sec.states[j]] = h1;
            out.h2[sec.states[j]] = h2;
        }
    }
    return out;
}

std::pair<double, double> moments_from_table(const ConditionalMomentTable &table, double beta) {
    const int n = table.n_qubits;
    const auto weights = gibbs_weights(n, beta);
    double mean = 0.0, second = 0.0;
    for (std::size_t x = 0; x < weights.size(); x++) {
        const double e_x = basis_energy(x, n);
        mean += weights[x] * (table.h1[x] - e_x);
        second += weights[x] * (table.h2[x] - 2.0 * e_x * table.h1[x] + e_x * e_x);
    }
    return {mean, second - mean * mean};
}

std::pair<double, double> exact_moments(const lattice::Graph &g, const protocol::DriveParams &p) {
    const auto table = conditional_moment_table(g, p.tau, p.gamma, p.n_trotter);
    return moments_from_table(table, p.beta);
}

} // namespace qwork::oracle
