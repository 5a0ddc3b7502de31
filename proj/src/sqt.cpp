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

#include "qwork/sqt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qwork/parallel.hpp"

namespace qwork::sqt {

namespace {

using cd = std::complex<double>;

std::vector<Bitstring> edge_masks(const lattice::Graph &g, int n_bits) {
    std::vector<Bitstring> masks;
    masks.reserve(g.edges.size());
    for (auto [p, r] : g.edges) {
        Bitstring m(n_bits);
        m.set(p, true);
        m.set(r, true);
        masks.push_back(m);
    }
    return masks;
}

double vec_norm(std::span<const cd> v) {
    double s = 0.0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

// Truncated Taylor series with unit substeps; valid because the Gershgorin
// bound of the projected coupling is 1 (at most |E| entries of 1/|E| per
// row, zero diagonal).
void expm_taylor(const ProjectedOperators &op, double theta, std::span<const cd> v,
                 std::span<cd> y, double tol) {
    const std::size_t m = op.dim();
    const int substeps = std::max(1, static_cast<int>(std::ceil(std::abs(theta))));
    const cd step_factor = cd{0.0, -theta / substeps};
    std::vector<cd> term(m), next(m);
    std::copy(v.begin(), v.end(), y.begin());
    for (int s = 0; s < substeps; s++) {
        std::copy(y.begin(), y.end(), term.begin());
        const double target = tol / (2.72 * substeps);
        for (int j = 1; j <= 64; j++) {
            op.matvec(term, next);
            const cd scale = step_factor / static_cast<double>(j);
            for (std::size_t i = 0; i < m; i++) {
                term[i] = scale * next[i];
                y[i] += term[i];
            }
            if (vec_norm(term) <= target) {
                break;
            }
        }
    }
}

struct LanczosWorkspace {
    std::vector<std::vector<cd>> basis;
    std::vector<double> alpha, beta;
    std::vector<cd> w;
};

// Adaptive Lanczos action for the Hermitian projected coupling. The real
// tridiagonal coefficients survive complex start vectors because the
// operator is real symmetric.
bool expm_lanczos(const ProjectedOperators &op, double theta, std::span<const cd> v,
                  std::span<cd> y, const ExpmOptions &options, LanczosWorkspace &ws) {
    const std::size_t m = op.dim();
    const double v_norm = vec_norm(v);
    if (v_norm == 0.0) {
        std::fill(y.begin(), y.end(), cd{0.0, 0.0});
        return true;
    }
    const int k_max = static_cast<int>(std::min<std::size_t>(options.max_krylov, m));
    ws.basis.assign(1, std::vector<cd>(v.begin(), v.end()));
    for (auto &a : ws.basis[0]) {
        a /= v_norm;
    }
    ws.alpha.clear();
    ws.beta.clear();
    ws.w.assign(m, cd{0.0, 0.0});

    // Assemble y from the k-dimensional Krylov factorization if the residual
    // estimate (Saad's beta_k |[exp(-i theta T_k)]_{k,1}|) meets the
    // tolerance; residual < 0 marks an exact (breakdown) subspace.
    auto finish = [&](int k, double residual) {
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
        for (int i = 0; i < k; i++) {
            t(i, i) = ws.alpha[i];
            if (i + 1 < k) {
                t(i, i + 1) = ws.beta[i];
                t(i + 1, i) = ws.beta[i];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
        Eigen::VectorXcd u = Eigen::VectorXcd::Zero(k);
        for (int a = 0; a < k; a++) {
            const cd coeff =
                solver.eigenvectors()(0, a) * std::exp(cd{0.0, -theta * solver.eigenvalues()[a]});
            for (int i = 0; i < k; i++) {
                u[i] += solver.eigenvectors()(i, a) * coeff;
            }
        }
        if (residual >= 0.0 && residual * std::abs(u[k - 1]) > options.tol) {
            return false;
        }
        std::fill(y.begin(), y.end(), cd{0.0, 0.0});
        for (int i = 0; i < k; i++) {
            const cd c = v_norm * u[i];
            const auto &q = ws.basis[i];
            for (std::size_t idx = 0; idx < m; idx++) {
                y[idx] += c * q[idx];
            }
        }
        return true;
    };

    for (int j = 0; j < k_max; j++) {
        op.matvec(ws.basis[j], ws.w);
        cd dot{0.0, 0.0};
        for (std::size_t i = 0; i < m; i++) {
            dot += std::conj(ws.basis[j][i]) * ws.w[i];
        }
        ws.alpha.push_back(dot.real());
        for (std::size_t i = 0; i < m; i++) {
            ws.w[i] -= ws.alpha[j] * ws.basis[j][i];
        }
        if (j > 0) {
            for (std::size_t i = 0; i < m; i++) {
                ws.w[i] -= ws.beta[j - 1] * ws.basis[j - 1][i];
            }
        }
        // Full reorthogonalization keeps the basis clean at tight tolerances.
        for (const auto &q : ws.basis) {
            cd overlap{0.0, 0.0};
            for (std::size_t i = 0; i < m; i++) {
                overlap += std::conj(q[i]) * ws.w[i];
            }
            for (std::size_t i = 0; i < m; i++) {
                ws.w[i] -= overlap * q[i];
            }
        }
        const double b = vec_norm(ws.w);
        ws.beta.push_back(b);
        if (b < 1e-14 || j + 1 == static_cast<int>(m)) {
            ws.beta.pop_back(); // exact subspace; no residual term
            finish(j + 1, -1.0);
            return true;
        }
        if (j >= 1 && finish(j + 1, b)) {
            return true;
        }
        std::vector<cd> next(m);
        for (std::size_t i = 0; i < m; i++) {
            next[i] = ws.w[i] / b;
        }
        ws.basis.push_back(std::move(next));
    }
    return false;
}

void expm_apply(const ProjectedOperators &op, double theta, std::span<const cd> v, std::span<cd> y,
                const ExpmOptions &options, LanczosWorkspace &ws, int depth = 0) {
    if (theta == 0.0 || op.dim() == 0) {
        std::copy(v.begin(), v.end(), y.begin());
        return;
    }
    if (op.dim() <= 16) {
        expm_taylor(op, theta, v, y, options.tol);
        return;
    }
    if (expm_lanczos(op, theta, v, y, options, ws)) {
        return;
    }
    if (depth >= 24) {
        throw std::runtime_error("expm_multiply: Krylov action failed to converge");
    }
    // Halve the step: exp(-i theta A) = exp(-i theta/2 A)^2.
    std::vector<cd> mid(op.dim());
    expm_apply(op, 0.5 * theta, v, mid, options, ws, depth + 1);
    expm_apply(op, 0.5 * theta, mid, y, options, ws, depth + 1);
}

std::vector<double> subspace_gibbs_weights(const ProjectedOperators &op, double beta) {
    const std::size_t m = op.dim();
    double e_min = op.e_diag.empty() ? 0.0 : *std::min_element(op.e_diag.begin(), op.e_diag.end());
    std::vector<double> w(m);
    double total = 0.0;
    for (std::size_t i = 0; i < m; i++) {
        w[i] = std::exp(-beta * (op.e_diag[i] - e_min));
        total += w[i];
    }
    for (auto &x : w) {
        x /= total;
    }
    return w;
}

// One column of T: evolve the n-th unit vector through all Trotter steps
// (step 0 first). Phases are the diagonal half-step factors.
void evolve_column(const ProjectedOperators &op, const protocol::DriveParams &p,
                   const std::vector<double> &weights, const std::vector<cd> &half_phase,
                   std::size_t column, const ExpmOptions &options, LanczosWorkspace &ws,
                   std::vector<cd> &v, std::vector<cd> &scratch) {
    const std::size_t m = op.dim();
    const double dt = p.dt();
    std::fill(v.begin(), v.end(), cd{0.0, 0.0});
    v[column] = 1.0;
    for (int l = 0; l < p.n_trotter; l++) {
        for (std::size_t i = 0; i < m; i++) {
            v[i] *= half_phase[i];
        }
        expm_apply(op, dt * weights[l], v, scratch, options, ws);
        std::swap(v, scratch);
        for (std::size_t i = 0; i < m; i++) {
            v[i] *= half_phase[i];
        }
    }
}

} // namespace

int Subspace::insert(const Bitstring &z) {
    auto [it, inserted] = index_of.try_emplace(z, static_cast<int>(basis.size()));
    if (inserted) {
        basis.push_back(z);
    }
    return it->second;
}

void ProjectedOperators::matvec(std::span<const cd> x, std::span<cd> y) const {
    const double value = 1.0 / static_cast<double>(n_edges);
    const std::size_t m = dim();
    for (std::size_t row = 0; row < m; row++) {
        cd acc{0.0, 0.0};
        for (std::int64_t k = row_ptr[row]; k < row_ptr[row + 1]; k++) {
            acc += x[static_cast<std::size_t>(col_idx[k])];
        }
        y[row] = value * acc;
    }
}

Subspace build_subspace(std::span<const sim::TPMSample> samples) {
    if (samples.empty()) {
        throw std::invalid_argument("build_subspace: no samples");
    }
    Subspace s;
    for (const auto &sample : samples) {
        s.insert(sample.x);
        s.insert(sample.y);
    }
    return s;
}

ProjectedOperators project_operators(const lattice::Graph &g, const Subspace &s) {
    if (s.size() == 0) {
        throw std::invalid_argument("project_operators: empty subspace");
    }
    const int n = g.n_vertices;
    for (const auto &z : s.basis) {
        if (z.size() != n) {
            throw std::invalid_argument("project_operators: bitstring length mismatch");
        }
    }
    ProjectedOperators op;
    op.n_edges = static_cast<int>(g.edges.size());
    op.e_diag.reserve(s.size());
    for (const auto &z : s.basis) {
        op.e_diag.push_back(static_cast<double>(workstats::energy_of(z)));
    }
    const auto masks = edge_masks(g, n);
    op.row_ptr.assign(s.size() + 1, 0);
    op.col_idx.clear();
    // Distinct edges flip distinct bit pairs, so each (row, col) pair occurs
    // at most once and every entry is exactly 1/|E|.
    for (std::size_t row = 0; row < s.size(); row++) {
        for (const auto &mask : masks) {
            const Bitstring z = s.basis[row] ^ mask;
            auto it = s.index_of.find(z);
            if (it != s.index_of.end()) {
                op.col_idx.push_back(it->second);
            }
        }
        op.row_ptr[row + 1] = static_cast<std::int64_t>(op.col_idx.size());
    }
    return op;
}

void expm_multiply(const ProjectedOperators &op, double theta, std::span<const cd> v,
                   std::span<cd> y, const ExpmOptions &options) {
    if (v.size() != op.dim() || y.size() != op.dim()) {
        throw std::invalid_argument("expm_multiply: dimension mismatch");
    }
    LanczosWorkspace ws;
    expm_apply(op, theta, v, y, options, ws);
}

Eigen::MatrixXcd evolve_subspace(const ProjectedOperators &op, const protocol::DriveParams &p,
                                 const ExpmOptions &options) {
    p.validate();
    const std::size_t m = op.dim();
    if (m < 1) {
        throw std::invalid_argument("evolve_subspace: empty subspace");
    }
    if (m > 8192) {
        throw std::length_error("evolve_subspace: matrix form capped at M = 8192; "
                                "use sqt_estimate for larger subspaces");
    }
    const auto weights = trotter_weights(p);
    const double dt = p.dt();
    std::vector<cd> half_phase(m);
    for (std::size_t i = 0; i < m; i++) {
        half_phase[i] = std::exp(cd{0.0, -0.5 * dt * op.e_diag[i]});
    }
    Eigen::MatrixXcd t(m, m);
    parallel_for(m, [&](std::size_t col) {
        LanczosWorkspace ws;
        std::vector<cd> v(m), scratch(m);
        evolve_column(op, p, weights, half_phase, col, options, ws, v, scratch);
        for (std::size_t i = 0; i < m; i++) {
            t(i, col) = v[i];
        }
    });
    return t;
}

double gibbs_mass_of(const Subspace &s, double beta) {
    if (s.size() == 0) {
        return 0.0;
    }
    const int n = s.basis.front().size();
    const double log_q0 = -std::log1p(std::exp(-2.0 * beta));
    const double log_q1 = -2.0 * beta + log_q0;
    double mass = 0.0;
    for (const auto &z : s.basis) {
        const int ones = z.popcount();
        mass += std::exp(ones * log_q1 + (n - ones) * log_q0);
    }
    return mass;
}

SQTEstimate sqt_estimate(const lattice::Graph &g, const Subspace &s,
                         const protocol::DriveParams &p, const ExpmOptions &options) {
    p.validate();
    if (s.size() == 0) {
        throw std::invalid_argument("sqt_estimate: empty subspace");
    }
    const auto op = project_operators(g, s);
    const std::size_t m = op.dim();
    const auto weights = trotter_weights(p);
    const auto gibbs = subspace_gibbs_weights(op, p.beta);
    const double dt = p.dt();
    std::vector<cd> half_phase(m);
    for (std::size_t i = 0; i < m; i++) {
        half_phase[i] = std::exp(cd{0.0, -0.5 * dt * op.e_diag[i]});
    }
    // Column sums are accumulated per column and reduced in index order, so
    // the result does not depend on the execution schedule.
    std::vector<double> col_mass(m, 0.0), col_first(m, 0.0), col_second(m, 0.0);
    parallel_for(m, [&](std::size_t col) {
        LanczosWorkspace ws;
        std::vector<cd> v(m), scratch(m);
        evolve_column(op, p, weights, half_phase, col, options, ws, v, scratch);
        double s0 = 0.0, s1 = 0.0, s2 = 0.0;
        const double e_col = op.e_diag[col];
        for (std::size_t i = 0; i < m; i++) {
            const double pr = std::norm(v[i]);
            const double de = op.e_diag[i] - e_col;
            s0 += pr;
            s1 += pr * de;
            s2 += pr * de * de;
        }
        col_mass[col] = gibbs[col] * s0;
        col_first[col] = gibbs[col] * s1;
        col_second[col] = gibbs[col] * s2;
    });
    double s0 = 0.0, s1 = 0.0, s2 = 0.0;
    for (std::size_t col = 0; col < m; col++) {
        s0 += col_mass[col];
        s1 += col_first[col];
        s2 += col_second[col];
    }
    const double mean = s1 / s0;
    SQTEstimate out;
    out.stats = {mean, s2 / s0 - mean * mean, 0, workstats::Estimator::kSqt};
    out.subspace_dim = m;
    out.gibbs_mass = gibbs_mass_of(s, p.beta);
    return out;
}

Subspace prune(const Subspace &s, double beta, double delta) {
    if (delta < 0.0 || delta >= 1.0) {
        throw std::invalid_argument("prune: delta must be in [0, 1)");
    }
    const std::size_t m = s.size();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<long long> energy(m);
    for (std::size_t i = 0; i < m; i++) {
        energy[i] = workstats::energy_of(s.basis[i]);
    }
    // Descending Gibbs weight = ascending energy; stable keeps insertion
    // order on ties.
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return energy[a] < energy[b]; });
    const long long e_min = energy[order.front()];
    std::vector<double> weight(m);
    double total = 0.0;
    for (std::size_t i = 0; i < m; i++) {
        weight[i] = std::exp(-beta * static_cast<double>(energy[order[i]] - e_min));
        total += weight[i];
    }
    const double target = (1.0 - delta) * total;
    Subspace out;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < m; i++) {
        out.insert(s.basis[order[i]]);
        cumulative += weight[i];
        if (cumulative >= target) {
            break;
        }
    }
    return out;
}

Subspace extend(const Subspace &contracted, const lattice::Graph &g) {
    Subspace out;
    if (contracted.size() == 0) {
        return out;
    }
    const auto masks = edge_masks(g, contracted.basis.front().size());
    for (const auto &x : contracted.basis) {
        for (const auto &mask : masks) {
            out.insert(x ^ mask);
        }
    }
    for (const auto &x : contracted.basis) {
        out.insert(x);
    }
    return out;
}

SQTEstimate ext_sqt_estimate(const lattice::Graph &g, std::span<const sim::TPMSample> samples,
                             const protocol::DriveParams &p, const ExtSqtOptions &options) {
    const Subspace sampled = build_subspace(samples);
    const Subspace contracted = prune(sampled, p.beta, options.delta);
    const Subspace extended = extend(contracted, g);
    if (extended.size() > options.max_subspace) {
        throw std::length_error("ext_sqt_estimate: extended subspace of dimension " +
                                std::to_string(extended.size()) + " exceeds the cap of " +
                                std::to_string(options.max_subspace));
    }
    SQTEstimate out = sqt_estimate(g, extended, p, options.expm);
    out.stats.tag = workstats::Estimator::kExtSqt;
    out.stats.n_samples = samples.size();
    return out;
}

} // namespace qwork::sqt
