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

#include "qwork/sim.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "qwork/rng.hpp"

namespace qwork::sim {

namespace {

using cd = std::complex<double>;

constexpr cd kMinusI{0.0, -1.0};

} // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 30) {
        throw std::invalid_argument("StateVector: unsupported qubit count");
    }
    amps_.assign(std::size_t{1} << n_qubits, cd{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::basis_state(int n_qubits, const Bitstring &x) {
    if (x.size() != n_qubits) {
        throw std::invalid_argument("StateVector: bitstring length mismatch");
    }
    StateVector s(n_qubits);
    s.amps_[0] = 0.0;
    s.amps_[x.to_index()] = 1.0;
    return s;
}

void StateVector::apply_ry(double theta, int q) {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t base = 0; base < amps_.size(); base++) {
        if (base & bit) {
            continue;
        }
        const cd a0 = amps_[base], a1 = amps_[base | bit];
        amps_[base] = c * a0 - s * a1;
        amps_[base | bit] = s * a0 + c * a1;
    }
}

void StateVector::apply_rz(double theta, int q) {
    const cd phase0 = std::exp(cd{0.0, -0.5 * theta});
    const cd phase1 = std::exp(cd{0.0, +0.5 * theta});
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); i++) {
        amps_[i] *= (i & bit) ? phase1 : phase0;
    }
}

void StateVector::apply_rxx(double theta, int p, int r) {
    const double c = std::cos(0.5 * theta);
    const cd is = kMinusI * std::sin(0.5 * theta);
    const std::size_t mask = (std::size_t{1} << p) | (std::size_t{1} << r);
    for (std::size_t i = 0; i < amps_.size(); i++) {
        const std::size_t j = i ^ mask;
        if (i < j) {
            const cd a = amps_[i], b = amps_[j];
            amps_[i] = c * a + is * b;
            amps_[j] = is * a + c * b;
        }
    }
}

void StateVector::apply_pauli(char which, int q) {
    const std::size_t bit = std::size_t{1} << q;
    switch (which) {
    case 'X':
        for (std::size_t i = 0; i < amps_.size(); i++) {
            if (!(i & bit)) {
                std::swap(amps_[i], amps_[i | bit]);
            }
        }
        break;
    case 'Y':
        for (std::size_t i = 0; i < amps_.size(); i++) {
            if (!(i & bit)) {
                const cd a0 = amps_[i];
                amps_[i] = cd{0.0, -1.0} * amps_[i | bit];
                amps_[i | bit] = cd{0.0, 1.0} * a0;
            }
        }
        break;
    case 'Z':
        for (std::size_t i = 0; i < amps_.size(); i++) {
            if (i & bit) {
                amps_[i] = -amps_[i];
            }
        }
        break;
    default:
        throw std::invalid_argument("apply_pauli: expected X, Y, or Z");
    }
}

double StateVector::norm() const {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void NoiseSpec::validate() const {
    if (p2 < 0.0 || p2 > 1.0 || p_read < 0.0 || p_read > 1.0) {
        throw std::invalid_argument("NoiseSpec: probabilities must be in [0, 1]");
    }
}

Bitstring sample_initial(double beta, int n, std::mt19937_64 &rng) {
    if (!(beta >= 0.0)) {
        throw std::invalid_argument("sample_initial: beta must be >= 0");
    }
    // P(bit = 1) = e^-beta / (e^beta + e^-beta) = 1 / (1 + e^(2 beta))
    const double p1 = 1.0 / (1.0 + std::exp(2.0 * beta));
    Bitstring x(n);
    for (int q = 0; q < n; q++) {
        x.set(q, bernoulli(rng, p1));
    }
    return x;
}

void apply_instructions(StateVector &state, std::span<const protocol::Instruction> ops,
                        const NoiseSpec *noise, std::mt19937_64 *rng) {
    const bool depolarize = noise != nullptr && noise->p2 > 0.0;
    if (depolarize && rng == nullptr) {
        throw std::invalid_argument("apply_instructions: noise requires an rng");
    }
    static constexpr char kPauli[4] = {'I', 'X', 'Y', 'Z'};
    for (const auto &ins : ops) {
        switch (ins.op) {
        case protocol::Op::kRy:
            state.apply_ry(ins.angle, ins.q0);
            break;
        case protocol::Op::kRz:
            state.apply_rz(ins.angle, ins.q0);
            break;
        case protocol::Op::kRxx:
            state.apply_rxx(ins.angle, ins.q0, ins.q1);
            if (depolarize && bernoulli(*rng, noise->p2)) {
                // One of the 15 non-identity two-qubit Paulis, uniformly.
                const auto pick = 1 + uniform_below(*rng, 15);
                const char first = kPauli[pick >> 2];
                const char second = kPauli[pick & 3];
                if (first != 'I') {
                    state.apply_pauli(first, ins.q0);
                }
                if (second != 'I') {
                    state.apply_pauli(second, ins.q1);
                }
            }
            break;
        case protocol::Op::kMeasureAll:
            break; // collapse is handled by the trajectory driver
        }
    }
}

namespace {

Bitstring index_to_bitstring(std::size_t index, int n) {
    return Bitstring::from_index(static_cast<std::uint64_t>(index), n);
}

std::size_t draw_index(std::span<const double> probabilities, std::mt19937_64 &rng) {
    const double r = uniform01(rng);
    double acc = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); i++) {
        acc += probabilities[i];
        if (r < acc) {
            return i;
        }
    }
    return probabilities.size() - 1; // rounding tail
}

} // namespace

Bitstring sample_final(const StateVector &state, std::mt19937_64 &rng, double p_read) {
    const auto amps = state.amplitudes();
    const double r = uniform01(rng);
    double acc = 0.0;
    std::size_t drawn = amps.size() - 1;
    for (std::size_t i = 0; i < amps.size(); i++) {
        acc += std::norm(amps[i]);
        if (r < acc) {
            drawn = i;
            break;
        }
    }
    Bitstring y = index_to_bitstring(drawn, state.n_qubits());
    if (p_read > 0.0) {
        for (int q = 0; q < state.n_qubits(); q++) {
            if (bernoulli(rng, p_read)) {
                y.set(q, !y.bit(q));
            }
        }
    }
    return y;
}

std::vector<TPMSample> run_tpm(const lattice::Graph &g, const protocol::DriveParams &p,
                               std::size_t shots, const NoiseSpec &noise, std::uint64_t seed,
                               const RunOptions &options) {
    if (shots < 1) {
        throw std::invalid_argument("run_tpm: shots must be >= 1");
    }
    noise.validate();
    if (g.n_vertices > options.max_qubits) {
        throw std::invalid_argument("run_tpm: graph exceeds the statevector qubit limit");
    }
    const auto coloring = lattice::color_edges(g);
    const auto program = protocol::build_program(g, coloring, p);
    const auto body = program.body();
    const int n = g.n_vertices;
    const std::size_t dim = std::size_t{1} << n;

    // Evolution is deterministic without gate noise, so distinct shots that
    // draw the same x can share one probability vector.
    const bool cacheable = noise.p2 == 0.0;
    const std::size_t max_cached = cacheable ? options.cache_bytes / (dim * sizeof(double)) : 0;
    std::unordered_map<Bitstring, std::vector<double>, BitstringHash> cache;

    std::vector<TPMSample> samples;
    samples.reserve(shots);
    for (std::size_t k = 0; k < shots; k++) {
        auto rng = make_stream(seed, k);
        const Bitstring x = sample_initial(p.beta, n, rng);
        const std::vector<double> *probs = nullptr;
        std::vector<double> local;
        if (cacheable) {
            auto it = cache.find(x);
            if (it != cache.end()) {
                probs = &it->second;
            }
        }
        if (probs == nullptr) {
            StateVector state = StateVector::basis_state(n, x);
            apply_instructions(state, body, &noise, &rng);
            local.resize(dim);
            const auto amps = state.amplitudes();
            for (std::size_t i = 0; i < dim; i++) {
                local[i] = std::norm(amps[i]);
            }
            if (cacheable && cache.size() < max_cached) {
                probs = &cache.emplace(x, std::move(local)).first->second;
            } else {
                probs = &local;
            }
        }
        Bitstring y = index_to_bitstring(draw_index(*probs, rng), n);
        if (noise.p_read > 0.0) {
            for (int q = 0; q < n; q++) {
                if (bernoulli(rng, noise.p_read)) {
                    y.set(q, !y.bit(q));
                }
            }
        }
        samples.push_back({x, y});
    }
    return samples;
}

ParityFilterResult parity_filter(std::span<const TPMSample> samples) {
    ParityFilterResult out;
    out.kept.reserve(samples.size());
    for (const auto &s : samples) {
        if (s.x.parity() == s.y.parity()) {
            out.kept.push_back(s);
        }
    }
    out.efficiency = samples.empty()
                         ? 0.0
                         : static_cast<double>(out.kept.size()) / static_cast<double>(samples.size());
    return out;
}

std::pair<double, double> exact_conditional_moments(const lattice::Graph &g,
                                                    const protocol::DriveParams &p,
                                                    const Bitstring &x, const RunOptions &options) {
    if (g.n_vertices > options.max_qubits) {
        throw std::invalid_argument("exact_conditional_moments: qubit limit exceeded");
    }
    const auto coloring = lattice::color_edges(g);
    const auto program = protocol::build_program(g, coloring, p);
    StateVector state = StateVector::basis_state(g.n_vertices, x);
    apply_instructions(state, program.body());
    const int n = g.n_vertices;
    const double e_x = 2.0 * x.popcount() - n;
    double h1 = 0.0, h2 = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++) {
        const double pr = std::norm(amps[i]);
        const double e_y = 2.0 * static_cast<double>(std::popcount(i)) - n;
        h1 += pr * e_y;
        h2 += pr * e_y * e_y;
    }
    return {h1 - e_x, h2 - 2.0 * e_x * h1 + e_x * e_x};
}

} // namespace qwork::sim
