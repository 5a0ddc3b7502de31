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
 * Statevector execution of gate programs and two-point-measurement
 * trajectory sampling.
 *
 * Trajectories follow the classical-initialization route: the initial
 * bitstring x is drawn from the product Gibbs distribution on the host,
 * the drive circuit is applied to |x>, and the final bitstring y is drawn
 * from the Born distribution of the evolved state. The RY preparation
 * layer emitted by the protocol module documents the single-circuit
 * variant and is bypassed here.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "qwork/bitstring.hpp"
#include "qwork/lattice.hpp"
#include "qwork/protocol.hpp"

namespace qwork::sim {

class StateVector {
  public:
    /// |0...0> on n qubits.
    explicit StateVector(int n_qubits);
    static StateVector basis_state(int n_qubits, const Bitstring &x);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }
    std::span<std::complex<double>> amplitudes() { return amps_; }

    void apply_ry(double theta, int q);
    void apply_rz(double theta, int q);
    void apply_rxx(double theta, int p, int r);
    /// Pauli injection for the noise unraveling; which in {'X','Y','Z'}.
    void apply_pauli(char which, int q);

    double norm() const;

  private:
    int n_qubits_;
    std::vector<std::complex<double>> amps_;
};

struct NoiseSpec {
    /// Two-qubit depolarizing probability applied after every RXX gate.
    double p2 = 0.0;
    /// Independent readout bit-flip probability on the final measurement.
    double p_read = 0.0;

    bool active() const { return p2 > 0.0 || p_read > 0.0; }
    void validate() const;
};

struct TPMSample {
    Bitstring x;
    Bitstring y;
};

/// Initial bitstring from the product Gibbs distribution of the diagonal
/// Hamiltonian: P(bit = 1) = exp(-beta) / (exp(beta) + exp(-beta)).
Bitstring sample_initial(double beta, int n, std::mt19937_64 &rng);

/**
 * Apply unitary instructions in order; MEASURE_ALL markers are skipped
 * (collapse is handled by the trajectory driver). With noise present, a
 * uniformly random non-identity two-qubit Pauli is injected after each RXX
 * with total probability p2 (trajectory unraveling of the depolarizing
 * channel).
 */
void apply_instructions(StateVector &state, std::span<const protocol::Instruction> ops,
                        const NoiseSpec *noise = nullptr, std::mt19937_64 *rng = nullptr);

/// Born-rule draw from the final state; readout flips applied when p_read > 0.
Bitstring sample_final(const StateVector &state, std::mt19937_64 &rng, double p_read = 0.0);

struct RunOptions {
    int max_qubits = 25;
    /// Memory budget for caching evolved probability vectors (noiseless runs
    /// reuse one evolution per distinct initial bitstring).
    std::size_t cache_bytes = 512ull << 20;
};

std::vector<TPMSample> run_tpm(const lattice::Graph &g, const protocol::DriveParams &p,
                               std::size_t shots, const NoiseSpec &noise, std::uint64_t seed,
                               const RunOptions &options = {});

struct ParityFilterResult {
    std::vector<TPMSample> kept;
    double efficiency = 0.0;
};

/// Keep samples whose initial and final bitstrings have equal parity.
ParityFilterResult parity_filter(std::span<const TPMSample> samples);

/// (E[W|x], E[W^2|x]) for the noiseless drive applied to |x>.
std::pair<double, double> exact_conditional_moments(const lattice::Graph &g,
                                                    const protocol::DriveParams &p,
                                                    const Bitstring &x,
                                                    const RunOptions &options = {});

} // namespace qwork::sim
