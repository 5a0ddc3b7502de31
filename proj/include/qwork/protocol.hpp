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
 * Drive protocol and its compilation to an abstract gate program.
 *
 * The drive ramps the two-body coupling as lambda(t) = gamma sin(pi t/tau)
 * over 0 <= t <= tau and is discretized with n_trotter second-order steps.
 * Gate conventions: RZ(t) = exp(-i t Z/2), RXX(t) = exp(-i t XX/2),
 * RY(t) = exp(-i t Y/2).
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qwork/lattice.hpp"

namespace qwork::protocol {

struct DriveParams {
    double beta = 1.0;  ///< inverse temperature (hbar = k_B = 1)
    double tau = 1.0;   ///< protocol duration
    double gamma = 1.0; ///< drive strength
    int n_trotter = 10; ///< Trotter step count

    double dt() const { return tau / n_trotter; }
    /// Midpoint of step l.
    double t_mid(int l) const { return (l + 0.5) * dt(); }

    void validate() const;
};

/// Drive weights w_l = gamma sin(pi t_l / tau) at the step midpoints.
std::vector<double> trotter_weights(const DriveParams &p);

/// RY angle preparing the single-qubit thermal amplitude profile:
/// cos^2(theta/2) = exp(beta) / (exp(beta) + exp(-beta)), theta in [0, pi].
double prep_angle(double beta);

enum class Op : std::uint8_t { kRy, kRz, kRxx, kMeasureAll };

struct Instruction {
    Op op;
    double angle = 0.0; // rotations only
    int q0 = -1;        // target (rotations)
    int q1 = -1;        // second target (RXX)
    char tag = 0;       // 'x' or 'y' for kMeasureAll
};

struct GateProgram {
    int n_qubits = 0;
    std::vector<Instruction> ops;
    std::size_t body_begin = 0; ///< first instruction after MEASURE_ALL("x")
    std::size_t body_end = 0;   ///< index of MEASURE_ALL("y")

    /// Preparation layer (everything before the first measurement).
    std::span<const Instruction> preparation() const;
    /// The Trotterized drive between the two measurements.
    std::span<const Instruction> body() const;

    nlohmann::json to_json() const;
    static GateProgram from_json(const nlohmann::json &j);
};

/**
 * Compile the drive into a gate program.
 *
 * Emits one RY(prep_angle) layer, MEASURE_ALL("x"), then the Trotter body,
 * then MEASURE_ALL("y"). Adjacent diagonal half-steps are merged, so the
 * body holds n_trotter + 1 RZ layers: angle -dt at the two boundaries and
 * -2 dt inside. Each step contributes the coloring's RXX layers with angle
 * 2 dt w_l / |E|.
 */
GateProgram build_program(const lattice::Graph &g, const lattice::EdgeColoring &coloring,
                          const DriveParams &p);

} // namespace qwork::protocol
