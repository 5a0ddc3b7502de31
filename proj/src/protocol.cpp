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

#include "qwork/protocol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qwork::protocol {

void DriveParams::validate() const {
    if (!(tau > 0.0)) {
        throw std::invalid_argument("DriveParams: tau must be positive");
    }
    if (n_trotter < 1) {
        throw std::invalid_argument("DriveParams: n_trotter must be >= 1");
    }
    if (!(beta >= 0.0)) {
        throw std::invalid_argument("DriveParams: beta must be >= 0");
    }
    if (!std::isfinite(gamma) || !std::isfinite(beta) || !std::isfinite(tau)) {
        throw std::invalid_argument("DriveParams: parameters must be finite");
    }
}

std::vector<double> trotter_weights(const DriveParams &p) {
    p.validate();
    std::vector<double> w(p.n_trotter);
    for (int l = 0; l < p.n_trotter; l++) {
        w[l] = p.gamma * std::sin(std::numbers::pi * p.t_mid(l) / p.tau);
    }
    return w;
}

double prep_angle(double beta) {
    if (!(beta >= 0.0)) {
        throw std::invalid_argument("prep_angle: beta must be >= 0");
    }
    // cos^2(theta/2) = e^beta / (e^beta + e^-beta) = 1 / (1 + e^-2 beta)
    const double q0 = 1.0 / (1.0 + std::exp(-2.0 * beta));
    return 2.0 * std::acos(std::sqrt(q0));
}

std::span<const Instruction> GateProgram::preparation() const {
    return {ops.data(), body_begin > 0 ? body_begin - 1 : 0};
}

std::span<const Instruction> GateProgram::body() const {
    return {ops.data() + body_begin, body_end - body_begin};
}

GateProgram build_program(const lattice::Graph &g, const lattice::EdgeColoring &coloring,
                          const DriveParams &p) {
    g.validate();
    p.validate();
    if (coloring.color_of_edge.size() != g.edges.size()) {
        throw std::invalid_argument("build_program: coloring does not match graph");
    }
    for (std::size_t e = 0; e < g.edges.size(); e++) {
        const int c = coloring.color_of_edge[e];
        if (c < 0 || c >= coloring.n_colors) {
            throw std::invalid_argument("build_program: color index out of range");
        }
        auto [u, v] = g.edges[e];
        for (std::size_t f = 0; f < e; f++) {
            if (coloring.color_of_edge[f] == c) {
                auto [a, b] = g.edges[f];
                if (a == u || a == v || b == u || b == v) {
                    throw std::invalid_argument("build_program: coloring is not proper");
                }
            }
        }
    }

    const double dt = p.dt();
    const auto weights = trotter_weights(p);
    const double theta = prep_angle(p.beta);
    const double edge_count = static_cast<double>(g.edges.size());

    GateProgram prog;
    prog.n_qubits = g.n_vertices;
    for (int q = 0; q < g.n_vertices; q++) {
        prog.ops.push_back({Op::kRy, theta, q, -1, 0});
    }
    prog.ops.push_back({Op::kMeasureAll, 0.0, -1, -1, 'x'});
    prog.body_begin = prog.ops.size();

    auto rz_layer = [&](double angle) {
        for (int q = 0; q < g.n_vertices; q++) {
            prog.ops.push_back({Op::kRz, angle, q, -1, 0});
        }
    };
    // Boundary half-steps stay single; interior pairs merge into one layer.
    rz_layer(-dt);
    for (int l = 0; l < p.n_trotter; l++) {
        const double phi = 2.0 * dt * weights[l] / edge_count;
        for (int color = 0; color < coloring.n_colors; color++) {
            for (std::size_t e = 0; e < g.edges.size(); e++) {
                if (coloring.color_of_edge[e] == color) {
                    auto [u, v] = g.edges[e];
                    prog.ops.push_back({Op::kRxx, phi, u, v, 0});
                }
            }
        }
        rz_layer(l + 1 < p.n_trotter ? -2.0 * dt : -dt);
    }
    prog.body_end = prog.ops.size();
    prog.ops.push_back({Op::kMeasureAll, 0.0, -1, -1, 'y'});
    return prog;
}

namespace {

const char *op_name(Op op) {
    switch (op) {
    case Op::kRy:
        return "ry";
    case Op::kRz:
        return "rz";
    case Op::kRxx:
        return "rxx";
    case Op::kMeasureAll:
        return "measure_all";
    }
    return "?";
}

} // namespace

nlohmann::json GateProgram::to_json() const {
    nlohmann::json j;
    j["n_qubits"] = n_qubits;
    auto list = nlohmann::json::array();
    for (const auto &ins : ops) {
        nlohmann::json rec;
        rec["op"] = op_name(ins.op);
        if (ins.op == Op::kMeasureAll) {
            rec["tag"] = std::string(1, ins.tag);
        } else if (ins.op == Op::kRxx) {
            rec["qubits"] = {ins.q0, ins.q1};
            rec["angle"] = ins.angle;
        } else {
            rec["qubits"] = {ins.q0};
            rec["angle"] = ins.angle;
        }
        list.push_back(std::move(rec));
    }
    j["ops"] = std::move(list);
    return j;
}

GateProgram GateProgram::from_json(const nlohmann::json &j) {
    GateProgram prog;
    prog.n_qubits = j.at("n_qubits").get<int>();
    bool seen_x = false;
    for (const auto &rec : j.at("ops")) {
        const std::string name = rec.at("op").get<std::string>();
        Instruction ins{};
        if (name == "measure_all") {
            ins.op = Op::kMeasureAll;
            ins.tag = rec.at("tag").get<std::string>().at(0);
            if (ins.tag == 'x') {
                seen_x = true;
                prog.ops.push_back(ins);
                prog.body_begin = prog.ops.size();
                continue;
            }
            if (ins.tag == 'y') {
                prog.body_end = prog.ops.size();
            }
        } else {
            ins.angle = rec.at("angle").get<double>();
            const auto &qs = rec.at("qubits");
            ins.q0 = qs.at(0).get<int>();
            if (name == "ry") {
                ins.op = Op::kRy;
            } else if (name == "rz") {
                ins.op = Op::kRz;
            } else if (name == "rxx") {
                ins.op = Op::kRxx;
                ins.q1 = qs.at(1).get<int>();
            } else {
                throw std::invalid_argument("GateProgram: unknown op " + name);
            }
        }
        prog.ops.push_back(ins);
    }
    if (!seen_x || prog.body_end == 0) {
        throw std::invalid_argument("GateProgram: missing measurement markers");
    }
    return prog;
}

} // namespace qwork::protocol
