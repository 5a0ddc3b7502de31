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
 * Spin-lattice graphs, edge colorings, and circuit-cost accounting.
 *
 * The heavy-hex family is generated from one fixed 130-qubit lattice
 * (seven qubit rows with bridge qubits between them) whose aggregate
 * figures match the largest device layout used in the experiments:
 * 130 vertices, 144 edges, diameter 29, maximum degree 3. Smaller
 * layouts are breadth-first prefixes of that lattice, so every layout
 * is a connected induced subgraph and the 15 published layouts form a
 * nested chain.
 */

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace qwork::lattice {

struct Graph {
    int n_vertices = 0;
    /// Unordered pairs stored with the lower vertex index first.
    std::vector<std::pair<int, int>> edges;
    /// Optional label, e.g. "heavy-hex-15"; empty when unnamed.
    std::string layout_id;

    std::size_t n_edges() const { return edges.size(); }

    /// Throws std::invalid_argument unless the graph is simple, in range,
    /// and connected.
    void validate() const;

    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;
    int max_degree() const;
    bool is_connected() const;
    /// Two-colorability check (odd-cycle detection by BFS).
    bool is_bipartite() const;

    nlohmann::json to_json() const;
    static Graph from_json(const nlohmann::json &j);
    static Graph load(const std::string &path);
    void save(const std::string &path) const;
};

struct EdgeColoring {
    /// color_of_edge[i] is the color of Graph::edges[i], in [0, n_colors).
    std::vector<int> color_of_edge;
    int n_colors = 0;
};

struct CostReport {
    long long n_ry = 0;
    long long n_mid_meas = 0;
    long long n_rz = 0;
    long long n_rxx = 0;
    long long n_final_meas = 0;
    long long depth_ry = 1;
    long long depth_mid_meas = 1;
    long long depth_rz = 0;
    long long depth_rxx = 0;
    long long depth_final_meas = 1;
    long long total_depth = 0;
    long long total_ops = 0;
};

inline constexpr int kNumLayouts = 15;
inline constexpr int kMaxLayoutSize = 130;

/// Nested device layouts 1..15 (4 to 130 qubits).
Graph heavy_hex_layout(int layout_index);

/// Connected heavy-hex fragment with `size_hint` qubits (2..130).
Graph heavy_hex_fragment(int size_hint);

/// Number of qubits of layout 1..15.
int heavy_hex_layout_size(int layout_index);

/**
 * Proper edge coloring.
 *
 * Bipartite graphs are colored with exactly max-degree colors by the
 * alternating-path (Konig) construction; general graphs fall back to
 * Vizing fans with at most max-degree + 1 colors. Heavy-hex layouts are
 * bipartite with maximum degree 3, so they always color with c = 3.
 */
EdgeColoring color_edges(const Graph &g);

/// Gate and layer counts of the drive circuit with n_trotter steps.
CostReport circuit_cost(const Graph &g, int n_trotter);

/// Exact diameter by all-pairs BFS; rejects disconnected graphs.
int graph_diameter(const Graph &g);

} // namespace qwork::lattice
