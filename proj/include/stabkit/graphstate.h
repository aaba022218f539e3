// Copyright 2026 The Stabkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABKIT_GRAPHSTATE_H
#define STABKIT_GRAPHSTATE_H

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabkit/local_clifford.h"
#include "stabkit/statevec.h"
#include "stabkit/tableau.h"

namespace stabkit {

/// Simple undirected graph: no self-loops, no multi-edges.
class Graph {
   public:
    Graph() = default;
    explicit Graph(size_t num_vertices) : adjacency_(num_vertices) {}

    /// Parses "n" on the first line followed by one "u v" edge per line
    /// (0-indexed). '#' starts a comment. Throws std::invalid_argument.
    static Graph parse(std::string_view text);
    static Graph path(size_t n);
    static Graph complete(size_t n);

    size_t num_vertices() const { return adjacency_.size(); }
    size_t num_edges() const;

    bool has_edge(size_t u, size_t v) const;
    /// Adds an edge; throws on self-loops, duplicates and bad vertices.
    void add_edge(size_t u, size_t v);
    void remove_edge(size_t u, size_t v);
    void toggle_edge(size_t u, size_t v);
    /// Removes every edge incident to v.
    void isolate(size_t v);

    const std::set<size_t>& neighbors(size_t v) const;
    size_t degree(size_t v) const { return neighbors(v).size(); }
    /// Edges (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<size_t, size_t>> edges() const;
    bool is_connected() const;

    /// Inverse of parse().
    std::string str() const;

    bool operator==(const Graph&) const = default;

   private:
    void check_vertex(size_t v) const;

    std::vector<std::set<size_t>> adjacency_;
};

/// Generators K_i = X_i prod_{j in N_i} Z_j, one per vertex.
Tableau stabilizer_generators(const Graph& g);

/// prod_{(i,j) in E} CZ_{ij} |+>^n as a dense vector.
StateVector build_state(const Graph& g);

/// Toggles every edge inside the neighborhood of v. An involution.
Graph local_complement(const Graph& g, size_t v);

/// A vertex taken out of the graph by a Pauli measurement: the qubit is
/// left in the eigenstate of `basis` with eigenvalue `outcome`.
struct MeasuredQubit {
    char basis = 'Z';
    int outcome = +1;

    bool operator==(const MeasuredQubit&) const = default;
};

/// A graph state dressed with local operations:
///
///   |gs> = (x)_{measured v} |basis_v, outcome_v>
///          (x)_{active v} frame_v byproduct_v  |graph restricted to active>
///
/// The Pauli byproduct acts before the Clifford frame. Measured vertices
/// have no edges.
struct GraphState {
    Graph graph;
    std::vector<LocalClifford> frame;
    std::vector<char> byproduct;  ///< 'I', 'X', 'Y' or 'Z' per vertex.
    std::vector<std::optional<MeasuredQubit>> measured;

    GraphState() = default;
    /// The bare graph state of g: identity frame, no byproducts.
    explicit GraphState(Graph g);

    size_t num_vertices() const { return graph.num_vertices(); }
    bool is_active(size_t v) const { return !measured.at(v).has_value(); }

    /// Multi-line description: edges, non-trivial frames, byproducts and
    /// measured vertices.
    std::string str() const;
};

/// Dense vector of the dressed state, for oracle comparisons.
StateVector densify(const GraphState& gs);

/// Stabilizer tableau of the dressed state.
Tableau to_tableau(const GraphState& gs);

/// Projects vertex v onto the eigenspace `outcome` (+1 / -1) of the physical
/// observable `basis` (X, Y or Z) and rewrites the graph.
///
/// The observable is first pulled back through the frame and byproduct of v
/// to a signed Pauli on the bare graph state; then the bare rule applies:
///   Z: delete the edges at v.
///   Y: local complementation at v, then delete the edges at v.
///   X: local complementation at the special neighbor h, the Y rule at v,
///      then local complementation at h again.
/// Neighbor corrections (S-type for Y, a Y quarter-turn at h for X, and Z
/// byproducts for the sign-dependent parts) are folded into frame and
/// byproduct. h defaults to the lowest-index neighbor.
///
/// Throws std::out_of_range for a bad vertex, std::invalid_argument for a
/// re-measurement, a bad basis, or an h that is not a neighbor, and
/// std::domain_error when the requested outcome has probability zero.
GraphState measure_graph(const GraphState& gs, size_t v, char basis, int outcome,
                         std::optional<size_t> special_neighbor = std::nullopt);

}  // namespace stabkit

#endif  // STABKIT_GRAPHSTATE_H
