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

#include "stabkit/graphstate.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stabkit {

namespace {

char pauli_product(char a, char b) {
    auto bits = [](char p) -> std::pair<bool, bool> {
        switch (p) {
            case 'X':
                return {true, false};
            case 'Y':
                return {true, true};
            case 'Z':
                return {false, true};
            default:
                return {false, false};
        }
    };
    auto [xa, za] = bits(a);
    auto [xb, zb] = bits(b);
    return "IXZY"[(xa ^ xb) + 2 * (za ^ zb)];
}

bool pauli_anticommutes(char a, char b) { return a != 'I' && b != 'I' && a != b; }

// Clifford taking |+> to the eigenstate (basis, outcome).
LocalClifford plus_to_eigenstate(char basis, int outcome) {
    switch (basis) {
        case 'X':
            return LocalClifford::pauli(outcome > 0 ? 'I' : 'Z');
        case 'Y':
            return LocalClifford::from_gate(outcome > 0 ? CliffordGate::S : CliffordGate::SDG);
        case 'Z':
            return outcome > 0 ? LocalClifford::from_gate(CliffordGate::H)
                               : LocalClifford::pauli('X') * LocalClifford::from_gate(CliffordGate::H);
        default:
            throw std::invalid_argument(std::string("measurement basis must be X, Y or Z, got '") + basis + "'");
    }
}

// Folds the local operation U (applied directly on the bare graph state) into
// the dressing of vertex w: frame * byproduct * U = frame' * byproduct'.
void absorb(GraphState& gs, size_t w, const LocalClifford& u) {
    if (u.is_pauli()) {
        gs.byproduct[w] = pauli_product(gs.byproduct[w], u.as_pauli());
        return;
    }
    const char b = gs.byproduct[w];
    gs.frame[w] = gs.frame[w] * u;
    gs.byproduct[w] = b == 'I' ? 'I' : u.conjugate_inverse(b).pauli;
}

}  // namespace

Graph Graph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Graph> g;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::vector<long long> values;
        long long value = 0;
        while (fields >> value) {
            values.push_back(value);
        }
        std::string rest;
        fields.clear();
        if (fields >> rest) {
            throw std::invalid_argument("graph line " + std::to_string(line_no) + ": unexpected '" + rest + "'");
        }
        if (values.empty()) {
            continue;
        }
        for (long long v : values) {
            if (v < 0) {
                throw std::invalid_argument("graph line " + std::to_string(line_no) + ": negative number");
            }
        }
        if (!g) {
            if (values.size() != 1) {
                throw std::invalid_argument("graph line " + std::to_string(line_no) + ": expected vertex count");
            }
            g.emplace(static_cast<size_t>(values[0]));
            continue;
        }
        if (values.size() != 2) {
            throw std::invalid_argument("graph line " + std::to_string(line_no) + ": expected 'u v'");
        }
        try {
            g->add_edge(static_cast<size_t>(values[0]), static_cast<size_t>(values[1]));
        } catch (const std::exception& e) {
            throw std::invalid_argument("graph line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!g) {
        throw std::invalid_argument("graph text has no vertex count");
    }
    return *g;
}

Graph Graph::path(size_t n) {
    Graph g(n);
    for (size_t v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

Graph Graph::complete(size_t n) {
    Graph g(n);
    for (size_t u = 0; u < n; ++u) {
        for (size_t v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

void Graph::check_vertex(size_t v) const {
    if (v >= adjacency_.size()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for " +
                                std::to_string(adjacency_.size()) + " vertices");
    }
}

size_t Graph::num_edges() const {
    size_t twice = 0;
    for (const auto& nb : adjacency_) {
        twice += nb.size();
    }
    return twice / 2;
}

bool Graph::has_edge(size_t u, size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return adjacency_[u].count(v) != 0;
}

void Graph::add_edge(size_t u, size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (!adjacency_[u].insert(v).second) {
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    adjacency_[v].insert(u);
}

void Graph::remove_edge(size_t u, size_t v) {
    check_vertex(u);
    check_vertex(v);
    adjacency_[u].erase(v);
    adjacency_[v].erase(u);
}

void Graph::toggle_edge(size_t u, size_t v) {
    if (has_edge(u, v)) {
        remove_edge(u, v);
    } else {
        add_edge(u, v);
    }
}

void Graph::isolate(size_t v) {
    check_vertex(v);
    for (size_t w : adjacency_[v]) {
        adjacency_[w].erase(v);
    }
    adjacency_[v].clear();
}

const std::set<size_t>& Graph::neighbors(size_t v) const {
    check_vertex(v);
    return adjacency_[v];
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t u = 0; u < adjacency_.size(); ++u) {
        for (size_t v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

bool Graph::is_connected() const {
    if (adjacency_.empty()) {
        return true;
    }
    std::vector<bool> seen(adjacency_.size(), false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
        size_t u = stack.back();
        stack.pop_back();
        for (size_t v : adjacency_[u]) {
            if (!seen[v]) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == adjacency_.size();
}

std::string Graph::str() const {
    std::string out = std::to_string(num_vertices()) + "\n";
    for (auto [u, v] : edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

Tableau stabilizer_generators(const Graph& g) {
    const size_t n = g.num_vertices();
    std::vector<PauliString> gens;
    gens.reserve(n);
    for (size_t v = 0; v < n; ++v) {
        PauliString k = PauliString::single(n, v, 'X');
        for (size_t w : g.neighbors(v)) {
            k.set_z(w, true);
        }
        gens.push_back(std::move(k));
    }
    return Tableau::from_generators(n, std::move(gens));
}

StateVector build_state(const Graph& g) {
    const size_t n = g.num_vertices();
    StateVector s(n);
    for (size_t q = 0; q < n; ++q) {
        s.apply_gate(CliffordGate::H, {q});
    }
    for (auto [u, v] : g.edges()) {
        s.apply_gate(CliffordGate::CZ, {u, v});
    }
    return s;
}

Graph local_complement(const Graph& g, size_t v) {
    Graph out = g;
    std::vector<size_t> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    for (size_t i = 0; i < nb.size(); ++i) {
        for (size_t j = i + 1; j < nb.size(); ++j) {
            out.toggle_edge(nb[i], nb[j]);
        }
    }
    return out;
}

GraphState::GraphState(Graph g)
    : graph(std::move(g)),
      frame(graph.num_vertices()),
      byproduct(graph.num_vertices(), 'I'),
      measured(graph.num_vertices()) {}

std::string GraphState::str() const {
    std::ostringstream out;
    out << "vertices " << num_vertices() << "\n";
    for (auto [u, v] : graph.edges()) {
        out << "edge " << u << " " << v << "\n";
    }
    for (size_t v = 0; v < num_vertices(); ++v) {
        if (measured[v]) {
            out << "measured " << v << " " << measured[v]->basis << (measured[v]->outcome > 0 ? " +" : " -")
                << "\n";
            continue;
        }
        if (!frame[v].is_identity()) {
            out << "frame " << v << " " << frame[v].str() << "\n";
        }
        if (byproduct[v] != 'I') {
            out << "byproduct " << v << " " << byproduct[v] << "\n";
        }
    }
    return out.str();
}

StateVector densify(const GraphState& gs) {
    StateVector s = build_state(gs.graph);
    for (size_t v = 0; v < gs.num_vertices(); ++v) {
        if (gs.measured[v]) {
            s.apply_matrix(v, plus_to_eigenstate(gs.measured[v]->basis, gs.measured[v]->outcome).matrix());
            continue;
        }
        if (gs.byproduct[v] != 'I') {
            s.apply_matrix(v, LocalClifford::pauli(gs.byproduct[v]).matrix());
        }
        if (!gs.frame[v].is_identity()) {
            s.apply_matrix(v, gs.frame[v].matrix());
        }
    }
    return s;
}

Tableau to_tableau(const GraphState& gs) {
    const size_t n = gs.num_vertices();
    Tableau t = stabilizer_generators(gs.graph);
    for (size_t v = 0; v < n; ++v) {
        if (gs.measured[v]) {
            const auto& word = plus_to_eigenstate(gs.measured[v]->basis, gs.measured[v]->outcome).word();
            for (CliffordGate g : word) {
                t = apply_clifford(t, g, {v});
            }
            continue;
        }
        if (gs.byproduct[v] != 'I') {
            t = apply_clifford(t, parse_gate(std::string(1, gs.byproduct[v])), {v});
        }
        for (CliffordGate g : gs.frame[v].word()) {
            t = apply_clifford(t, g, {v});
        }
    }
    return t;
}

GraphState measure_graph(const GraphState& gs, size_t v, char basis, int outcome,
                         std::optional<size_t> special_neighbor) {
    if (v >= gs.num_vertices()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for " +
                                std::to_string(gs.num_vertices()) + " vertices");
    }
    if (!gs.is_active(v)) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " was already measured");
    }
    if (basis != 'X' && basis != 'Y' && basis != 'Z') {
        throw std::invalid_argument(std::string("measurement basis must be X, Y or Z, got '") + basis + "'");
    }
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("measurement outcome must be +1 or -1");
    }

    // Pull the observable back to the bare graph state:
    // (F B)^dagger P (F B) = B F^dagger P F B.
    const SignedPauli through_frame = gs.frame[v].conjugate_inverse(basis);
    const char bare = through_frame.pauli;
    int sign = through_frame.sign;
    if (pauli_anticommutes(gs.byproduct[v], bare)) {
        sign = -sign;
    }
    const int bare_outcome = outcome * sign;

    GraphState out = gs;
    const std::set<size_t> nv = gs.graph.neighbors(v);
    if (nv.empty()) {
        // An isolated bare vertex is |+>: X is fixed, Y and Z are fair coins.
        if (bare == 'X' && bare_outcome < 0) {
            throw std::domain_error("outcome " + std::to_string(outcome) + " of " + basis + " on vertex " +
                                    std::to_string(v) + " has probability zero");
        }
    } else if (bare == 'Z') {
        if (bare_outcome < 0) {
            for (size_t b : nv) {
                absorb(out, b, LocalClifford::pauli('Z'));
            }
        }
        out.graph.isolate(v);
    } else if (bare == 'Y') {
        const LocalClifford correction =
            LocalClifford::from_gate(bare_outcome > 0 ? CliffordGate::S : CliffordGate::SDG);
        for (size_t b : nv) {
            absorb(out, b, correction);
        }
        out.graph = local_complement(gs.graph, v);
        out.graph.isolate(v);
    } else {
        const size_t h = special_neighbor.value_or(*nv.begin());
        if (!nv.count(h)) {
            throw std::invalid_argument("special neighbor " + std::to_string(h) + " is not adjacent to vertex " +
                                        std::to_string(v));
        }
        const std::set<size_t>& nh = gs.graph.neighbors(h);
        if (bare_outcome > 0) {
            absorb(out, h, LocalClifford::sqrt_plus_iy());
            for (size_t b : nv) {
                if (b != h && !nh.count(b)) {
                    absorb(out, b, LocalClifford::pauli('Z'));
                }
            }
        } else {
            absorb(out, h, LocalClifford::sqrt_minus_iy());
            for (size_t b : nh) {
                if (b != v && !nv.count(b)) {
                    absorb(out, b, LocalClifford::pauli('Z'));
                }
            }
        }
        Graph g = local_complement(gs.graph, h);
        g = local_complement(g, v);
        g = local_complement(g, h);
        g.isolate(v);
        out.graph = std::move(g);
    }

    out.frame[v] = LocalClifford();
    out.byproduct[v] = 'I';
    out.measured[v] = MeasuredQubit{basis, outcome};
    return out;
}

}  // namespace stabkit
