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

#ifndef STABKIT_TORIC_H
#define STABKIT_TORIC_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "stabkit/pauli.h"
#include "stabkit/rng.h"
#include "stabkit/tableau.h"

namespace stabkit {

/// Homology class of a cycle on the torus, in this fixed order.
enum class HomologyClass : uint8_t { kTrivial = 0, kH = 1, kV = 2, kHV = 3 };

std::string_view homology_name(HomologyClass c);

/// Bit vector over the 2L^2 edges of a torus.
class ErrorChain {
   public:
    ErrorChain() = default;
    explicit ErrorChain(size_t num_edges) : n_(num_edges), words_((num_edges + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool get(size_t e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
    void set(size_t e, bool v) {
        const uint64_t m = uint64_t{1} << (e & 63);
        words_[e >> 6] = v ? (words_[e >> 6] | m) : (words_[e >> 6] & ~m);
    }
    void flip(size_t e) { words_[e >> 6] ^= uint64_t{1} << (e & 63); }
    size_t weight() const;
    bool empty() const;
    std::vector<size_t> support() const;
    ErrorChain& operator^=(const ErrorChain& o);
    bool operator==(const ErrorChain& o) const = default;

   private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

ErrorChain operator^(ErrorChain a, const ErrorChain& b);

/// Sorted list of flagged vertices (Z errors) or faces (X errors).
struct Syndrome {
    std::vector<size_t> defects;
    bool empty() const { return defects.empty(); }
    bool operator==(const Syndrome& o) const = default;
};

/// L x L square lattice with periodic boundaries.
///
/// Edge (x, y, o) has index 2(xL + y) + o. Orientation 0 joins vertex (x, y)
/// to (x+1, y); orientation 1 joins (x, y) to (x, y+1). Vertices and faces
/// are both indexed xL + y; face (x, y) is the plaquette whose lower-left
/// corner is vertex (x, y).
class ToricLattice {
   public:
    explicit ToricLattice(size_t L);

    size_t L() const { return L_; }
    size_t num_edges() const { return 2 * L_ * L_; }
    size_t num_vertices() const { return L_ * L_; }
    size_t num_faces() const { return L_ * L_; }

    size_t edge(size_t x, size_t y, int orientation) const { return 2 * (mod(x) * L_ + mod(y)) + orientation; }
    size_t site(size_t x, size_t y) const { return mod(x) * L_ + mod(y); }
    size_t site_x(size_t s) const { return s / L_; }
    size_t site_y(size_t s) const { return s % L_; }

    /// Two endpoint vertices of an edge.
    std::array<size_t, 2> edge_vertices(size_t e) const;
    /// Two faces containing an edge.
    std::array<size_t, 2> edge_faces(size_t e) const;
    const std::array<size_t, 4>& vertex_edges(size_t v) const { return vertex_edges_[v]; }
    const std::array<size_t, 4>& face_edges(size_t f) const { return face_edges_[f]; }

    /// Torus Manhattan distance between two vertices.
    size_t distance(size_t a, size_t b) const;
    /// Shortest edge path from a to b: along x first, then y, each axis the
    /// shorter way round with ties going in the positive direction.
    std::vector<size_t> shortest_path(size_t a, size_t b) const;

    /// Edges crossed by the two dual cuts used for homology tests.
    const std::vector<size_t>& cut_h() const { return cut_h_; }
    const std::vector<size_t>& cut_v() const { return cut_v_; }

   private:
    size_t mod(size_t a) const { return a % L_; }

    size_t L_;
    std::vector<std::array<size_t, 4>> vertex_edges_;
    std::vector<std::array<size_t, 4>> face_edges_;
    std::vector<size_t> cut_h_;
    std::vector<size_t> cut_v_;
};

/// Face operators A_f (Z on the four face edges) followed by vertex
/// operators B_v (X on the four star edges), dropping the last of each
/// family: 2L^2 - 2 independent generators. Requires 2 <= L <= 16.
Tableau stabilizer_tableau(const ToricLattice& lat);

struct LogicalOperators {
    PauliString x1, z1, x2, z2;
};

/// L_Z^(1): Z on the horizontal loop {(x,0,0)}. L_Z^(2): Z on the vertical
/// loop {(0,y,1)}. L_X^(1): X on cut_h. L_X^(2): X on cut_v.
LogicalOperators logical_operators(const ToricLattice& lat);

/// Each edge flipped independently with probability p. Throws for p outside [0,1].
ErrorChain sample_errors(const ToricLattice& lat, double p, Rng& rng);

/// Vertices with odd overlap with a Z-error chain.
Syndrome syndrome_of(const ToricLattice& lat, const ErrorChain& c);
/// Faces with odd overlap with an X-error chain.
Syndrome syndrome_of_x(const ToricLattice& lat, const ErrorChain& c);

/// Class of a primal cycle from its parities against cut_h and cut_v.
/// Throws std::invalid_argument when the chain has a boundary.
HomologyClass homology_class(const ToricLattice& lat, const ErrorChain& cycle);

/// A representative cycle of each class (empty for trivial).
ErrorChain logical_chain(const ToricLattice& lat, HomologyClass c);

/// Support of the face operator A_f as a chain.
ErrorChain face_support(const ToricLattice& lat, size_t f);

/// Lattice duality: (x,y,0) -> (x+1,y,1), (x,y,1) -> (x,y+1,0). Face (x,y)
/// boundaries map onto vertex (x+1,y+1) stars, so X-error problems become
/// Z-error problems on the same lattice.
ErrorChain dual_chain(const ToricLattice& lat, const ErrorChain& c);
ErrorChain dual_chain_inverse(const ToricLattice& lat, const ErrorChain& c);
size_t dual_face_to_vertex(const ToricLattice& lat, size_t f);

}  // namespace stabkit

#endif  // STABKIT_TORIC_H
