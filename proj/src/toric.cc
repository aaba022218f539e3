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

#include "stabkit/toric.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stabkit {

std::string_view homology_name(HomologyClass c) {
    switch (c) {
        case HomologyClass::kTrivial:
            return "trivial";
        case HomologyClass::kH:
            return "h";
        case HomologyClass::kV:
            return "v";
        case HomologyClass::kHV:
            return "hv";
    }
    return "?";
}

size_t ErrorChain::weight() const {
    size_t w = 0;
    for (uint64_t word : words_) {
        w += static_cast<size_t>(std::popcount(word));
    }
    return w;
}

bool ErrorChain::empty() const {
    for (uint64_t word : words_) {
        if (word) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> ErrorChain::support() const {
    std::vector<size_t> out;
    for (size_t w = 0; w < words_.size(); ++w) {
        uint64_t word = words_[w];
        while (word) {
            out.push_back(w * 64 + static_cast<size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

ErrorChain& ErrorChain::operator^=(const ErrorChain& o) {
    if (o.n_ != n_) {
        throw std::invalid_argument("chain length mismatch");
    }
    for (size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= o.words_[w];
    }
    return *this;
}

ErrorChain operator^(ErrorChain a, const ErrorChain& b) {
    a ^= b;
    return a;
}

ToricLattice::ToricLattice(size_t L) : L_(L) {
    if (L < 2) {
        throw std::invalid_argument("toric lattice needs L >= 2, got " + std::to_string(L));
    }
    vertex_edges_.resize(L * L);
    face_edges_.resize(L * L);
    for (size_t x = 0; x < L; ++x) {
        for (size_t y = 0; y < L; ++y) {
            const size_t s = site(x, y);
            vertex_edges_[s] = {edge(x, y, 0), edge(x + L - 1, y, 0), edge(x, y, 1), edge(x, y + L - 1, 1)};
            face_edges_[s] = {edge(x, y, 0), edge(x, y, 1), edge(x, y + 1, 0), edge(x + 1, y, 1)};
        }
    }
    for (size_t i = 0; i < L; ++i) {
        cut_h_.push_back(edge(0, i, 0));
        cut_v_.push_back(edge(i, 0, 1));
    }
}

std::array<size_t, 2> ToricLattice::edge_vertices(size_t e) const {
    const size_t s = e / 2;
    const size_t x = site_x(s), y = site_y(s);
    return (e & 1) ? std::array<size_t, 2>{s, site(x, y + 1)} : std::array<size_t, 2>{s, site(x + 1, y)};
}

std::array<size_t, 2> ToricLattice::edge_faces(size_t e) const {
    const size_t s = e / 2;
    const size_t x = site_x(s), y = site_y(s);
    return (e & 1) ? std::array<size_t, 2>{s, site(x + L_ - 1, y)} : std::array<size_t, 2>{s, site(x, y + L_ - 1)};
}

size_t ToricLattice::distance(size_t a, size_t b) const {
    const size_t dx = (site_x(b) + L_ - site_x(a)) % L_;
    const size_t dy = (site_y(b) + L_ - site_y(a)) % L_;
    return std::min(dx, L_ - dx) + std::min(dy, L_ - dy);
}

std::vector<size_t> ToricLattice::shortest_path(size_t a, size_t b) const {
    std::vector<size_t> path;
    size_t x = site_x(a), y = site_y(a);
    const size_t dx = (site_x(b) + L_ - x) % L_;
    if (2 * dx <= L_) {
        for (size_t i = 0; i < dx; ++i, x = mod(x + 1)) {
            path.push_back(edge(x, y, 0));
        }
    } else {
        for (size_t i = 0; i < L_ - dx; ++i) {
            x = mod(x + L_ - 1);
            path.push_back(edge(x, y, 0));
        }
    }
    const size_t dy = (site_y(b) + L_ - y) % L_;
    if (2 * dy <= L_) {
        for (size_t i = 0; i < dy; ++i, y = mod(y + 1)) {
            path.push_back(edge(x, y, 1));
        }
    } else {
        for (size_t i = 0; i < L_ - dy; ++i) {
            y = mod(y + L_ - 1);
            path.push_back(edge(x, y, 1));
        }
    }
    return path;
}

Tableau stabilizer_tableau(const ToricLattice& lat) {
    if (lat.L() > 16) {
        throw std::length_error("stabilizer tableau is capped at L = 16, got " + std::to_string(lat.L()));
    }
    const size_t n = lat.num_edges();
    std::vector<PauliString> gens;
    for (size_t f = 0; f + 1 < lat.num_faces(); ++f) {
        PauliString p(n);
        for (size_t e : lat.face_edges(f)) {
            p.set_z(e, true);
        }
        gens.push_back(std::move(p));
    }
    for (size_t v = 0; v + 1 < lat.num_vertices(); ++v) {
        PauliString p(n);
        for (size_t e : lat.vertex_edges(v)) {
            p.set_x(e, true);
        }
        gens.push_back(std::move(p));
    }
    return Tableau::from_generators(n, std::move(gens));
}

LogicalOperators logical_operators(const ToricLattice& lat) {
    const size_t n = lat.num_edges();
    LogicalOperators out{PauliString(n), PauliString(n), PauliString(n), PauliString(n)};
    for (size_t e : lat.cut_h()) {
        out.x1.set_x(e, true);
    }
    for (size_t e : lat.cut_v()) {
        out.x2.set_x(e, true);
    }
    for (size_t e : logical_chain(lat, HomologyClass::kH).support()) {
        out.z1.set_z(e, true);
    }
    for (size_t e : logical_chain(lat, HomologyClass::kV).support()) {
        out.z2.set_z(e, true);
    }
    return out;
}

ErrorChain sample_errors(const ToricLattice& lat, double p, Rng& rng) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::out_of_range("error probability must lie in [0, 1]");
    }
    ErrorChain c(lat.num_edges());
    for (size_t e = 0; e < lat.num_edges(); ++e) {
        if (bernoulli(rng, p)) {
            c.flip(e);
        }
    }
    return c;
}

namespace {

void check_size(const ToricLattice& lat, const ErrorChain& c) {
    if (c.size() != lat.num_edges()) {
        throw std::invalid_argument("chain length does not match the lattice");
    }
}

}  // namespace

Syndrome syndrome_of(const ToricLattice& lat, const ErrorChain& c) {
    check_size(lat, c);
    Syndrome s;
    for (size_t v = 0; v < lat.num_vertices(); ++v) {
        const auto& es = lat.vertex_edges(v);
        if (c.get(es[0]) ^ c.get(es[1]) ^ c.get(es[2]) ^ c.get(es[3])) {
            s.defects.push_back(v);
        }
    }
    return s;
}

Syndrome syndrome_of_x(const ToricLattice& lat, const ErrorChain& c) {
    check_size(lat, c);
    Syndrome s;
    for (size_t f = 0; f < lat.num_faces(); ++f) {
        const auto& es = lat.face_edges(f);
        if (c.get(es[0]) ^ c.get(es[1]) ^ c.get(es[2]) ^ c.get(es[3])) {
            s.defects.push_back(f);
        }
    }
    return s;
}

HomologyClass homology_class(const ToricLattice& lat, const ErrorChain& cycle) {
    if (!syndrome_of(lat, cycle).empty()) {
        throw std::invalid_argument("homology class requested for a chain with a boundary");
    }
    unsigned bits = 0;
    for (size_t e : lat.cut_h()) {
        bits ^= cycle.get(e) ? 1u : 0u;
    }
    for (size_t e : lat.cut_v()) {
        bits ^= cycle.get(e) ? 2u : 0u;
    }
    return static_cast<HomologyClass>(bits);
}

ErrorChain logical_chain(const ToricLattice& lat, HomologyClass c) {
    ErrorChain out(lat.num_edges());
    const unsigned bits = static_cast<unsigned>(c);
    for (size_t i = 0; i < lat.L(); ++i) {
        if (bits & 1u) {
            out.flip(lat.edge(i, 0, 0));
        }
        if (bits & 2u) {
            out.flip(lat.edge(0, i, 1));
        }
    }
    return out;
}

ErrorChain face_support(const ToricLattice& lat, size_t f) {
    ErrorChain out(lat.num_edges());
    for (size_t e : lat.face_edges(f)) {
        out.flip(e);
    }
    return out;
}

ErrorChain dual_chain(const ToricLattice& lat, const ErrorChain& c) {
    check_size(lat, c);
    ErrorChain out(lat.num_edges());
    for (size_t e : c.support()) {
        const size_t x = lat.site_x(e / 2), y = lat.site_y(e / 2);
        out.flip((e & 1) ? lat.edge(x, y + 1, 0) : lat.edge(x + 1, y, 1));
    }
    return out;
}

ErrorChain dual_chain_inverse(const ToricLattice& lat, const ErrorChain& c) {
    check_size(lat, c);
    const size_t L = lat.L();
    ErrorChain out(lat.num_edges());
    for (size_t e : c.support()) {
        const size_t x = lat.site_x(e / 2), y = lat.site_y(e / 2);
        out.flip((e & 1) ? lat.edge(x + L - 1, y, 0) : lat.edge(x, y + L - 1, 1));
    }
    return out;
}

size_t dual_face_to_vertex(const ToricLattice& lat, size_t f) {
    return lat.site(lat.site_x(f) + 1, lat.site_y(f) + 1);
}

}  // namespace stabkit
