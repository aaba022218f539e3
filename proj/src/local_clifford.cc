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

#include "stabkit/local_clifford.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace stabkit {

namespace {

PauliString as_string(SignedPauli p) {
    PauliString s = PauliString::single(1, 0, p.pauli);
    if (p.sign < 0) {
        s.negate();
    }
    return s;
}

SignedPauli from_string(const PauliString& s) { return {s.pauli_at(0), s.sign()}; }

struct Table {
    std::vector<LocalClifford> elements;
    std::vector<std::vector<CliffordGate>> words;
};

const Table& table() {
    static const Table t = [] {
        Table out;
        std::deque<std::pair<LocalClifford, std::vector<CliffordGate>>> queue;
        queue.emplace_back(LocalClifford(), std::vector<CliffordGate>{});
        while (!queue.empty()) {
            auto [element, word] = queue.front();
            queue.pop_front();
            if (std::find(out.elements.begin(), out.elements.end(), element) != out.elements.end()) {
                continue;
            }
            out.elements.push_back(element);
            out.words.push_back(word);
            for (CliffordGate g : {CliffordGate::H, CliffordGate::S}) {
                auto next = word;
                next.push_back(g);
                queue.emplace_back(LocalClifford::from_gate(g) * element, std::move(next));
            }
        }
        return out;
    }();
    return t;
}

}  // namespace

LocalClifford LocalClifford::from_images(SignedPauli x_image, SignedPauli z_image) {
    auto valid = [](SignedPauli p) {
        return (p.pauli == 'X' || p.pauli == 'Y' || p.pauli == 'Z') && (p.sign == 1 || p.sign == -1);
    };
    if (!valid(x_image) || !valid(z_image) || x_image.pauli == z_image.pauli) {
        throw std::invalid_argument("images do not define a single-qubit Clifford");
    }
    return LocalClifford(x_image, z_image);
}

LocalClifford LocalClifford::from_gate(CliffordGate gate) {
    if (gate_arity(gate) != 1) {
        throw std::invalid_argument(std::string(gate_name(gate)) + " is not a single-qubit gate");
    }
    const size_t q = 0;
    auto image = [&](char p) {
        return from_string(conjugate_clifford(PauliString::single(1, 0, p), gate, std::span<const size_t>(&q, 1)));
    };
    return LocalClifford(image('X'), image('Z'));
}

LocalClifford LocalClifford::from_word(const std::vector<CliffordGate>& word) {
    LocalClifford result;
    for (CliffordGate g : word) {
        result = from_gate(g) * result;
    }
    return result;
}

LocalClifford LocalClifford::pauli(char p) {
    switch (p) {
        case 'I':
            return LocalClifford();
        case 'X':
            return from_gate(CliffordGate::X);
        case 'Y':
            return from_gate(CliffordGate::Y);
        case 'Z':
            return from_gate(CliffordGate::Z);
        default:
            throw std::invalid_argument(std::string("not a Pauli: '") + p + "'");
    }
}

LocalClifford LocalClifford::sqrt_plus_iy() { return LocalClifford({'Z', +1}, {'X', -1}); }
LocalClifford LocalClifford::sqrt_minus_iy() { return LocalClifford({'Z', -1}, {'X', +1}); }

const std::vector<LocalClifford>& LocalClifford::all() { return table().elements; }

SignedPauli LocalClifford::conjugate(char p) const {
    switch (p) {
        case 'X':
            return x_image_;
        case 'Z':
            return z_image_;
        case 'Y': {
            // Y = i X Z, so U Y U^dagger = i (U X U^dagger)(U Z U^dagger).
            PauliString y = as_string(x_image_) * as_string(z_image_);
            y.set_phase(y.phase() + 1);
            return from_string(y);
        }
        default:
            throw std::invalid_argument(std::string("cannot conjugate '") + p + "'");
    }
}

SignedPauli LocalClifford::conjugate_inverse(char p) const { return inverse().conjugate(p); }

LocalClifford LocalClifford::operator*(const LocalClifford& rhs) const {
    auto through = [&](SignedPauli inner) {
        SignedPauli outer = conjugate(inner.pauli);
        return SignedPauli{outer.pauli, outer.sign * inner.sign};
    };
    return LocalClifford(through(rhs.x_image_), through(rhs.z_image_));
}

LocalClifford LocalClifford::inverse() const {
    for (const auto& candidate : all()) {
        if ((candidate * *this).is_identity()) {
            return candidate;
        }
    }
    throw std::logic_error("Clifford table is incomplete");
}

bool LocalClifford::is_pauli() const { return x_image_.pauli == 'X' && z_image_.pauli == 'Z'; }

char LocalClifford::as_pauli() const {
    if (!is_pauli()) {
        throw std::logic_error(str() + " is not a Pauli operator");
    }
    // X flips the sign of Z, Z flips X, Y flips both.
    const bool flips_x = x_image_.sign < 0, flips_z = z_image_.sign < 0;
    if (flips_x && flips_z) {
        return 'Y';
    }
    return flips_z ? 'X' : (flips_x ? 'Z' : 'I');
}

size_t LocalClifford::table_index() const {
    const auto& elements = table().elements;
    auto it = std::find(elements.begin(), elements.end(), *this);
    return static_cast<size_t>(it - elements.begin());
}

const std::vector<CliffordGate>& LocalClifford::word() const { return table().words[table_index()]; }

Matrix2 LocalClifford::matrix() const {
    Matrix2 m = gate_matrix(CliffordGate::I);
    for (CliffordGate g : word()) {
        Matrix2 gm = gate_matrix(g);
        Matrix2 next{};
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                next[r][c] = gm[r][0] * m[0][c] + gm[r][1] * m[1][c];
            }
        }
        m = next;
    }
    return m;
}

std::string LocalClifford::str() const {
    const auto& w = word();
    if (w.empty()) {
        return "I";
    }
    std::string out;
    for (CliffordGate g : w) {
        if (!out.empty()) {
            out += ' ';
        }
        out += gate_name(g);
    }
    return out;
}

void LocalClifford::apply_to(PauliString& p, size_t q) const {
    const char f = p.pauli_at(q);
    if (f == 'I') {
        return;
    }
    SignedPauli image = conjugate(f);
    p.set_pauli(q, image.pauli);
    if (image.sign < 0) {
        p.negate();
    }
}

}  // namespace stabkit
