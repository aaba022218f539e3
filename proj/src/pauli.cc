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

#include "stabkit/pauli.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stabkit {

namespace {

size_t words_for(size_t n) { return (n + 63) / 64; }

void require_same_size(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "Pauli strings act on different qubit counts: " + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()));
    }
}

}  // namespace

size_t gate_arity(CliffordGate gate) {
    return (gate == CliffordGate::CNOT || gate == CliffordGate::CZ) ? 2 : 1;
}

std::string_view gate_name(CliffordGate gate) {
    switch (gate) {
        case CliffordGate::I:
            return "I";
        case CliffordGate::X:
            return "X";
        case CliffordGate::Y:
            return "Y";
        case CliffordGate::Z:
            return "Z";
        case CliffordGate::H:
            return "H";
        case CliffordGate::S:
            return "S";
        case CliffordGate::SDG:
            return "SDG";
        case CliffordGate::CNOT:
            return "CNOT";
        case CliffordGate::CZ:
            return "CZ";
    }
    return "?";
}

CliffordGate parse_gate(std::string_view name) {
    for (auto g : {CliffordGate::I, CliffordGate::X, CliffordGate::Y, CliffordGate::Z, CliffordGate::H,
                   CliffordGate::S, CliffordGate::SDG, CliffordGate::CNOT, CliffordGate::CZ}) {
        if (gate_name(g) == name) {
            return g;
        }
    }
    if (name == "CX") {
        return CliffordGate::CNOT;
    }
    throw std::invalid_argument("unknown Clifford gate '" + std::string(name) + "'");
}

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {}

PauliString PauliString::from_text(std::string_view text) {
    unsigned phase = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        if (text.front() == '-') {
            phase = 2;
        }
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        phase += 1;
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    for (size_t q = 0; q < text.size(); ++q) {
        result.set_pauli(q, text[q]);
    }
    result.set_phase(phase);
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t q, char pauli) {
    if (q >= num_qubits) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits));
    }
    PauliString result(num_qubits);
    result.set_pauli(q, pauli);
    return result;
}

bool PauliString::x(size_t q) const { return (xs_[q / 64] >> (q % 64)) & 1u; }
bool PauliString::z(size_t q) const { return (zs_[q / 64] >> (q % 64)) & 1u; }

void PauliString::set_x(size_t q, bool v) {
    uint64_t mask = uint64_t{1} << (q % 64);
    xs_[q / 64] = v ? (xs_[q / 64] | mask) : (xs_[q / 64] & ~mask);
}

void PauliString::set_z(size_t q, bool v) {
    uint64_t mask = uint64_t{1} << (q % 64);
    zs_[q / 64] = v ? (zs_[q / 64] | mask) : (zs_[q / 64] & ~mask);
}

char PauliString::pauli_at(size_t q) const { return "IXZY"[x(q) + 2 * z(q)]; }

void PauliString::set_pauli(size_t q, char pauli) {
    switch (pauli) {
        case 'I':
        case '_':
            set_x(q, false), set_z(q, false);
            break;
        case 'X':
            set_x(q, true), set_z(q, false);
            break;
        case 'Y':
            set_x(q, true), set_z(q, true);
            break;
        case 'Z':
            set_x(q, false), set_z(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli factor: '") + pauli + "'");
    }
}

bool PauliString::is_identity_up_to_phase() const {
    return std::all_of(xs_.begin(), xs_.end(), [](uint64_t w) { return w == 0; }) &&
           std::all_of(zs_.begin(), zs_.end(), [](uint64_t w) { return w == 0; });
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < xs_.size(); ++k) {
        w += std::popcount(xs_[k] | zs_[k]);
    }
    return w;
}

int PauliString::sign() const {
    if (!is_hermitian()) {
        throw std::invalid_argument("sign of non-hermitian Pauli string " + str());
    }
    return phase_ == 0 ? +1 : -1;
}

std::string PauliString::str() const {
    static constexpr std::string_view prefixes[4] = {"+", "+i", "-", "-i"};
    std::string out(prefixes[phase_]);
    out.reserve(out.size() + num_qubits_);
    for (size_t q = 0; q < num_qubits_; ++q) {
        out.push_back(pauli_at(q));
    }
    return out;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
    require_same_size(*this, rhs);
    // Per-qubit products: XY=iZ, YZ=iX, ZX=iY and their reverses carry -i.
    int64_t quarter_turns = static_cast<int64_t>(phase_) + rhs.phase_;
    for (size_t k = 0; k < xs_.size(); ++k) {
        uint64_t x1 = xs_[k], z1 = zs_[k], x2 = rhs.xs_[k], z2 = rhs.zs_[k];
        uint64_t plus = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
        uint64_t minus = (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2) | (x1 & ~z1 & ~x2 & z2);
        quarter_turns += std::popcount(plus);
        quarter_turns -= std::popcount(minus);
        xs_[k] = x1 ^ x2;
        zs_[k] = z1 ^ z2;
    }
    phase_ = static_cast<uint8_t>(((quarter_turns % 4) + 4) % 4);
    return *this;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
    PauliString result = a;
    result *= b;
    return result;
}

PauliString operator*(const PauliString& a, const PauliString& b) { return multiply(a, b); }

bool commutes(const PauliString& a, const PauliString& b) {
    require_same_size(a, b);
    uint64_t acc = 0;
    auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
    for (size_t k = 0; k < ax.size(); ++k) {
        acc ^= (ax[k] & bz[k]) ^ (az[k] & bx[k]);
    }
    return (std::popcount(acc) & 1) == 0;
}

void check_targets(size_t num_qubits, CliffordGate gate, std::span<const size_t> targets) {
    if (targets.size() != gate_arity(gate)) {
        throw std::invalid_argument(std::string(gate_name(gate)) + " expects " + std::to_string(gate_arity(gate)) +
                                    " target(s), got " + std::to_string(targets.size()));
    }
    for (size_t t : targets) {
        if (t >= num_qubits) {
            throw std::out_of_range(std::string(gate_name(gate)) + " target " + std::to_string(t) +
                                    " out of range for " + std::to_string(num_qubits) + " qubits");
        }
    }
    if (targets.size() == 2 && targets[0] == targets[1]) {
        throw std::invalid_argument(std::string(gate_name(gate)) + " needs distinct targets");
    }
}

void conjugate_clifford_inplace(PauliString& p, CliffordGate gate, std::span<const size_t> targets) {
    check_targets(p.num_qubits(), gate, targets);
    const size_t a = targets[0];
    const bool xa = p.x(a), za = p.z(a);
    unsigned flip = 0;
    switch (gate) {
        case CliffordGate::I:
            break;
        case CliffordGate::X:
            flip = za;
            break;
        case CliffordGate::Y:
            flip = xa ^ za;
            break;
        case CliffordGate::Z:
            flip = xa;
            break;
        case CliffordGate::H:
            flip = xa & za;
            p.set_x(a, za);
            p.set_z(a, xa);
            break;
        case CliffordGate::S:
            flip = xa & za;
            p.set_z(a, za ^ xa);
            break;
        case CliffordGate::SDG:
            flip = xa & !za;
            p.set_z(a, za ^ xa);
            break;
        case CliffordGate::CNOT: {
            const size_t t = targets[1];
            const bool xt = p.x(t), zt = p.z(t);
            flip = xa & zt & (xt ^ za ^ 1u);
            p.set_x(t, xt ^ xa);
            p.set_z(a, za ^ zt);
            break;
        }
        case CliffordGate::CZ: {
            const size_t b = targets[1];
            const bool xb = p.x(b), zb = p.z(b);
            flip = xa & xb & (za ^ zb);
            p.set_z(a, za ^ xb);
            p.set_z(b, zb ^ xa);
            break;
        }
    }
    if (flip) {
        p.negate();
    }
}

PauliString conjugate_clifford(const PauliString& p, CliffordGate gate, std::span<const size_t> targets) {
    PauliString result = p;
    conjugate_clifford_inplace(result, gate, targets);
    return result;
}

PauliString conjugate_clifford(const PauliString& p, CliffordGate gate, std::initializer_list<size_t> targets) {
    return conjugate_clifford(p, gate, std::span<const size_t>(targets.begin(), targets.size()));
}

}  // namespace stabkit
