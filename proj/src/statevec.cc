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

#include "stabkit/statevec.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace stabkit {

namespace {

constexpr Complex kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Complex i_power(unsigned k) {
    static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k & 3u];
}

uint64_t low_mask(std::span<const uint64_t> words) { return words.empty() ? 0 : words[0]; }

void check_size(size_t n, size_t cap) {
    if (n > cap) {
        throw std::length_error("state vector of " + std::to_string(n) + " qubits exceeds the cap of " +
                                std::to_string(cap) + " qubits");
    }
}

}  // namespace

StateVector::StateVector(size_t num_qubits, size_t max_qubits) : num_qubits_(num_qubits) {
    check_size(num_qubits, max_qubits);
    amps_.assign(size_t{1} << num_qubits, Complex{0, 0});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes, size_t max_qubits) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    StateVector s;
    s.num_qubits_ = static_cast<size_t>(std::countr_zero(amplitudes.size()));
    check_size(s.num_qubits_, max_qubits);
    s.amps_ = std::move(amplitudes);
    return s;
}

StateVector StateVector::product(std::span<const std::array<Complex, 2>> factors, size_t max_qubits) {
    check_size(factors.size(), max_qubits);
    std::vector<Complex> amps{Complex{1, 0}};
    amps.reserve(size_t{1} << factors.size());
    for (size_t q = 0; q < factors.size(); ++q) {
        const size_t half = amps.size();
        amps.resize(2 * half);
        for (size_t b = 0; b < half; ++b) {
            amps[b + half] = amps[b] * factors[q][1];
            amps[b] *= factors[q][0];
        }
    }
    return from_amplitudes(std::move(amps), max_qubits);
}

double StateVector::norm() const {
    double acc = 0;
    for (const auto& a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

void StateVector::normalize() {
    double nrm = norm();
    if (nrm == 0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    for (auto& a : amps_) {
        a /= nrm;
    }
}

void StateVector::check_qubit(size_t q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) +
                                " qubits");
    }
}

void StateVector::apply_matrix(size_t q, const Matrix2& m) {
    check_qubit(q);
    const size_t stride = size_t{1} << q;
    for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (size_t off = 0; off < stride; ++off) {
            Complex& a0 = amps_[base + off];
            Complex& a1 = amps_[base + off + stride];
            Complex v0 = a0, v1 = a1;
            a0 = m[0][0] * v0 + m[0][1] * v1;
            a1 = m[1][0] * v0 + m[1][1] * v1;
        }
    }
}

Matrix2 gate_matrix(CliffordGate gate) {
    switch (gate) {
        case CliffordGate::I:
            return {{{1, 0}, {0, 1}}};
        case CliffordGate::X:
            return {{{0, 1}, {1, 0}}};
        case CliffordGate::Y:
            return {{{0, -kI}, {kI, 0}}};
        case CliffordGate::Z:
            return {{{1, 0}, {0, -1}}};
        case CliffordGate::H:
            return {{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}};
        case CliffordGate::S:
            return {{{1, 0}, {0, kI}}};
        case CliffordGate::SDG:
            return {{{1, 0}, {0, -kI}}};
        default:
            throw std::invalid_argument(std::string(gate_name(gate)) + " is not a single-qubit gate");
    }
}

void StateVector::apply_gate(CliffordGate gate, std::span<const size_t> targets) {
    check_targets(num_qubits_, gate, targets);
    if (gate_arity(gate) == 1) {
        apply_matrix(targets[0], gate_matrix(gate));
        return;
    }
    const size_t a = size_t{1} << targets[0];
    const size_t b = size_t{1} << targets[1];
    for (size_t idx = 0; idx < amps_.size(); ++idx) {
        if (gate == CliffordGate::CNOT) {
            // Swap the pair once, from the member with target bit clear.
            if ((idx & a) && !(idx & b)) {
                std::swap(amps_[idx], amps_[idx | b]);
            }
        } else if ((idx & a) && (idx & b)) {
            amps_[idx] = -amps_[idx];
        }
    }
}

void StateVector::apply_gate(CliffordGate gate, std::initializer_list<size_t> targets) {
    apply_gate(gate, std::span<const size_t>(targets.begin(), targets.size()));
}

void StateVector::apply_rz(size_t q, double theta) {
    const Complex minus = std::polar(1.0, -theta / 2), plus = std::polar(1.0, theta / 2);
    apply_matrix(q, {{{minus, 0}, {0, plus}}});
}

void StateVector::apply_pauli(const PauliString& p) {
    if (p.num_qubits() != num_qubits_) {
        throw std::invalid_argument("Pauli string size does not match the state");
    }
    const uint64_t xm = low_mask(p.x_words()), zm = low_mask(p.z_words());
    // Y = i X Z, so each Y adds a quarter turn on top of the X and Z actions.
    const Complex prefactor = i_power(p.phase() + std::popcount(xm & zm));
    std::vector<Complex> out(amps_.size());
    for (size_t b = 0; b < amps_.size(); ++b) {
        Complex v = amps_[b] * prefactor;
        if (std::popcount(b & zm) & 1) {
            v = -v;
        }
        out[b ^ xm] = v;
    }
    amps_ = std::move(out);
}

double StateVector::expectation(const PauliString& observable) const {
    StateVector applied = *this;
    applied.apply_pauli(observable);
    return overlap(*this, applied).real();
}

double StateVector::project(const PauliString& observable, int outcome, double zero_tolerance) {
    if (!observable.is_hermitian()) {
        throw std::invalid_argument("observable " + observable.str() + " is not hermitian");
    }
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("measurement outcome must be +1 or -1");
    }
    const double before = norm();
    StateVector applied = *this;
    applied.apply_pauli(observable);
    for (size_t b = 0; b < amps_.size(); ++b) {
        amps_[b] = 0.5 * (amps_[b] + static_cast<double>(outcome) * applied.amps_[b]);
    }
    const double after = norm();
    const double probability = (after * after) / (before * before);
    if (probability < zero_tolerance) {
        throw std::domain_error("projection onto outcome " + std::to_string(outcome) + " of " + observable.str() +
                                " has zero norm");
    }
    for (auto& a : amps_) {
        a /= after;
    }
    return probability;
}

double probability_plus(const StateVector& s, const PauliString& observable) {
    double nrm = s.norm();
    return 0.5 * (1.0 + s.expectation(observable) / (nrm * nrm));
}

std::pair<int, StateVector> measure(const StateVector& s, const PauliString& observable, Rng& rng) {
    if (!observable.is_hermitian()) {
        throw std::invalid_argument("observable " + observable.str() + " is not hermitian");
    }
    const double p_plus = probability_plus(s, observable);
    const int outcome = uniform01(rng) < p_plus ? +1 : -1;
    StateVector post = s;
    post.project(observable, outcome);
    return {outcome, std::move(post)};
}

Complex overlap(const StateVector& bra, const StateVector& ket) {
    if (bra.size() != ket.size()) {
        throw std::invalid_argument("overlap of vectors with " + std::to_string(bra.num_qubits()) + " and " +
                                    std::to_string(ket.num_qubits()) + " qubits");
    }
    Complex acc{0, 0};
    for (size_t b = 0; b < bra.size(); ++b) {
        acc += std::conj(bra[b]) * ket[b];
    }
    return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
    double na = a.norm(), nb = b.norm();
    return std::norm(overlap(a, b)) / (na * na * nb * nb);
}

StateVector apply_gate(StateVector s, CliffordGate gate, std::span<const size_t> targets) {
    s.apply_gate(gate, targets);
    return s;
}

StateVector densify(const Tableau& t) {
    const size_t n = t.num_qubits();
    StateVector probe(n);
    for (size_t reference = 0; reference < probe.size(); ++reference) {
        StateVector s(n);
        s[0] = 0;
        s[reference] = 1;
        for (const auto& g : t.generators()) {
            StateVector applied = s;
            applied.apply_pauli(g);
            for (size_t b = 0; b < s.size(); ++b) {
                s[b] = 0.5 * (s[b] + applied[b]);
            }
        }
        if (s.norm() > 1e-9) {
            s.normalize();
            return s;
        }
    }
    throw std::logic_error("stabilizer group annihilates every basis state");
}

}  // namespace stabkit
