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

#ifndef STABKIT_STATEVEC_H
#define STABKIT_STATEVEC_H

#include <array>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "stabkit/pauli.h"
#include "stabkit/rng.h"
#include "stabkit/tableau.h"

namespace stabkit {

using Complex = std::complex<double>;
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// Dense 2^n amplitude vector used as the brute-force oracle for the
/// symplectic code paths. Qubit j is bit j of the amplitude index.
///
/// Vectors need not be normalized (product bras for overlap sums are not).
class StateVector {
   public:
    static constexpr size_t kDefaultMaxQubits = 22;

    StateVector() = default;
    /// |0...0> on n qubits. Throws std::length_error if n exceeds max_qubits.
    explicit StateVector(size_t num_qubits, size_t max_qubits = kDefaultMaxQubits);
    /// Wraps explicit amplitudes; the length must be a power of two.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes, size_t max_qubits = kDefaultMaxQubits);
    /// Tensor product of single-qubit vectors, factor j on qubit j.
    static StateVector product(std::span<const std::array<Complex, 2>> factors,
                               size_t max_qubits = kDefaultMaxQubits);

    size_t num_qubits() const { return num_qubits_; }
    size_t size() const { return amps_.size(); }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    Complex operator[](size_t index) const { return amps_[index]; }
    Complex& operator[](size_t index) { return amps_[index]; }

    double norm() const;
    void normalize();

    void apply_gate(CliffordGate gate, std::span<const size_t> targets);
    void apply_gate(CliffordGate gate, std::initializer_list<size_t> targets);
    /// Z(theta) = exp(-i theta Z / 2).
    void apply_rz(size_t q, double theta);
    /// The pi/8 gate exp(-i pi Z / 8).
    void apply_t(size_t q) { apply_rz(q, 3.14159265358979323846 / 4); }
    void apply_matrix(size_t q, const Matrix2& m);
    /// Applies the Pauli product including its i^phase prefactor.
    void apply_pauli(const PauliString& p);

    /// <psi| A |psi> for hermitian A (not divided by the norm).
    double expectation(const PauliString& observable) const;

    /// Replaces the state by P_outcome |psi> / ||P_outcome |psi>|| where
    /// P_(+-) = (I +- A)/2, and returns the Born probability
    /// ||P |psi>||^2 / ||psi||^2. Throws std::domain_error when that
    /// probability is below `zero_tolerance`.
    double project(const PauliString& observable, int outcome, double zero_tolerance = 1e-12);

   private:
    void check_qubit(size_t q) const;

    size_t num_qubits_ = 0;
    std::vector<Complex> amps_;
};

/// Born probability of outcome +1 for the hermitian observable.
double probability_plus(const StateVector& s, const PauliString& observable);

/// Samples a projective measurement; returns (outcome, post-measurement state).
std::pair<int, StateVector> measure(const StateVector& s, const PauliString& observable, Rng& rng);

/// Exact sum over conj(bra_i) * ket_i.
Complex overlap(const StateVector& bra, const StateVector& ket);

/// |<a|b>|^2 / (<a|a><b|b>).
double fidelity(const StateVector& a, const StateVector& b);

StateVector apply_gate(StateVector s, CliffordGate gate, std::span<const size_t> targets);

/// Dense vector of a stabilizer state: the projectors (I + S_i)/2 applied
/// to the first computational basis state they do not annihilate, then
/// normalized. For k < n this picks one state of the code space.
StateVector densify(const Tableau& t);

/// Matrix of a single-qubit Clifford gate (rejects CNOT and CZ).
Matrix2 gate_matrix(CliffordGate gate);

}  // namespace stabkit

#endif  // STABKIT_STATEVEC_H
