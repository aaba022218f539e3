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

#ifndef STABKIT_PAULI_H
#define STABKIT_PAULI_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabkit {

/// Clifford gates understood by the symplectic simulator. Non-Clifford
/// rotations live only in the dense simulator (see statevec.h).
enum class CliffordGate : uint8_t { I, X, Y, Z, H, S, SDG, CNOT, CZ };

/// Number of qubit targets taken by `gate` (1 or 2).
size_t gate_arity(CliffordGate gate);
std::string_view gate_name(CliffordGate gate);
/// Parses a gate mnemonic ("H", "SDG", "CNOT", ...). Throws std::invalid_argument.
CliffordGate parse_gate(std::string_view name);

/// An n-qubit Pauli product i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// Each factor is encoded by a pair of bits (x_j, z_j):
/// (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y. Because Y itself is hermitian, the
/// string is hermitian exactly when `phase` is even. Qubit j lives in bit
/// (j % 64) of word (j / 64).
class PauliString {
   public:
    PauliString() = default;
    /// The identity on n qubits.
    explicit PauliString(size_t num_qubits);

    /// Parses text such as "XZ", "-YY", "+iXIZ", "-iZ". Character j is qubit j.
    static PauliString from_text(std::string_view text);
    /// A single-qubit Pauli ('I', 'X', 'Y' or 'Z') on qubit q of n.
    static PauliString single(size_t num_qubits, size_t q, char pauli);

    size_t num_qubits() const { return num_qubits_; }
    size_t num_words() const { return xs_.size(); }
    /// Exponent of the i^phase prefactor, in [0, 4).
    uint8_t phase() const { return phase_; }
    void set_phase(unsigned p) { phase_ = static_cast<uint8_t>(p & 3u); }
    /// Multiplies the prefactor by -1.
    void negate() { phase_ = static_cast<uint8_t>((phase_ + 2) & 3u); }

    bool x(size_t q) const;
    bool z(size_t q) const;
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);
    /// Factor on qubit q as a character in "IXZY" order of (x, z) bits.
    char pauli_at(size_t q) const;
    void set_pauli(size_t q, char pauli);

    std::span<const uint64_t> x_words() const { return xs_; }
    std::span<const uint64_t> z_words() const { return zs_; }
    std::span<uint64_t> x_words() { return xs_; }
    std::span<uint64_t> z_words() { return zs_; }

    bool is_hermitian() const { return (phase_ & 1u) == 0; }
    bool is_identity_up_to_phase() const;
    /// Number of non-identity factors.
    size_t weight() const;
    /// +1 or -1 for hermitian strings. Throws for non-hermitian strings.
    int sign() const;

    /// Text form: sign prefix ("+", "-", "+i", "-i") followed by n factors.
    std::string str() const;

    /// In-place right multiplication: *this = *this * rhs.
    PauliString& operator*=(const PauliString& rhs);

    bool operator==(const PauliString& other) const = default;

   private:
    size_t num_qubits_ = 0;
    uint8_t phase_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

/// Group product a * b with exact quarter-phase.
PauliString multiply(const PauliString& a, const PauliString& b);
PauliString operator*(const PauliString& a, const PauliString& b);

/// True iff the symplectic inner product of a and b vanishes.
bool commutes(const PauliString& a, const PauliString& b);

/// Returns U p U^dagger for the Clifford gate U acting on `targets`.
///
/// Throws std::out_of_range for a target outside the register and
/// std::invalid_argument for a wrong target count or repeated targets.
PauliString conjugate_clifford(const PauliString& p, CliffordGate gate, std::span<const size_t> targets);
PauliString conjugate_clifford(const PauliString& p, CliffordGate gate, std::initializer_list<size_t> targets);

/// In-place variant of conjugate_clifford, used on hot paths.
void conjugate_clifford_inplace(PauliString& p, CliffordGate gate, std::span<const size_t> targets);

/// Validates target indices for `gate` on an n-qubit register.
void check_targets(size_t num_qubits, CliffordGate gate, std::span<const size_t> targets);

}  // namespace stabkit

#endif  // STABKIT_PAULI_H
