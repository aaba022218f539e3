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

#ifndef STABKIT_TABLEAU_H
#define STABKIT_TABLEAU_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stabkit/pauli.h"
#include "stabkit/rng.h"

namespace stabkit {

/// A stabilizer group given by k <= n independent, pairwise commuting,
/// hermitian generators on n qubits. The stabilized subspace has dimension
/// 2^(n-k); k == n describes a single state.
class Tableau {
   public:
    Tableau() = default;

    /// Validates and wraps a generator list.
    ///
    /// Throws std::invalid_argument when generators differ in size, are not
    /// hermitian, anticommute, or are dependent over GF(2) (including sets
    /// whose group would contain -I).
    static Tableau from_generators(size_t num_qubits, std::vector<PauliString> generators);
    static Tableau from_generators(std::vector<PauliString> generators);
    /// Convenience: parses each entry with PauliString::from_text.
    static Tableau from_text(std::initializer_list<std::string_view> generators);

    /// <Z_0, ..., Z_{n-1}>, the state |0...0>.
    static Tableau zero_state(size_t num_qubits);
    /// The trivial group (k = 0): the full 2^n dimensional space.
    static Tableau full_space(size_t num_qubits);

    size_t num_qubits() const { return num_qubits_; }
    size_t num_generators() const { return generators_.size(); }
    const std::vector<PauliString>& generators() const { return generators_; }
    const PauliString& generator(size_t i) const { return generators_[i]; }

    /// log2 of the stabilized subspace dimension, n - k.
    size_t subspace_dimension_log2() const { return num_qubits_ - generators_.size(); }

    /// One generator per line, in str() form.
    std::string str() const;

    bool operator==(const Tableau& other) const = default;

   private:
    Tableau(size_t num_qubits, std::vector<PauliString> generators)
        : num_qubits_(num_qubits), generators_(std::move(generators)) {}

    friend Tableau apply_clifford(const Tableau&, CliffordGate, std::span<const size_t>);
    friend struct TableauAccess;

    size_t num_qubits_ = 0;
    std::vector<PauliString> generators_;
};

/// Conjugates every generator by the gate.
Tableau apply_clifford(const Tableau& t, CliffordGate gate, std::span<const size_t> targets);
Tableau apply_clifford(const Tableau& t, CliffordGate gate, std::initializer_list<size_t> targets);

/// Which of the three measurement situations applied.
enum class MeasurementCase {
    kInGroup,       ///< +A or -A already stabilizes the state; outcome fixed.
    kCommuting,     ///< A commutes with the group but is not in it; A is appended.
    kAnticommuting  ///< Some generator anticommutes; it is replaced by A.
};

struct MeasurementResult {
    int outcome = +1;  ///< +1 or -1.
    MeasurementCase kind = MeasurementCase::kInGroup;
    Tableau state;

    bool deterministic() const { return kind == MeasurementCase::kInGroup; }
};

/// Projective measurement of the hermitian observable `observable`.
///
/// Random outcomes are fair coins drawn from `rng`. In the anticommuting
/// case the lowest-index anticommuting generator is the one replaced.
/// Throws std::invalid_argument for a non-hermitian observable or size mismatch.
MeasurementResult measure_pauli(const Tableau& t, const PauliString& observable, Rng& rng);

/// As measure_pauli, but with the outcome chosen by the caller. Throws
/// std::domain_error when the requested outcome has probability zero.
MeasurementResult measure_pauli_forced(const Tableau& t, const PauliString& observable, int outcome);

/// The deterministic outcome (+1/-1) of measuring `observable`, or nullopt
/// when the outcome is a fair coin.
std::optional<int> peek_pauli(const Tableau& t, const PauliString& observable);

/// Reduced row-echelon generator set of the same group. Columns are ordered
/// x_0..x_{n-1} then z_0..z_{n-1}; rows are sorted by pivot and signs are
/// carried through the row products, so two tableaus describe the same
/// group exactly when their canonical forms are equal.
Tableau canonicalize(const Tableau& t);

/// True iff both tableaus generate the same signed group.
bool equals_state(const Tableau& a, const Tableau& b);

/// Rank over GF(2) of the stacked (x|z) rows of `rows`.
size_t gf2_rank(std::span<const PauliString> rows);

}  // namespace stabkit

#endif  // STABKIT_TABLEAU_H
