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

#ifndef STABKIT_LOCAL_CLIFFORD_H
#define STABKIT_LOCAL_CLIFFORD_H

#include <string>
#include <utility>
#include <vector>

#include "stabkit/pauli.h"
#include "stabkit/statevec.h"

namespace stabkit {

/// A signed single-qubit Pauli: sign * {X, Y, Z}.
struct SignedPauli {
    char pauli = 'X';
    int sign = +1;

    bool operator==(const SignedPauli&) const = default;
};

/// One of the 24 single-qubit Clifford operations modulo global phase,
/// stored by its conjugation action U X U^dagger and U Z U^dagger.
class LocalClifford {
   public:
    /// The identity.
    LocalClifford() = default;

    /// Builds the element with the given images. Throws std::invalid_argument
    /// if the images do not anticommute (not a valid Clifford).
    static LocalClifford from_images(SignedPauli x_image, SignedPauli z_image);
    /// A single-qubit gate from the Clifford gate set.
    static LocalClifford from_gate(CliffordGate gate);
    /// Gate sequence applied left to right.
    static LocalClifford from_word(const std::vector<CliffordGate>& word);
    /// The Pauli operator 'I', 'X', 'Y' or 'Z' viewed as a Clifford.
    static LocalClifford pauli(char p);
    /// exp(i pi/4 Y) = (I + iY)/sqrt2 up to phase: X -> Z, Z -> -X.
    static LocalClifford sqrt_plus_iy();
    /// exp(-i pi/4 Y): X -> -Z, Z -> X.
    static LocalClifford sqrt_minus_iy();

    /// Every element, in breadth-first order over words in {H, S}.
    static const std::vector<LocalClifford>& all();

    SignedPauli x_image() const { return x_image_; }
    SignedPauli z_image() const { return z_image_; }

    /// U p U^dagger for p in {X, Y, Z}.
    SignedPauli conjugate(char p) const;
    /// U^dagger p U.
    SignedPauli conjugate_inverse(char p) const;

    /// Product in operator order: (a * b) applies b first.
    LocalClifford operator*(const LocalClifford& rhs) const;
    LocalClifford inverse() const;

    bool is_identity() const { return *this == LocalClifford(); }
    /// True for I, X, Y, Z.
    bool is_pauli() const;
    /// The Pauli this element equals, if is_pauli().
    char as_pauli() const;

    /// A shortest gate sequence over {H, S} (applied left to right) that
    /// realizes this element up to global phase.
    const std::vector<CliffordGate>& word() const;
    /// Unitary matrix of word().
    Matrix2 matrix() const;
    /// Word spelled with spaces, or "I" for the identity.
    std::string str() const;

    /// Conjugates qubit q of `p` in place.
    void apply_to(PauliString& p, size_t q) const;

    bool operator==(const LocalClifford&) const = default;

   private:
    LocalClifford(SignedPauli x, SignedPauli z) : x_image_(x), z_image_(z) {}
    size_t table_index() const;

    SignedPauli x_image_{'X', +1};
    SignedPauli z_image_{'Z', +1};
};

}  // namespace stabkit

#endif  // STABKIT_LOCAL_CLIFFORD_H
