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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.h"
#include "stabkit/graphstate.h"

namespace stabkit {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

PauliString P(std::string_view s) { return PauliString::from_text(s); }

TEST(StateVector, HadamardMakesPlus) {
    StateVector s(1);
    s.apply_gate(CliffordGate::H, {0});
    EXPECT_NEAR(std::abs(s[0] - kInvSqrt2), 0, 1e-15);
    EXPECT_NEAR(std::abs(s[1] - kInvSqrt2), 0, 1e-15);
}

TEST(StateVector, CzOnPlusPlusIsEdgeGraphState) {
    StateVector s(2);
    s.apply_gate(CliffordGate::H, {0});
    s.apply_gate(CliffordGate::H, {1});
    s.apply_gate(CliffordGate::CZ, {0, 1});
    EXPECT_NEAR(s.expectation(P("XZ")), 1.0, 1e-12);
    EXPECT_NEAR(s.expectation(P("ZX")), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(s[3] + 0.5), 0, 1e-15);
}

TEST(StateVector, RotationsAndUnitarity) {
    Rng rng(3);
    StateVector s(3);
    for (int i = 0; i < 40; ++i) {
        s.apply_gate(CliffordGate::H, {rng() % 3});
        s.apply_t(rng() % 3);
        s.apply_gate(CliffordGate::CNOT, {0, 1 + rng() % 2});
    }
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    const StateVector before = s;
    s.apply_rz(1, 0.0);
    EXPECT_NEAR(fidelity(s, before), 1.0, 1e-15);
    // T^2 = S up to a global phase.
    StateVector a = before, b = before;
    a.apply_t(2);
    a.apply_t(2);
    b.apply_gate(CliffordGate::S, {2});
    EXPECT_NEAR(fidelity(a, b), 1.0, 1e-12);
}

TEST(StateVector, Measurement) {
    StateVector plus(1);
    plus.apply_gate(CliffordGate::H, {0});
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
        auto [o, post] = measure(plus, P("X"), rng);
        EXPECT_EQ(o, +1);
        EXPECT_NEAR(fidelity(post, plus), 1.0, 1e-12);
    }
    StateVector bell(2);
    bell.apply_gate(CliffordGate::H, {0});
    bell.apply_gate(CliffordGate::CNOT, {0, 1});
    EXPECT_NEAR(probability_plus(bell, P("ZI")), 0.5, 1e-15);
    StateVector minus = plus;
    EXPECT_THROW(minus.project(P("X"), -1), std::domain_error);
}

TEST(StateVector, MiddleZOnPathSeparates) {
    StateVector s = build_state(Graph::path(3));
    s.project(P("IZI"), +1);
    // Product of qubit 0 and qubit 2: <X0> = <X2> = 1.
    EXPECT_NEAR(s.expectation(P("XII")), 1.0, 1e-12);
    EXPECT_NEAR(s.expectation(P("IIX")), 1.0, 1e-12);
}

TEST(StateVector, Overlaps) {
    StateVector cat(3);
    cat.apply_gate(CliffordGate::H, {0});
    cat.apply_gate(CliffordGate::CNOT, {0, 1});
    cat.apply_gate(CliffordGate::CNOT, {1, 2});
    EXPECT_NEAR(std::abs(overlap(cat, cat) - 1.0), 0, 1e-15);
    EXPECT_NEAR(std::abs(overlap(StateVector(3), cat) - kInvSqrt2), 0, 1e-15);
    EXPECT_THROW(overlap(StateVector(2), cat), std::invalid_argument);
}

TEST(StateVector, PauliMatchesDenseMatrix) {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        const size_t n = 1 + rng() % 4;
        const PauliString p = testing::random_pauli(n, rng);
        const auto m = testing::pauli_matrix(p);
        const size_t dim = size_t{1} << n;
        std::vector<Complex> amps(dim);
        for (auto& a : amps) {
            a = Complex(uniform01(rng) - 0.5, uniform01(rng) - 0.5);
        }
        StateVector s = StateVector::from_amplitudes(amps);
        s.apply_pauli(p);
        for (size_t i = 0; i < dim; ++i) {
            Complex want = 0;
            for (size_t j = 0; j < dim; ++j) {
                want += m[i * dim + j] * amps[j];
            }
            EXPECT_NEAR(std::abs(s[i] - want), 0, 1e-14);
        }
    }
}

TEST(StateVector, Cap) {
    EXPECT_THROW(StateVector(23), std::length_error);
    EXPECT_NO_THROW(StateVector(4, 4));
    EXPECT_THROW(StateVector(5, 4), std::length_error);
}

TEST(StateVector, DensifyTableau) {
    const StateVector v = densify(Tableau::from_text({"XX", "ZZ"}));
    EXPECT_NEAR(std::abs(v[0] - kInvSqrt2), 0, 1e-15);
    EXPECT_NEAR(std::abs(v[3] - kInvSqrt2), 0, 1e-15);
    const StateVector w = densify(Tableau::from_text({"-XX", "-ZZ"}));
    EXPECT_NEAR(w.expectation(P("YY")), -1.0, 1e-12);
}

}  // namespace
}  // namespace stabkit
