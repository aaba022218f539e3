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

#ifndef STABKIT_TESTS_ORACLES_H
#define STABKIT_TESTS_ORACLES_H

// Test-only generators and brute-force reference computations. Nothing
// here calls into the code path it is used to check.

#include <complex>
#include <vector>

#include "stabkit/circuit.h"
#include "stabkit/graphstate.h"
#include "stabkit/pauli.h"
#include "stabkit/rng.h"
#include "stabkit/spinmodel.h"
#include "stabkit/statevec.h"

namespace stabkit::testing {

/// Uniform random Pauli string with a uniform quarter-phase.
PauliString random_pauli(size_t n, Rng& rng);
/// Uniform random hermitian Pauli string (phase 0 or 2) that is not +-I.
PauliString random_hermitian_pauli(size_t n, Rng& rng);

/// Random connected graph on n vertices: a random spanning tree plus each
/// remaining pair with probability `extra_edge_probability`.
Graph random_connected_graph(size_t n, double extra_edge_probability, Rng& rng);

/// Random circuit over the Clifford gate set with single-qubit Pauli
/// measurements mixed in (about one instruction in five).
Circuit random_circuit(size_t n, size_t depth, Rng& rng);

/// Dense matrix of a Pauli string on n <= 10 qubits (row-major 2^n x 2^n).
std::vector<std::complex<double>> pauli_matrix(const PauliString& p);

/// Z(beta) of an XOR spin model by direct enumeration, written independently
/// of spinmodel.cc (Gray-code walk over configurations).
std::complex<double> brute_force_partition(const SpinModel& m);

/// Random model with up to `max_terms` terms of arity 1..max_arity.
SpinModel random_spin_model(size_t max_sites, size_t max_terms, size_t max_arity, bool complex_beta, Rng& rng);

}  // namespace stabkit::testing

#endif  // STABKIT_TESTS_ORACLES_H
