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

#ifndef STABKIT_CIRCUIT_H
#define STABKIT_CIRCUIT_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stabkit/pauli.h"
#include "stabkit/rng.h"
#include "stabkit/tableau.h"

namespace stabkit {

// Text circuits, one instruction per line:
//
//   H q | S q | SDG q | X q | Y q | Z q | CNOT c t | CZ a b | MEASURE {X,Y,Z} q
//
// '#' starts a comment. Blank lines are ignored. Qubits are 0-indexed.

struct Instruction {
    enum class Kind { kGate, kMeasure };

    Kind kind = Kind::kGate;
    CliffordGate gate = CliffordGate::I;
    std::vector<size_t> targets;
    char basis = 'Z';  ///< Only for kMeasure.
    size_t line = 0;   ///< 1-based source line.
};

class CircuitParseError : public std::runtime_error {
   public:
    CircuitParseError(size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    size_t line() const { return line_; }

   private:
    size_t line_;
};

struct Circuit {
    std::vector<Instruction> instructions;

    /// One more than the largest referenced qubit (0 for an empty circuit).
    size_t min_qubits() const;
};

Circuit parse_circuit(std::string_view text);

struct CircuitRun {
    std::vector<int> outcomes;  ///< One +1/-1 per MEASURE, in program order.
    Tableau final_state;
};

/// Runs the circuit from |0...0> on `num_qubits` qubits.
CircuitRun run_circuit(const Circuit& circuit, size_t num_qubits, Rng& rng);

}  // namespace stabkit

#endif  // STABKIT_CIRCUIT_H
