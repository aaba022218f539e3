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

#include "stabkit/circuit.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace stabkit {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) {
        tokens.push_back(tok);
    }
    return tokens;
}

size_t parse_qubit(const std::string& tok, size_t line) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw CircuitParseError(line, "expected a qubit index, got '" + tok + "'");
    }
    return value;
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    return s;
}

}  // namespace

size_t Circuit::min_qubits() const {
    size_t n = 0;
    for (const auto& ins : instructions) {
        for (size_t t : ins.targets) {
            n = std::max(n, t + 1);
        }
    }
    return n;
}

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    size_t line_no = 0;
    while (!text.empty()) {
        size_t end = text.find('\n');
        std::string_view line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        Instruction ins;
        ins.line = line_no;
        const std::string op = upper(tokens[0]);
        if (op == "MEASURE" || op == "M") {
            if (tokens.size() != 3) {
                throw CircuitParseError(line_no, "MEASURE takes a basis and one qubit");
            }
            const std::string basis = upper(tokens[1]);
            if (basis != "X" && basis != "Y" && basis != "Z") {
                throw CircuitParseError(line_no, "measurement basis must be X, Y or Z, got '" + tokens[1] + "'");
            }
            ins.kind = Instruction::Kind::kMeasure;
            ins.basis = basis[0];
            ins.targets.push_back(parse_qubit(tokens[2], line_no));
        } else {
            try {
                ins.gate = parse_gate(op);
            } catch (const std::invalid_argument&) {
                throw CircuitParseError(line_no, "unknown instruction '" + tokens[0] + "'");
            }
            if (tokens.size() != gate_arity(ins.gate) + 1) {
                throw CircuitParseError(line_no, op + " takes " + std::to_string(gate_arity(ins.gate)) +
                                                     " qubit argument(s)");
            }
            for (size_t k = 1; k < tokens.size(); ++k) {
                ins.targets.push_back(parse_qubit(tokens[k], line_no));
            }
            if (ins.targets.size() == 2 && ins.targets[0] == ins.targets[1]) {
                throw CircuitParseError(line_no, op + " needs two distinct qubits");
            }
        }
        circuit.instructions.push_back(std::move(ins));
    }
    return circuit;
}

CircuitRun run_circuit(const Circuit& circuit, size_t num_qubits, Rng& rng) {
    if (circuit.min_qubits() > num_qubits) {
        throw std::invalid_argument("circuit touches qubit " + std::to_string(circuit.min_qubits() - 1) +
                                    " but only " + std::to_string(num_qubits) + " are allocated");
    }
    CircuitRun run{{}, Tableau::zero_state(num_qubits)};
    for (const auto& ins : circuit.instructions) {
        if (ins.kind == Instruction::Kind::kGate) {
            run.final_state = apply_clifford(run.final_state, ins.gate, ins.targets);
        } else {
            auto observable = PauliString::single(num_qubits, ins.targets[0], ins.basis);
            MeasurementResult m = measure_pauli(run.final_state, observable, rng);
            run.outcomes.push_back(m.outcome);
            run.final_state = std::move(m.state);
        }
    }
    return run;
}

}  // namespace stabkit
