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

#include "stabkit/tableau.h"

#include <algorithm>
#include <stdexcept>

namespace stabkit {

struct TableauAccess {
    static Tableau make(size_t n, std::vector<PauliString> gens) { return Tableau(n, std::move(gens)); }
    static std::vector<PauliString>& gens(Tableau& t) { return t.generators_; }
};

namespace {

// Bit c of the concatenated (x|z) row: x_0..x_{n-1}, z_0..z_{n-1}.
bool column_bit(const PauliString& p, size_t c) {
    size_t n = p.num_qubits();
    return c < n ? p.x(c) : p.z(c - n);
}

// Row-reduces `rows` in place to reduced echelon form and returns the pivot
// column of each surviving row. Rows that become zero are dropped.
std::vector<size_t> row_reduce(std::vector<PauliString>& rows, size_t num_qubits) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < 2 * num_qubits && r < rows.size(); ++c) {
        size_t found = r;
        while (found < rows.size() && !column_bit(rows[found], c)) {
            ++found;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[found]);
        for (size_t j = 0; j < rows.size(); ++j) {
            if (j != r && column_bit(rows[j], c)) {
                rows[j] *= rows[r];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

void require_observable(const Tableau& t, const PauliString& a) {
    if (a.num_qubits() != t.num_qubits()) {
        throw std::invalid_argument("observable acts on " + std::to_string(a.num_qubits()) +
                                    " qubits, state has " + std::to_string(t.num_qubits()));
    }
    if (!a.is_hermitian()) {
        throw std::invalid_argument("observable " + a.str() + " is not hermitian");
    }
}

// Sign s such that s*a is in the group generated by `t`, if any. Assumes a
// commutes with every generator.
std::optional<int> sign_in_group(const Tableau& t, const PauliString& a) {
    std::vector<PauliString> rows = t.generators();
    std::vector<size_t> pivots = row_reduce(rows, t.num_qubits());
    PauliString residual = a;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (column_bit(residual, pivots[r])) {
            residual *= rows[r];
        }
    }
    if (!residual.is_identity_up_to_phase()) {
        return std::nullopt;
    }
    // residual = a * g with g in the group, so a = +-g.
    return residual.sign();
}

MeasurementResult measure_impl(const Tableau& t, const PauliString& a, std::optional<int> forced, Rng* rng) {
    require_observable(t, a);
    if (forced && *forced != 1 && *forced != -1) {
        throw std::invalid_argument("measurement outcome must be +1 or -1");
    }
    const auto& gens = t.generators();
    std::optional<size_t> first_anti;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (!commutes(gens[i], a)) {
            first_anti = i;
            break;
        }
    }

    auto draw = [&]() -> int {
        if (forced) {
            return *forced;
        }
        return coin(*rng) ? -1 : +1;
    };

    if (!first_anti) {
        if (std::optional<int> s = sign_in_group(t, a)) {
            if (forced && *forced != *s) {
                throw std::domain_error("outcome " + std::to_string(*forced) + " of " + a.str() +
                                        " has probability zero");
            }
            return {*s, MeasurementCase::kInGroup, t};
        }
        int outcome = draw();
        std::vector<PauliString> next = gens;
        PauliString g = a;
        if (outcome < 0) {
            g.negate();
        }
        next.push_back(std::move(g));
        return {outcome, MeasurementCase::kCommuting, TableauAccess::make(t.num_qubits(), std::move(next))};
    }

    int outcome = draw();
    std::vector<PauliString> next = gens;
    const size_t j = *first_anti;
    for (size_t i = j + 1; i < next.size(); ++i) {
        if (!commutes(next[i], a)) {
            next[i] *= next[j];
        }
    }
    next[j] = a;
    if (outcome < 0) {
        next[j].negate();
    }
    return {outcome, MeasurementCase::kAnticommuting, TableauAccess::make(t.num_qubits(), std::move(next))};
}

}  // namespace

Tableau Tableau::from_generators(size_t num_qubits, std::vector<PauliString> generators) {
    for (const auto& g : generators) {
        if (g.num_qubits() != num_qubits) {
            throw std::invalid_argument("generator " + g.str() + " does not act on " + std::to_string(num_qubits) +
                                        " qubits");
        }
        if (!g.is_hermitian()) {
            throw std::invalid_argument("generator " + g.str() + " is not hermitian");
        }
    }
    for (size_t i = 0; i < generators.size(); ++i) {
        for (size_t j = i + 1; j < generators.size(); ++j) {
            if (!commutes(generators[i], generators[j])) {
                throw std::invalid_argument("generators " + generators[i].str() + " and " + generators[j].str() +
                                            " anticommute");
            }
        }
    }
    // With commuting hermitian generators, -I can only arise from a subset
    // whose (x|z) bits cancel, so independence also excludes -I.
    if (gf2_rank(generators) != generators.size()) {
        throw std::invalid_argument("generators are not independent (" + std::to_string(gf2_rank(generators)) +
                                    " independent of " + std::to_string(generators.size()) + ")");
    }
    return Tableau(num_qubits, std::move(generators));
}

Tableau Tableau::from_generators(std::vector<PauliString> generators) {
    if (generators.empty()) {
        throw std::invalid_argument("cannot infer the qubit count from an empty generator list");
    }
    size_t n = generators.front().num_qubits();
    return from_generators(n, std::move(generators));
}

Tableau Tableau::from_text(std::initializer_list<std::string_view> generators) {
    std::vector<PauliString> gens;
    for (auto g : generators) {
        gens.push_back(PauliString::from_text(g));
    }
    return from_generators(std::move(gens));
}

Tableau Tableau::zero_state(size_t num_qubits) {
    std::vector<PauliString> gens;
    for (size_t q = 0; q < num_qubits; ++q) {
        gens.push_back(PauliString::single(num_qubits, q, 'Z'));
    }
    return Tableau(num_qubits, std::move(gens));
}

Tableau Tableau::full_space(size_t num_qubits) { return Tableau(num_qubits, {}); }

std::string Tableau::str() const {
    std::string out;
    for (const auto& g : generators_) {
        out += g.str();
        out += '\n';
    }
    return out;
}

Tableau apply_clifford(const Tableau& t, CliffordGate gate, std::span<const size_t> targets) {
    check_targets(t.num_qubits(), gate, targets);
    Tableau result = t;
    for (auto& g : result.generators_) {
        conjugate_clifford_inplace(g, gate, targets);
    }
    return result;
}

Tableau apply_clifford(const Tableau& t, CliffordGate gate, std::initializer_list<size_t> targets) {
    return apply_clifford(t, gate, std::span<const size_t>(targets.begin(), targets.size()));
}

MeasurementResult measure_pauli(const Tableau& t, const PauliString& observable, Rng& rng) {
    return measure_impl(t, observable, std::nullopt, &rng);
}

MeasurementResult measure_pauli_forced(const Tableau& t, const PauliString& observable, int outcome) {
    return measure_impl(t, observable, outcome, nullptr);
}

std::optional<int> peek_pauli(const Tableau& t, const PauliString& observable) {
    require_observable(t, observable);
    for (const auto& g : t.generators()) {
        if (!commutes(g, observable)) {
            return std::nullopt;
        }
    }
    return sign_in_group(t, observable);
}

Tableau canonicalize(const Tableau& t) {
    std::vector<PauliString> rows = t.generators();
    row_reduce(rows, t.num_qubits());
    return TableauAccess::make(t.num_qubits(), std::move(rows));
}

bool equals_state(const Tableau& a, const Tableau& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("cannot compare tableaus on different qubit counts");
    }
    return canonicalize(a) == canonicalize(b);
}

size_t gf2_rank(std::span<const PauliString> rows) {
    if (rows.empty()) {
        return 0;
    }
    const size_t n = rows.front().num_qubits();
    const size_t words = rows.front().num_words();
    // Plain bit rows: no phase bookkeeping is needed for the rank.
    std::vector<std::vector<uint64_t>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<uint64_t> bits(r.x_words().begin(), r.x_words().end());
        bits.insert(bits.end(), r.z_words().begin(), r.z_words().end());
        m.push_back(std::move(bits));
    }
    auto bit = [&](const std::vector<uint64_t>& row, size_t c) {
        size_t base = c < n ? 0 : words;
        size_t q = c < n ? c : c - n;
        return (row[base + q / 64] >> (q % 64)) & 1u;
    };
    size_t rank = 0;
    for (size_t c = 0; c < 2 * n && rank < m.size(); ++c) {
        size_t found = rank;
        while (found < m.size() && !bit(m[found], c)) {
            ++found;
        }
        if (found == m.size()) {
            continue;
        }
        std::swap(m[rank], m[found]);
        for (size_t j = rank + 1; j < m.size(); ++j) {
            if (bit(m[j], c)) {
                for (size_t w = 0; w < m[j].size(); ++w) {
                    m[j][w] ^= m[rank][w];
                }
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace stabkit
