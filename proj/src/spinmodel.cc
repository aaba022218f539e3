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

#include "stabkit/spinmodel.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace stabkit {

void SpinModel::validate() const {
    for (size_t k = 0; k < terms.size(); ++k) {
        const auto& t = terms[k];
        if (t.sites.empty()) {
            throw std::invalid_argument("term " + std::to_string(k) + " has no sites");
        }
        std::vector<size_t> sorted = t.sites;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("term " + std::to_string(k) + " repeats a site");
        }
        if (sorted.back() >= num_sites) {
            throw std::invalid_argument("term " + std::to_string(k) + " references site " +
                                        std::to_string(sorted.back()) + " of " + std::to_string(num_sites));
        }
    }
}

std::vector<Complex> SpinModel::site_fields() const {
    std::vector<Complex> fields(num_sites, Complex{0, 0});
    for (const auto& t : terms) {
        if (t.sites.size() == 1) {
            fields[t.sites[0]] += t.coupling;
        }
    }
    return fields;
}

std::vector<size_t> SpinModel::interaction_terms() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < terms.size(); ++k) {
        if (terms[k].sites.size() >= 2) {
            out.push_back(k);
        }
    }
    return out;
}

Complex partition_direct(const SpinModel& m, size_t max_sites) {
    m.validate();
    if (m.num_sites > max_sites || m.num_sites > 62) {
        throw std::length_error("direct partition sum over " + std::to_string(m.num_sites) +
                                " sites exceeds the cap of " + std::to_string(max_sites));
    }
    std::vector<uint64_t> masks;
    for (const auto& t : m.terms) {
        uint64_t mask = 0;
        for (size_t s : t.sites) {
            mask |= uint64_t{1} << s;
        }
        masks.push_back(mask);
    }
    Complex z{0, 0};
    const uint64_t configs = uint64_t{1} << m.num_sites;
    for (uint64_t s = 0; s < configs; ++s) {
        Complex energy{0, 0};
        for (size_t k = 0; k < masks.size(); ++k) {
            if (std::popcount(s & masks[k]) & 1) {
                energy += m.terms[k].coupling;
            }
        }
        z += std::exp(-m.beta * energy);
    }
    return z;
}

MediatedGraph mediated_graph(const SpinModel& m) {
    m.validate();
    MediatedGraph mg;
    mg.num_sites = m.num_sites;
    mg.term_index = m.interaction_terms();
    mg.graph = Graph(m.num_sites + mg.term_index.size());
    for (size_t k = 0; k < mg.term_index.size(); ++k) {
        for (size_t s : m.terms[mg.term_index[k]].sites) {
            mg.graph.add_edge(s, m.num_sites + k);
        }
    }
    return mg;
}

Complex mediated_overlap(const SpinModel& m, size_t max_qubits) {
    const MediatedGraph mg = mediated_graph(m);
    const size_t n = mg.graph.num_vertices();
    if (n > max_qubits) {
        throw std::length_error("mediated graph has " + std::to_string(n) + " vertices, above the cap of " +
                                std::to_string(max_qubits) + " qubits");
    }
    StateVector ket = build_state(mg.graph);
    for (size_t k = 0; k < mg.num_term_vertices(); ++k) {
        ket.apply_gate(CliffordGate::H, {m.num_sites + k});
    }
    // overlap() conjugates the bra, so store conj(w) to contract with w.
    std::vector<std::array<Complex, 2>> bra_factors;
    bra_factors.reserve(n);
    for (Complex field : m.site_fields()) {
        bra_factors.push_back({Complex{1, 0}, std::conj(std::exp(-m.beta * field))});
    }
    for (size_t k : mg.term_index) {
        bra_factors.push_back({Complex{1, 0}, std::conj(std::exp(-m.beta * m.terms[k].coupling))});
    }
    StateVector bra = StateVector::product(bra_factors, max_qubits);
    return overlap(bra, ket);
}

Complex partition_via_overlap(const SpinModel& m, size_t max_qubits) {
    return std::pow(2.0, 0.5 * static_cast<double>(m.num_sites)) * mediated_overlap(m, max_qubits);
}

DualModel dualize(const SpinModel& m) {
    m.validate();
    if (m.beta == Complex{0, 0}) {
        throw std::invalid_argument("cannot dualize at beta = 0");
    }
    std::vector<bool> has_field(m.num_sites, false);
    for (const auto& t : m.terms) {
        if (t.sites.size() == 1) {
            has_field[t.sites[0]] = true;
        }
    }
    for (size_t s = 0; s < m.num_sites; ++s) {
        if (!has_field[s]) {
            throw std::invalid_argument("site " + std::to_string(s) +
                                        " carries no field term; every site needs one to dualize");
        }
    }

    // Rotates the bra <0| + w<1| by H. Returns (1 + w, dual coupling).
    auto rotate = [&](Complex coupling, const std::string& what) -> std::pair<Complex, Complex> {
        const Complex w = std::exp(-m.beta * coupling);
        const Complex one_plus = 1.0 + w;
        const Complex dual_w = (1.0 - w) / one_plus;
        if (std::abs(one_plus) < 1e-300 || std::abs(dual_w) < 1e-300 || !std::isfinite(std::abs(dual_w))) {
            throw std::invalid_argument(what + ": tanh(beta J / 2) is zero or infinite, so the dual coupling "
                                               "-log(tanh(beta J / 2)) / beta is undefined");
        }
        return {one_plus, -std::log(dual_w) / m.beta};
    };

    const std::vector<size_t> interactions = m.interaction_terms();
    const std::vector<Complex> fields = m.site_fields();

    DualModel out;
    out.model.num_sites = interactions.size();
    out.model.beta = m.beta;
    Complex prefactor = std::pow(2.0, -static_cast<double>(interactions.size()));

    for (size_t k = 0; k < interactions.size(); ++k) {
        auto [one_plus, dual_j] = rotate(m.terms[interactions[k]].coupling, "term " + std::to_string(interactions[k]));
        prefactor *= one_plus;
        out.model.terms.push_back({{k}, dual_j});
    }
    std::vector<std::vector<size_t>> incident(m.num_sites);
    for (size_t k = 0; k < interactions.size(); ++k) {
        for (size_t s : m.terms[interactions[k]].sites) {
            incident[s].push_back(k);
        }
    }
    for (size_t s = 0; s < m.num_sites; ++s) {
        auto [one_plus, dual_j] = rotate(fields[s], "field on site " + std::to_string(s));
        prefactor *= one_plus;
        // A site in no interaction becomes an empty dual term, whose factor is 1.
        if (!incident[s].empty()) {
            out.model.terms.push_back({incident[s], dual_j});
        }
    }
    out.prefactor = prefactor;
    return out;
}

bool hypergraph_isomorphic(const SpinModel& a, const SpinModel& b) {
    a.validate();
    b.validate();
    if (a.num_sites != b.num_sites || a.terms.size() != b.terms.size()) {
        return false;
    }
    const size_t n = a.num_sites;
    auto sorted_sets = [](const SpinModel& m) {
        std::vector<std::vector<size_t>> sets;
        for (const auto& t : m.terms) {
            auto s = t.sites;
            std::sort(s.begin(), s.end());
            sets.push_back(std::move(s));
        }
        return sets;
    };
    const auto sets_a = sorted_sets(a);
    const auto sets_b = sorted_sets(b);
    std::map<std::vector<size_t>, int> count_b;
    for (const auto& s : sets_b) {
        ++count_b[s];
    }
    auto signatures = [n](const std::vector<std::vector<size_t>>& sets) {
        std::vector<std::vector<size_t>> sig(n);
        for (const auto& s : sets) {
            for (size_t v : s) {
                sig[v].push_back(s.size());
            }
        }
        for (auto& x : sig) {
            std::sort(x.begin(), x.end());
        }
        return sig;
    };
    const auto sig_a = signatures(sets_a);
    const auto sig_b = signatures(sets_b);
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) {
            return false;
        }
    }

    // Visit sites of `a` in breadth-first order over shared terms so that
    // terms close early and prune the search.
    std::vector<std::vector<size_t>> terms_of(n);
    for (size_t k = 0; k < sets_a.size(); ++k) {
        for (size_t v : sets_a[k]) {
            terms_of[v].push_back(k);
        }
    }
    std::vector<size_t> order;
    std::vector<bool> queued(n, false);
    for (size_t root = 0; root < n; ++root) {
        if (queued[root]) {
            continue;
        }
        queued[root] = true;
        order.push_back(root);
        for (size_t head = order.size() - 1; head < order.size(); ++head) {
            for (size_t k : terms_of[order[head]]) {
                for (size_t w : sets_a[k]) {
                    if (!queued[w]) {
                        queued[w] = true;
                        order.push_back(w);
                    }
                }
            }
        }
    }
    std::vector<size_t> position(n);
    for (size_t i = 0; i < n; ++i) {
        position[order[i]] = i;
    }
    // Terms that become fully assigned when order[i] is placed.
    std::vector<std::vector<size_t>> closing(n);
    for (size_t k = 0; k < sets_a.size(); ++k) {
        size_t last = 0;
        for (size_t v : sets_a[k]) {
            last = std::max(last, position[v]);
        }
        closing[last].push_back(k);
    }

    std::vector<size_t> image(n, n);
    std::vector<bool> used(n, false);
    std::map<std::vector<size_t>, int> count_used;
    std::function<bool(size_t)> place = [&](size_t i) -> bool {
        if (i == n) {
            return true;
        }
        const size_t v = order[i];
        for (size_t cand = 0; cand < n; ++cand) {
            if (used[cand] || sig_b[cand] != sig_a[v]) {
                continue;
            }
            image[v] = cand;
            used[cand] = true;
            std::vector<std::vector<size_t>> added;
            bool ok = true;
            for (size_t k : closing[i]) {
                std::vector<size_t> mapped;
                for (size_t w : sets_a[k]) {
                    mapped.push_back(image[w]);
                }
                std::sort(mapped.begin(), mapped.end());
                auto it = count_b.find(mapped);
                int& c = count_used[mapped];
                ++c;
                added.push_back(mapped);
                if (it == count_b.end() || c > it->second) {
                    ok = false;
                    break;
                }
            }
            if (ok && place(i + 1)) {
                return true;
            }
            for (const auto& m : added) {
                --count_used[m];
            }
            used[cand] = false;
            image[v] = n;
        }
        return false;
    };
    return place(0);
}

}  // namespace stabkit
