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

#ifndef STABKIT_SPINMODEL_H
#define STABKIT_SPINMODEL_H

#include <complex>
#include <vector>

#include "stabkit/graphstate.h"

namespace stabkit {

using Complex = std::complex<double>;

/// One interaction J * (s_{i_1} XOR ... XOR s_{i_m}). Arity 1 is a field.
struct SpinTerm {
    std::vector<size_t> sites;
    Complex coupling{0, 0};
};

/// Classical spin model on bits s_i in {0, 1}:
///
///   H(s) = sum_a J_a (XOR_{i in a} s_i),   Z(beta) = sum_s exp(-beta H(s)).
///
/// Couplings and beta may be complex. Repeated site sets are allowed and
/// simply add up in the energy.
struct SpinModel {
    size_t num_sites = 0;
    Complex beta{1, 0};
    std::vector<SpinTerm> terms;

    /// Throws std::invalid_argument for empty terms, out-of-range sites or
    /// a site repeated within one term.
    void validate() const;

    /// Total field (sum of arity-1 couplings) on each site.
    std::vector<Complex> site_fields() const;
    /// Indices of terms with arity >= 2.
    std::vector<size_t> interaction_terms() const;
};

/// Brute-force sum over all 2^n configurations. Throws std::length_error
/// above `max_sites` (default 24).
Complex partition_direct(const SpinModel& m, size_t max_sites = 24);

/// Bipartite site/term incidence graph. Vertices 0..num_sites-1 are sites;
/// vertex num_sites + k is the k-th interaction term (arity >= 2). Fields
/// do not get vertices: they weight the site bras instead.
struct MediatedGraph {
    Graph graph;
    size_t num_sites = 0;
    std::vector<size_t> term_index;  ///< Model term behind each term vertex.

    size_t num_term_vertices() const { return term_index.size(); }
};

MediatedGraph mediated_graph(const SpinModel& m);

/// Builds the mediated graph state, applies H on every term vertex and
/// returns 2^{n/2} <alpha| psi>, where <alpha| is the product of
/// <0| + exp(-beta J)<1| over site vertices (J = total field) and term
/// vertices (J = coupling). Equals partition_direct(m).
///
/// Throws std::length_error when sites + interaction terms exceed the
/// state-vector cap.
Complex partition_via_overlap(const SpinModel& m, size_t max_qubits = StateVector::kDefaultMaxQubits);

/// Raw overlap <alpha| H_terms |psi_G> (without the 2^{n/2} scale).
Complex mediated_overlap(const SpinModel& m, size_t max_qubits = StateVector::kDefaultMaxQubits);

struct DualModel {
    SpinModel model;
    /// Z(m) = prefactor * Z(dual).
    Complex prefactor{1, 0};
};

/// Swaps the two sides of the mediated graph.
///
/// Dual sites are the interaction terms of `m` (in order); each original
/// site becomes a dual term over the interactions that contain it. Every
/// bra <0| + w<1| is rotated by H into f (<0| + w~<1|) with
///
///   w~ = (1 - w) / (1 + w) = tanh(beta J / 2),   f = (1 + w) / sqrt2,
///
/// and the dual coupling is J~ = -Log(w~) / beta (principal branch, same
/// beta). With m interaction terms and n sites,
///
///   Z = 2^{-m} prod_{all bras} (1 + w) * Z~.
///
/// A site inside exactly one interaction turns into a dual field; a site in
/// no interaction contributes only its factor (1 + w).
///
/// Throws std::invalid_argument if a site has no field, beta is zero, or
/// some w~ vanishes or diverges (tanh(beta J / 2) equal to 0 or infinite).
DualModel dualize(const SpinModel& m);

/// True iff some site permutation maps the multiset of term site-sets of
/// `a` onto that of `b` (couplings ignored). Backtracking search for small
/// models.
bool hypergraph_isomorphic(const SpinModel& a, const SpinModel& b);

}  // namespace stabkit

#endif  // STABKIT_SPINMODEL_H
