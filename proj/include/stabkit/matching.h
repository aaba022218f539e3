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

#ifndef STABKIT_MATCHING_H
#define STABKIT_MATCHING_H

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

namespace stabkit {

/// Complete graph on m nodes with symmetric non-negative integer weights.
class WeightedGraph {
   public:
    explicit WeightedGraph(size_t num_nodes) : m_(num_nodes), w_(num_nodes * num_nodes, 0) {}

    size_t num_nodes() const { return m_; }
    int64_t weight(size_t i, size_t j) const { return w_[i * m_ + j]; }
    /// Sets both (i, j) and (j, i). Throws on negative weights or i == j.
    void set_weight(size_t i, size_t j, int64_t w);

   private:
    size_t m_;
    std::vector<int64_t> w_;
};

struct Matching {
    /// Pairs (i, j) with i < j, sorted lexicographically.
    std::vector<std::pair<size_t, size_t>> pairs;
    int64_t total_weight = 0;
};

/// Minimum-weight perfect matching by Edmonds' blossom algorithm with
/// integer dual variables, O(m^3). Throws std::invalid_argument for odd m.
Matching mwpm(const WeightedGraph& g);

/// Exact minimum by dynamic programming over node subsets, O(2^m m).
/// Verification oracle. Throws std::invalid_argument for odd m and
/// std::length_error for m > 16.
Matching mwpm_oracle_dp(const WeightedGraph& g);

/// Maximum-weight matching on an arbitrary edge list (i, j, w). With
/// `max_cardinality` the result is the heaviest among matchings of maximum
/// size. Returns mate[v] (or -1). Weights must be integers.
std::vector<int64_t> max_weight_matching(size_t num_nodes,
                                         const std::vector<std::tuple<size_t, size_t, int64_t>>& edges,
                                         bool max_cardinality);

}  // namespace stabkit

#endif  // STABKIT_MATCHING_H
