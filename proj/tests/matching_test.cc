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

#include "stabkit/matching.h"

#include <gtest/gtest.h>

#include "stabkit/rng.h"

namespace stabkit {
namespace {

WeightedGraph random_graph(size_t m, int64_t max_w, Rng& rng) {
    WeightedGraph g(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            g.set_weight(i, j, static_cast<int64_t>(rng() % static_cast<uint64_t>(max_w + 1)));
        }
    }
    return g;
}

void expect_perfect(const Matching& mt, const WeightedGraph& g) {
    std::vector<int> seen(g.num_nodes());
    int64_t w = 0;
    for (auto [i, j] : mt.pairs) {
        EXPECT_LT(i, j);
        ++seen[i];
        ++seen[j];
        w += g.weight(i, j);
    }
    for (int s : seen) {
        EXPECT_EQ(s, 1);
    }
    EXPECT_EQ(w, mt.total_weight);
    EXPECT_TRUE(std::is_sorted(mt.pairs.begin(), mt.pairs.end()));
}

TEST(Matching, Small) {
    WeightedGraph two(2);
    two.set_weight(0, 1, 7);
    EXPECT_EQ(mwpm(two).pairs, (std::vector<std::pair<size_t, size_t>>{{0, 1}}));
    EXPECT_EQ(mwpm(WeightedGraph(0)).pairs.size(), 0u);
    WeightedGraph four(4);
    four.set_weight(0, 1, 1);
    four.set_weight(2, 3, 1);
    for (auto [i, j] : {std::pair{0, 2}, {0, 3}, {1, 2}, {1, 3}}) {
        four.set_weight(i, j, 10);
    }
    for (const Matching& m : {mwpm(four), mwpm_oracle_dp(four)}) {
        EXPECT_EQ(m.pairs, (std::vector<std::pair<size_t, size_t>>{{0, 1}, {2, 3}}));
        EXPECT_EQ(m.total_weight, 2);
    }
}

TEST(Matching, Errors) {
    EXPECT_THROW(mwpm(WeightedGraph(3)), std::invalid_argument);
    EXPECT_THROW(mwpm_oracle_dp(WeightedGraph(3)), std::invalid_argument);
    EXPECT_THROW(mwpm_oracle_dp(WeightedGraph(18)), std::length_error);
    WeightedGraph g(4);
    EXPECT_THROW(g.set_weight(1, 1, 0), std::invalid_argument);
    EXPECT_THROW(g.set_weight(0, 1, -1), std::invalid_argument);
    EXPECT_THROW(g.set_weight(0, 4, 1), std::invalid_argument);
}

TEST(Matching, AgreesWithSubsetDp) {
    Rng rng(1);
    for (int t = 0; t < 300; ++t) {
        const size_t m = 2 * (1 + rng() % 6);
        const WeightedGraph g = random_graph(m, t % 3 == 0 ? 3 : 100, rng);
        const Matching a = mwpm(g);
        const Matching b = mwpm_oracle_dp(g);
        expect_perfect(a, g);
        expect_perfect(b, g);
        EXPECT_EQ(a.total_weight, b.total_weight);
    }
}

TEST(Matching, LargerInstancesStayConsistent) {
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        const WeightedGraph g = random_graph(16, 50, rng);
        EXPECT_EQ(mwpm(g).total_weight, mwpm_oracle_dp(g).total_weight);
    }
    const WeightedGraph big = random_graph(60, 1000, rng);
    const Matching m = mwpm(big);
    expect_perfect(m, big);
    EXPECT_EQ(mwpm(big).pairs, m.pairs);
}

TEST(Matching, MaxWeightGeneralGraph) {
    // Path 0-1-2-3 with a heavy middle edge.
    const auto mate = max_weight_matching(4, {{0, 1, 5}, {1, 2, 11}, {2, 3, 5}}, false);
    EXPECT_EQ(mate, (std::vector<int64_t>{-1, 2, 1, -1}));
    const auto card = max_weight_matching(4, {{0, 1, 5}, {1, 2, 11}, {2, 3, 5}}, true);
    EXPECT_EQ(card, (std::vector<int64_t>{1, 0, 3, 2}));
    // Blossom: odd triangle with a pendant edge.
    const auto tri = max_weight_matching(4, {{0, 1, 8}, {1, 2, 9}, {0, 2, 10}, {2, 3, 7}}, false);
    EXPECT_EQ(tri, (std::vector<int64_t>{1, 0, 3, 2}));
}

}  // namespace
}  // namespace stabkit
