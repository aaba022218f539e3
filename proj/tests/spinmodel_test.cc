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

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "oracles.h"
#include "stabkit/spinmodel_io.h"

namespace stabkit {
namespace {

// Open-boundary r x c lattice, two-body bonds plus a field on every site.
SpinModel square_lattice(size_t r, size_t c, Complex beta, Rng& rng) {
    SpinModel m;
    m.num_sites = r * c;
    m.beta = beta;
    for (size_t s = 0; s < m.num_sites; ++s) {
        m.terms.push_back({{s}, 0.3 + uniform01(rng)});
    }
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < c; ++j) {
            if (j + 1 < c) {
                m.terms.push_back({{i * c + j, i * c + j + 1}, 0.2 + uniform01(rng)});
            }
            if (i + 1 < r) {
                m.terms.push_back({{i * c + j, (i + 1) * c + j}, 0.2 + uniform01(rng)});
            }
        }
    }
    return m;
}

// Periodic L x L lattice with a four-body term on every plaquette and a field
// on every site.
SpinModel plaquette_model(size_t L, Rng& rng) {
    SpinModel m;
    m.num_sites = L * L;
    m.beta = 0.8;
    auto site = [L](size_t x, size_t y) { return (x % L) * L + (y % L); };
    for (size_t s = 0; s < m.num_sites; ++s) {
        m.terms.push_back({{s}, 0.5 + uniform01(rng)});
    }
    for (size_t x = 0; x < L; ++x) {
        for (size_t y = 0; y < L; ++y) {
            m.terms.push_back({{site(x, y), site(x + 1, y), site(x, y + 1), site(x + 1, y + 1)}, 0.4 + uniform01(rng)});
        }
    }
    return m;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

TEST(SpinModel, DirectSumExamples) {
    Rng rng(1);
    SpinModel m = testing::random_spin_model(8, 6, 3, false, rng);
    m.beta = 0;
    EXPECT_NEAR(std::abs(partition_direct(m) - std::pow(2.0, m.num_sites)), 0, 1e-9);

    SpinModel one{1, 0.7, {{{0}, 1.3}}};
    EXPECT_NEAR(std::abs(partition_direct(one) - (1.0 + std::exp(-0.7 * 1.3))), 0, 1e-14);

    // Ring of four sites, J = 1, beta = 1: trace of the 2 x 2 transfer matrix
    // [[1, e^-1], [e^-1, 1]] to the fourth power.
    SpinModel ring{4, 1.0, {{{0, 1}, 1.0}, {{1, 2}, 1.0}, {{2, 3}, 1.0}, {{3, 0}, 1.0}}};
    const double e = std::exp(-1.0);
    EXPECT_NEAR(std::abs(partition_direct(ring) - (std::pow(1 + e, 4) + std::pow(1 - e, 4))), 0, 1e-12);
    EXPECT_THROW(partition_direct(SpinModel{25, 1.0, {{{0}, 1.0}}}), std::length_error);
}

TEST(SpinModel, MatchesIndependentBruteForce) {
    Rng rng(2);
    for (int t = 0; t < 30; ++t) {
        const SpinModel m = testing::random_spin_model(10, 10, 4, t % 2 == 1, rng);
        EXPECT_LT(rel(partition_direct(m), testing::brute_force_partition(m)), 1e-12);
    }
}

TEST(SpinModel, Validation) {
    EXPECT_THROW((SpinModel{2, 1.0, {{{}, 1.0}}}).validate(), std::invalid_argument);
    EXPECT_THROW((SpinModel{2, 1.0, {{{2}, 1.0}}}).validate(), std::invalid_argument);
    EXPECT_THROW((SpinModel{2, 1.0, {{{1, 1}, 1.0}}}).validate(), std::invalid_argument);
}

TEST(SpinModel, MultiplicativeOverComponents) {
    Rng rng(3);
    const SpinModel a = testing::random_spin_model(5, 5, 3, true, rng);
    SpinModel b = testing::random_spin_model(5, 5, 3, false, rng);
    b.beta = a.beta;
    SpinModel both = a;
    both.num_sites = a.num_sites + b.num_sites;
    for (auto t : b.terms) {
        for (auto& s : t.sites) {
            s += a.num_sites;
        }
        both.terms.push_back(t);
    }
    EXPECT_LT(rel(partition_direct(both), partition_direct(a) * partition_direct(b)), 1e-12);
}

TEST(MediatedGraph, Shapes) {
    const MediatedGraph one = mediated_graph(SpinModel{2, 1.0, {{{0, 1}, 1.0}}});
    EXPECT_EQ(one.graph, Graph::parse("3\n0 2\n1 2\n"));
    Rng rng(4);
    const MediatedGraph sq = mediated_graph(square_lattice(3, 3, 1.0, rng));
    EXPECT_EQ(sq.num_term_vertices(), 12u);
    for (size_t k = 0; k < sq.num_term_vertices(); ++k) {
        EXPECT_EQ(sq.graph.neighbors(sq.num_sites + k).size(), 2u);
    }
    const MediatedGraph pl = mediated_graph(plaquette_model(3, rng));
    EXPECT_EQ(pl.graph.num_vertices(), 18u);
    for (size_t k = 0; k < pl.num_term_vertices(); ++k) {
        EXPECT_EQ(pl.graph.neighbors(pl.num_sites + k).size(), 4u);
    }
}

TEST(Overlap, AgreesWithDirectSum) {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        const SpinModel m = testing::random_spin_model(8, 8, 4, t % 2 == 0, rng);
        EXPECT_LT(rel(partition_via_overlap(m), partition_direct(m)), 1e-9);
    }
}

TEST(Overlap, Examples) {
    Rng rng(6);
    SpinModel m = testing::random_spin_model(6, 6, 3, false, rng);
    m.beta = 0;
    EXPECT_NEAR(std::abs(partition_via_overlap(m) - std::pow(2.0, m.num_sites)), 0, 1e-10);
    const SpinModel three{3, 1.0, {{{0, 1, 2}, 1.0}}};
    const Complex want = 4.0 + 4.0 * std::exp(-1.0);
    EXPECT_LT(rel(partition_direct(three), want), 1e-14);
    EXPECT_LT(rel(partition_via_overlap(three), want), 1e-12);
    EXPECT_THROW(partition_via_overlap(SpinModel{20, 1.0, {{{0, 1}, 1.0}, {{1, 2}, 1.0}, {{2, 3}, 1.0}}}, 22),
                 std::length_error);
}

TEST(Dual, SquareLatticeIdentity) {
    Rng rng(7);
    for (Complex beta : {Complex(0.9, 0), Complex(0.6, 0.3)}) {
        const SpinModel m = square_lattice(3, 3, beta, rng);
        const DualModel d = dualize(m);
        EXPECT_EQ(d.model.num_sites, 12u);
        std::map<size_t, int> arities;
        for (const auto& t : d.model.terms) {
            ++arities[t.sites.size()];
        }
        // Fields on the 12 dual sites; corners, edges and the centre give
        // arities 2, 3 and 4.
        EXPECT_EQ(arities[1], 12);
        EXPECT_EQ(arities[2], 4);
        EXPECT_EQ(arities[3], 4);
        EXPECT_EQ(arities[4], 1);
        EXPECT_LT(rel(d.prefactor * partition_direct(d.model), partition_direct(m)), 1e-9);
    }
}

TEST(Dual, PlaquetteModelIsSelfDual) {
    Rng rng(8);
    const SpinModel m = plaquette_model(3, rng);
    const DualModel d = dualize(m);
    EXPECT_TRUE(hypergraph_isomorphic(m, d.model));
    EXPECT_LT(rel(d.prefactor * partition_direct(d.model), partition_direct(m)), 1e-9);
    EXPECT_FALSE(hypergraph_isomorphic(m, square_lattice(3, 3, 1.0, rng)));
}

TEST(Dual, RoundTrip) {
    Rng rng(9);
    for (const SpinModel& m : {square_lattice(3, 3, 0.7, rng), plaquette_model(3, rng)}) {
        const SpinModel back = dualize(dualize(m).model).model;
        ASSERT_TRUE(hypergraph_isomorphic(m, back));
        ASSERT_EQ(back.num_sites, m.num_sites);
        std::map<std::vector<size_t>, Complex> want, got;
        for (auto t : m.terms) {
            std::sort(t.sites.begin(), t.sites.end());
            want[t.sites] += t.coupling;
        }
        for (auto t : back.terms) {
            std::sort(t.sites.begin(), t.sites.end());
            got[t.sites] += t.coupling;
        }
        ASSERT_EQ(want.size(), got.size());
        for (const auto& [sites, j] : want) {
            ASSERT_TRUE(got.count(sites));
            EXPECT_LT(std::abs(got[sites] - j), 1e-9);
        }
    }
}

TEST(Dual, Errors) {
    EXPECT_THROW(dualize(SpinModel{2, 1.0, {{{0, 1}, 1.0}, {{0}, 1.0}}}), std::invalid_argument);
    EXPECT_THROW(dualize(SpinModel{1, 0.0, {{{0}, 1.0}}}), std::invalid_argument);
    // J = 0 gives tanh(0) = 0.
    EXPECT_THROW(dualize(SpinModel{2, 1.0, {{{0}, 1.0}, {{1}, 1.0}, {{0, 1}, 0.0}}}), std::invalid_argument);
}

TEST(SpinModelIo, RoundTrip) {
    Rng rng(10);
    const SpinModel m = testing::random_spin_model(6, 6, 3, true, rng);
    const SpinModel back = parse_spin_model(format_spin_model(m));
    EXPECT_EQ(back.num_sites, m.num_sites);
    EXPECT_EQ(back.beta, m.beta);
    ASSERT_EQ(back.terms.size(), m.terms.size());
    for (size_t i = 0; i < m.terms.size(); ++i) {
        EXPECT_EQ(back.terms[i].sites, m.terms[i].sites);
        EXPECT_EQ(back.terms[i].coupling, m.terms[i].coupling);
    }
    const SpinModel simple = parse_spin_model(R"({"sites": 2, "beta": 0.5, "terms": [{"spins": [0, 1], "J": 1}]})");
    EXPECT_EQ(simple.beta, Complex(0.5, 0));
    EXPECT_NE(format_spin_model(simple, Complex(2, 0)).find("\"prefactor\""), std::string::npos);
    EXPECT_THROW(parse_spin_model("{"), std::invalid_argument);
    EXPECT_THROW(parse_spin_model(R"({"sites": 1, "terms": [{"spins": [3], "J": 1}]})"), std::invalid_argument);
    EXPECT_THROW(parse_spin_model(R"({"sites": 1, "terms": [{"spins": [0], "J": "x"}]})"), std::invalid_argument);
}

}  // namespace
}  // namespace stabkit
