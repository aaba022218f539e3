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

#include "stabkit/rbim.h"

#include <gtest/gtest.h>

#include <cmath>

namespace stabkit {
namespace {

RbimInstance random_instance(size_t L, double beta, double p_flip, Rng& rng) {
    RbimInstance inst = RbimInstance::uniform(L, beta);
    for (auto& s : inst.sign) {
        s = bernoulli(rng, p_flip) ? -1 : 1;
    }
    return inst;
}

TEST(Rbim, InfiniteTemperatureCountsStates) {
    EXPECT_NEAR(rbim_partition(RbimInstance::uniform(3, 0.0)), 512.0, 1e-9);
    EXPECT_NEAR(rbim_partition(RbimInstance::uniform(3, 0.0), RbimMethod::kTransferMatrix), 512.0, 1e-9);
}

TEST(Rbim, LowTemperatureGroundStates) {
    const double beta = 8.0;
    const RbimInstance inst = RbimInstance::uniform(3, beta);
    const double bonds = 18.0;
    const double z = rbim_partition(inst);
    EXPECT_NEAR(z / (2 * std::exp(beta * bonds)), 1.0, 1e-5);
    EXPECT_NEAR(rbim_log_partition(inst), std::log(2.0) + beta * bonds, 1e-5);
}

TEST(Rbim, BruteForceMatchesTransferMatrix) {
    Rng rng(1);
    for (size_t L : {2, 3, 4, 5}) {
        for (int t = 0; t < (L == 5 ? 2 : 6); ++t) {
            const RbimInstance inst = random_instance(L, 0.1 + 1.5 * uniform01(rng), 0.2, rng);
            const double a = rbim_log_partition(inst, RbimMethod::kBruteForce);
            const double b = rbim_log_partition(inst, RbimMethod::kTransferMatrix);
            EXPECT_NEAR(std::exp(a - b), 1.0, 1e-10) << "L=" << L;
        }
    }
}

TEST(Rbim, GaugeInvariance) {
    // The four bonds at one spin are the edges of its face; negating them is
    // undone by flipping that spin.
    Rng rng(2);
    const ToricLattice lat(6);
    RbimInstance inst = random_instance(6, 0.7, 0.1, rng);
    const double z0 = rbim_log_partition(inst);
    for (size_t e : lat.face_edges(13)) {
        inst.sign[e] = static_cast<int8_t>(-inst.sign[e]);
    }
    EXPECT_NEAR(rbim_log_partition(inst), z0, 1e-9);
}

TEST(Rbim, CountsAndCaps) {
    const auto counts = rbim_unsatisfied_counts(RbimInstance::uniform(2, 1.0));
    uint64_t total = 0;
    for (auto c : counts) {
        total += c;
    }
    EXPECT_EQ(total, 16u);
    EXPECT_EQ(counts[0], 2u);
    EXPECT_THROW(rbim_partition(RbimInstance::uniform(6, 1.0), RbimMethod::kBruteForce), std::length_error);
    EXPECT_THROW(rbim_partition(RbimInstance::uniform(13, 1.0)), std::length_error);
    RbimInstance bad = RbimInstance::uniform(3, 1.0);
    bad.sign[0] = 0;
    EXPECT_THROW(rbim_partition(bad), std::invalid_argument);
}

}  // namespace
}  // namespace stabkit
