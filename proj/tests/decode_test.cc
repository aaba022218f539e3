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

#include "stabkit/decode.h"

#include <gtest/gtest.h>

#include <cmath>

namespace stabkit {
namespace {

// Minimum chain weight in each coset c0 + L_h + <A_f>, by direct
// enumeration of face subsets.
std::array<size_t, 4> coset_min_weights(const ToricLattice& lat, const ErrorChain& c0) {
    std::array<size_t, 4> best;
    best.fill(lat.num_edges() + 1);
    const size_t nf = lat.num_faces();
    for (unsigned h = 0; h < 4; ++h) {
        const ErrorChain base = c0 ^ logical_chain(lat, static_cast<HomologyClass>(h));
        for (uint64_t s = 0; s < (uint64_t{1} << nf); ++s) {
            ErrorChain c = base;
            for (size_t f = 0; f < nf; ++f) {
                if ((s >> f) & 1u) {
                    c ^= face_support(lat, f);
                }
            }
            best[h] = std::min(best[h], c.weight());
        }
    }
    return best;
}

TEST(DecodeMwpm, Trivial) {
    const ToricLattice lat(4);
    const ErrorChain none(lat.num_edges());
    DecodeResult r = decode_mwpm(lat, syndrome_of(lat, none));
    EXPECT_TRUE(r.recovery.empty());
    assess(lat, none, r);
    EXPECT_TRUE(r.success);
}

TEST(DecodeMwpm, SingleError) {
    const ToricLattice lat(5);
    for (size_t e = 0; e < lat.num_edges(); ++e) {
        ErrorChain c(lat.num_edges());
        c.flip(e);
        DecodeResult r = decode_mwpm(lat, syndrome_of(lat, c));
        EXPECT_EQ(r.recovery, c);
        assess(lat, c, r);
        EXPECT_TRUE(r.success);
    }
}

TEST(DecodeMwpm, LongChainWrapsTheShortWay) {
    const ToricLattice lat(4);
    ErrorChain c(lat.num_edges());
    for (size_t x = 0; x < 3; ++x) {
        c.flip(lat.edge(x, 0, 0));
    }
    DecodeResult r = decode_mwpm(lat, syndrome_of(lat, c));
    EXPECT_EQ(r.recovery.weight(), 1u);
    assess(lat, c, r);
    EXPECT_FALSE(r.success);
    EXPECT_EQ(r.residual, HomologyClass::kH);

    // The same situation at L = 3: the exhaustive decoder agrees.
    const ToricLattice small(3);
    ErrorChain c3(small.num_edges());
    c3.flip(small.edge(0, 1, 0));
    c3.flip(small.edge(1, 1, 0));
    const MlResult ml = decode_ml(small, syndrome_of(small, c3), 0.05);
    DecodeResult m = decode_mwpm(small, syndrome_of(small, c3));
    DecodeResult mr = ml.decode;
    assess(small, c3, m);
    assess(small, c3, mr);
    EXPECT_EQ(m.residual, HomologyClass::kH);
    EXPECT_EQ(mr.residual, HomologyClass::kH);
}

TEST(DecodeMwpm, RecoveryAlwaysRepairsSyndrome) {
    Rng rng(1);
    for (size_t L : {3, 4, 7}) {
        const ToricLattice lat(L);
        for (int t = 0; t < 300; ++t) {
            const ErrorChain c = sample_errors(lat, 0.15, rng);
            DecodeResult r = decode_mwpm(lat, syndrome_of(lat, c));
            EXPECT_TRUE(syndrome_of(lat, c ^ r.recovery).empty());
            EXPECT_NO_THROW(assess(lat, c, r));
        }
    }
}

TEST(DecodeMwpm, MinimumWeightOnSmallLattices) {
    Rng rng(2);
    const ToricLattice lat(3);
    for (int t = 0; t < 60; ++t) {
        const ErrorChain c = sample_errors(lat, 0.2, rng);
        const Syndrome syn = syndrome_of(lat, c);
        const DecodeResult r = decode_mwpm(lat, syn);
        const auto w = coset_min_weights(lat, reference_chain(lat, syn));
        EXPECT_EQ(r.recovery.weight(), *std::min_element(w.begin(), w.end()));
    }
}

TEST(DecodeMwpm, XErrorsViaDuality) {
    Rng rng(3);
    const ToricLattice lat(5);
    for (int t = 0; t < 200; ++t) {
        const ErrorChain c = sample_errors(lat, 0.1, rng);
        const DecodeResult r = decode_mwpm_x(lat, syndrome_of_x(lat, c));
        EXPECT_TRUE(syndrome_of_x(lat, c ^ r.recovery).empty());
    }
}

TEST(DecodeMl, ProbabilitiesAndCaps) {
    Rng rng(4);
    const ToricLattice lat(3);
    for (int t = 0; t < 30; ++t) {
        const ErrorChain c = sample_errors(lat, 0.1, rng);
        const MlResult ml = decode_ml(lat, syndrome_of(lat, c), 0.1);
        double s = 0;
        for (double q : ml.class_probability) {
            s += q;
        }
        EXPECT_NEAR(s, 1.0, 1e-12);
        EXPECT_TRUE(syndrome_of(lat, c ^ ml.decode.recovery).empty());
    }
    EXPECT_THROW(decode_ml(ToricLattice(5), Syndrome{}, 0.1), std::length_error);
    EXPECT_THROW(decode_ml(lat, Syndrome{}, 1.5), std::out_of_range);
}

TEST(DecodeMl, LowNoiseLimitPicksMinimumWeight) {
    Rng rng(5);
    const ToricLattice lat(3);
    for (int t = 0; t < 60; ++t) {
        const ErrorChain c = sample_errors(lat, 0.2, rng);
        const Syndrome syn = syndrome_of(lat, c);
        const ErrorChain c0 = reference_chain(lat, syn);
        const auto w = coset_min_weights(lat, c0);
        const size_t wmin = *std::min_element(w.begin(), w.end());
        const MlResult ml = decode_ml(lat, syn, 1e-6);
        const auto ml_class = static_cast<size_t>(homology_class(lat, ml.decode.recovery ^ c0));
        EXPECT_EQ(w[ml_class], wmin);
        if (std::count(w.begin(), w.end(), wmin) == 1) {
            const DecodeResult mw = decode_mwpm(lat, syn);
            EXPECT_EQ(homology_class(lat, mw.recovery ^ ml.decode.recovery), HomologyClass::kTrivial);
        }
    }
}

TEST(DecodeMl, TieGoesToFirstClass) {
    // Defects two steps apart on a ring of four: both ways round are mirror
    // images, so the trivial and h cosets are exactly degenerate.
    const ToricLattice lat(4);
    const Syndrome syn{{lat.site(0, 0), lat.site(2, 0)}};
    const MlResult ml = decode_ml(lat, syn, 0.1);
    EXPECT_EQ(ml.coset_sum[0], ml.coset_sum[1]);
    EXPECT_GT(ml.coset_sum[0], ml.coset_sum[2]);
    EXPECT_EQ(ml.decode.recovery, reference_chain(lat, syn));
}

TEST(DecodeMl, AtLeastAsGoodAsMwpm) {
    const ToricLattice lat(3);
    Rng rng(6);
    const int n = 3000;
    int ml_ok = 0, mw_ok = 0;
    for (int t = 0; t < n; ++t) {
        const ErrorChain c = sample_errors(lat, 0.1, rng);
        const Syndrome syn = syndrome_of(lat, c);
        DecodeResult a = decode_ml(lat, syn, 0.1).decode;
        DecodeResult b = decode_mwpm(lat, syn);
        assess(lat, c, a);
        assess(lat, c, b);
        ml_ok += a.success;
        mw_ok += b.success;
    }
    const double pm = static_cast<double>(mw_ok) / n;
    EXPECT_GE(static_cast<double>(ml_ok) / n, pm - 3 * std::sqrt(pm * (1 - pm) / n));
}

TEST(Correspondence, EmptyChain) {
    const ToricLattice lat(3);
    for (double p : {0.0, 0.02, 0.1, 0.3}) {
        const CorrespondenceReport r = verify_correspondence(lat, ErrorChain(lat.num_edges()), p);
        EXPECT_LT(r.max_rel_dev(), 1e-12) << p;
    }
}

TEST(Correspondence, RandomChains) {
    Rng rng(7);
    for (size_t L : {2, 3}) {
        const ToricLattice lat(L);
        for (double p : {0.05, 0.1, 0.15}) {
            for (int t = 0; t < 10; ++t) {
                const CorrespondenceReport r = verify_correspondence(lat, sample_errors(lat, p, rng), p);
                EXPECT_LT(r.absolute_rel_dev, 1e-12);
                EXPECT_LT(r.normalized_rel_dev, 1e-12);
                EXPECT_LT(r.disorder_rel_dev, 1e-12);
            }
        }
    }
}

TEST(Correspondence, NishimoriLine) {
    for (double p : {0.01, 0.1, 0.109, 0.4}) {
        const double beta = nishimori_beta(p);
        EXPECT_NEAR(1.0 / (std::exp(2 * beta) + 1), p, 1e-15);
        EXPECT_NEAR(std::exp(-2 * beta), p / (1 - p), 1e-15);
    }
    EXPECT_THROW(nishimori_beta(0.0), std::out_of_range);
}

}  // namespace
}  // namespace stabkit
