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

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stabkit/matching.h"
#include "stabkit/rbim.h"

namespace stabkit {

void assess(const ToricLattice& lat, const ErrorChain& error, DecodeResult& result) {
    const ErrorChain residual = error ^ result.recovery;
    if (!syndrome_of(lat, residual).empty()) {
        throw std::logic_error("recovery does not reproduce the syndrome");
    }
    result.residual = homology_class(lat, residual);
    result.success = result.residual == HomologyClass::kTrivial;
}

namespace {

void check_syndrome(const ToricLattice& lat, const Syndrome& syn) {
    if (syn.defects.size() % 2 != 0) {
        throw std::logic_error("odd defect count on a torus");
    }
    for (size_t d : syn.defects) {
        if (d >= lat.num_vertices()) {
            throw std::out_of_range("defect index outside the lattice");
        }
    }
}

void add_path(const ToricLattice& lat, size_t a, size_t b, ErrorChain& out) {
    for (size_t e : lat.shortest_path(a, b)) {
        out.flip(e);
    }
}

}  // namespace

DecodeResult decode_mwpm(const ToricLattice& lat, const Syndrome& syn) {
    check_syndrome(lat, syn);
    DecodeResult r;
    r.recovery = ErrorChain(lat.num_edges());
    const auto& d = syn.defects;
    if (d.empty()) {
        return r;
    }
    WeightedGraph g(d.size());
    for (size_t i = 0; i < d.size(); ++i) {
        for (size_t j = i + 1; j < d.size(); ++j) {
            g.set_weight(i, j, static_cast<int64_t>(lat.distance(d[i], d[j])));
        }
    }
    for (const auto& [i, j] : mwpm(g).pairs) {
        add_path(lat, d[i], d[j], r.recovery);
    }
    return r;
}

DecodeResult decode_mwpm_x(const ToricLattice& lat, const Syndrome& face_syn) {
    Syndrome dual;
    for (size_t f : face_syn.defects) {
        dual.defects.push_back(dual_face_to_vertex(lat, f));
    }
    std::sort(dual.defects.begin(), dual.defects.end());
    DecodeResult r = decode_mwpm(lat, dual);
    r.recovery = dual_chain_inverse(lat, r.recovery);
    return r;
}

ErrorChain reference_chain(const ToricLattice& lat, const Syndrome& syn) {
    check_syndrome(lat, syn);
    ErrorChain c(lat.num_edges());
    for (size_t i = 0; i + 1 < syn.defects.size(); i += 2) {
        add_path(lat, syn.defects[i], syn.defects[i + 1], c);
    }
    return c;
}

namespace {

constexpr size_t kMaxMlSize = 4;

void check_ml_size(const ToricLattice& lat) {
    if (lat.L() > kMaxMlSize) {
        throw std::length_error("exhaustive coset enumeration is capped at L = 4, got " + std::to_string(lat.L()));
    }
}

uint64_t to_mask(const ErrorChain& c) {
    uint64_t m = 0;
    for (size_t e : c.support()) {
        m |= uint64_t{1} << e;
    }
    return m;
}

// counts[w] = number of chains of weight w in the coset c + <A_f>.
std::vector<uint64_t> coset_weight_counts(const ToricLattice& lat, const ErrorChain& c) {
    check_ml_size(lat);
    const size_t nf = lat.num_faces();
    std::vector<uint64_t> faces(nf);
    for (size_t f = 0; f < nf; ++f) {
        faces[f] = to_mask(face_support(lat, f));
    }
    std::vector<uint64_t> counts(lat.num_edges() + 1, 0);
    uint64_t chain = to_mask(c);
    counts[std::popcount(chain)] += 1;
    // The last face is the product of the others, so 2^(nf-1) elements.
    const uint64_t total = uint64_t{1} << (nf - 1);
    for (uint64_t i = 1; i < total; ++i) {
        chain ^= faces[std::countr_zero(i)];
        counts[std::popcount(chain)] += 1;
    }
    return counts;
}

long double weigh(const std::vector<uint64_t>& counts, double p) {
    const size_t n = counts.size() - 1;
    long double acc = 0;
    for (size_t w = 0; w <= n; ++w) {
        if (counts[w]) {
            acc += static_cast<long double>(counts[w]) * std::pow(static_cast<long double>(p), w) *
                   std::pow(1.0L - static_cast<long double>(p), n - w);
        }
    }
    return acc;
}

void check_rate(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::out_of_range("error probability must lie in [0, 1]");
    }
}

}  // namespace

long double coset_probability(const ToricLattice& lat, const ErrorChain& c, double p) {
    check_rate(p);
    return weigh(coset_weight_counts(lat, c), p);
}

MlResult decode_ml(const ToricLattice& lat, const Syndrome& syn, double p) {
    check_ml_size(lat);
    check_rate(p);
    const ErrorChain c0 = reference_chain(lat, syn);
    MlResult out;
    long double total = 0;
    for (unsigned h = 0; h < 4; ++h) {
        out.coset_sum[h] = coset_probability(lat, c0 ^ logical_chain(lat, static_cast<HomologyClass>(h)), p);
        total += out.coset_sum[h];
    }
    unsigned best = 0;
    for (unsigned h = 0; h < 4; ++h) {
        out.class_probability[h] = total > 0 ? static_cast<double>(out.coset_sum[h] / total) : 0.25;
        if (out.coset_sum[h] > out.coset_sum[best]) {
            best = h;
        }
    }
    out.decode.recovery = c0 ^ logical_chain(lat, static_cast<HomologyClass>(best));
    return out;
}

double nishimori_beta(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::out_of_range("Nishimori temperature needs 0 < p < 1");
    }
    return 0.5 * std::log((1.0 - p) / p);
}

double CorrespondenceReport::max_rel_dev() const {
    return std::max({absolute_rel_dev, normalized_rel_dev, nishimori_residual, disorder_rel_dev});
}

namespace {

double rel_dev(long double a, long double b) {
    const long double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0 ? 0.0 : static_cast<double>(std::fabs(a - b) / scale);
}

}  // namespace

CorrespondenceReport verify_correspondence(const ToricLattice& lat, const ErrorChain& c, double p) {
    check_ml_size(lat);
    check_rate(p);
    CorrespondenceReport rep;
    const size_t n = lat.num_edges();

    // Coset side: exhaustive sums, one per class, via the ML decoder.
    const Syndrome syn = syndrome_of(lat, c);
    const MlResult ml = decode_ml(lat, syn, p);
    const ErrorChain c0 = reference_chain(lat, syn);
    const auto own = static_cast<size_t>(homology_class(lat, c ^ c0));
    rep.coset_sum = ml.coset_sum[own];
    rep.ml_trivial = ml.class_probability[own];

    // Spin side. For 0 < p < 1, each edge weight p^u (1-p)^(1-u) equals
    // sqrt(p(1-p)) exp(beta v_e sigma_i sigma_j) with exp(-2 beta) = p/(1-p);
    // sigma and -sigma give the same face subset, hence the factor 1/2.
    std::array<long double, 4> z{};
    const bool interior = p > 0.0 && p < 1.0;
    const double beta = interior ? nishimori_beta(p) : 0.0;
    for (unsigned h = 0; h < 4; ++h) {
        const ErrorChain ch = c ^ logical_chain(lat, static_cast<HomologyClass>(h));
        RbimInstance inst = RbimInstance::from_chain(lat, ch, beta);
        if (interior) {
            z[h] = static_cast<long double>(rbim_partition(inst, RbimMethod::kBruteForce));
        } else {
            // Zero-temperature limit: only bond configurations with k
            // unsatisfied bonds where p^k (1-p)^(n-k) survives.
            const auto counts = rbim_unsatisfied_counts(inst);
            z[h] = 0;
            for (size_t k = 0; k <= n; ++k) {
                z[h] += static_cast<long double>(counts[k]) * std::pow(static_cast<long double>(p), k) *
                        std::pow(1.0L - static_cast<long double>(p), n - k);
            }
        }
    }
    rep.rbim_side = interior ? std::pow(static_cast<long double>(p) * (1.0L - static_cast<long double>(p)),
                                        static_cast<long double>(n) / 2) *
                                   z[0] / 2
                             : z[0] / 2;
    rep.absolute_rel_dev = rel_dev(rep.coset_sum, rep.rbim_side);
    const long double zsum = z[0] + z[1] + z[2] + z[3];
    rep.rbim_trivial = zsum > 0 ? static_cast<double>(z[0] / zsum) : 0.25;
    rep.normalized_rel_dev = rel_dev(rep.ml_trivial, rep.rbim_trivial);

    if (interior) {
        rep.nishimori_residual = std::fabs(1.0 / (std::exp(2.0 * beta) + 1.0) - p);
    }

    // Bond disorder drawn as (1-p) delta(J-1) + p delta(J+1) gives the chain
    // its i.i.d. probability.
    const RbimInstance bonds = RbimInstance::from_chain(lat, c, beta);
    long double by_bonds = 1, by_chain = 1;
    for (size_t e = 0; e < n; ++e) {
        by_bonds *= bonds.sign[e] > 0 ? 1.0L - p : static_cast<long double>(p);
        by_chain *= c.get(e) ? static_cast<long double>(p) : 1.0L - p;
    }
    rep.disorder_rel_dev = rel_dev(by_bonds, by_chain);
    return rep;
}

}  // namespace stabkit
