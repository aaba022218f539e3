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

#ifndef STABKIT_DECODE_H
#define STABKIT_DECODE_H

#include <array>
#include <string>

#include "stabkit/toric.h"

namespace stabkit {

struct DecodeResult {
    ErrorChain recovery;
    /// Filled by assess(): whether error XOR recovery is a trivial cycle.
    bool success = false;
    HomologyClass residual = HomologyClass::kTrivial;
};

/// Scores a recovery against the true Z-error chain. Throws
/// std::logic_error if the recovery does not repair the syndrome.
void assess(const ToricLattice& lat, const ErrorChain& error, DecodeResult& result);

/// Pairs vertex defects by minimum-weight perfect matching on torus
/// Manhattan distances and joins each pair by ToricLattice::shortest_path.
DecodeResult decode_mwpm(const ToricLattice& lat, const Syndrome& syn);

/// X-error version: face defects are moved to the dual lattice, decoded as
/// Z errors and mapped back. Returns the recovery as an X chain.
DecodeResult decode_mwpm_x(const ToricLattice& lat, const Syndrome& face_syn);

/// Some chain whose boundary is the syndrome (defects paired in order).
ErrorChain reference_chain(const ToricLattice& lat, const Syndrome& syn);

struct MlResult {
    DecodeResult decode;
    /// Probability of each coset C0 + L_h, indexed by HomologyClass, where
    /// C0 = reference_chain(syn). Sums to one.
    std::array<double, 4> class_probability{};
    /// Unnormalized coset sums, same indexing.
    std::array<long double, 4> coset_sum{};
};

/// Maximum-likelihood decoding by exhaustive enumeration of the
/// 2^(L^2-1) face-stabilizer elements in each of the four cosets. `p` is
/// the decoder's assumed error rate. Ties go to the earliest class in
/// (trivial, h, v, hv) order. Requires L <= 4.
MlResult decode_ml(const ToricLattice& lat, const Syndrome& syn, double p);

/// Sum over face-stabilizer elements S of prod_e p^u (1-p)^(1-u) for the
/// chain c XOR S. Requires L <= 4.
long double coset_probability(const ToricLattice& lat, const ErrorChain& c, double p);

/// Temperature on the Nishimori line for J = 1: exp(-2 beta) = p / (1 - p).
double nishimori_beta(double p);

struct CorrespondenceReport {
    long double coset_sum = 0;        ///< sum over the coset of c
    long double rbim_side = 0;        ///< (p(1-p))^(N/2) Z(v^c) / 2
    double absolute_rel_dev = 0;      ///< |coset_sum - rbim_side| / coset_sum
    double ml_trivial = 0;            ///< normalized probability of the coset of c
    double rbim_trivial = 0;          ///< Z(v^c) / sum_h Z(v^(c+L_h))
    double normalized_rel_dev = 0;
    double nishimori_residual = 0;    ///< |1/(exp(2 beta)+1) - p|
    double disorder_rel_dev = 0;      ///< chain probability vs bond-sign distribution
    double max_rel_dev() const;
};

/// Checks that the coset of `c` has the probability predicted by the
/// random-bond Ising model with bonds v_e = -1 on c and the Nishimori
/// temperature. Requires L <= 4.
CorrespondenceReport verify_correspondence(const ToricLattice& lat, const ErrorChain& c, double p);

}  // namespace stabkit

#endif  // STABKIT_DECODE_H
