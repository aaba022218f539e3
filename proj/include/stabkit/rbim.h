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

#ifndef STABKIT_RBIM_H
#define STABKIT_RBIM_H

#include <cstdint>
#include <vector>

#include "stabkit/toric.h"

namespace stabkit {

/// Random-bond Ising model on the dual of an L x L torus: one +-1 spin per
/// face, one bond per primal edge e joining the two faces that contain e,
/// with coupling J_e = J * sign[e].
struct RbimInstance {
    size_t L = 0;
    std::vector<int8_t> sign;
    double beta = 0;
    double J = 1;

    /// All-ferromagnetic bonds.
    static RbimInstance uniform(size_t L, double beta, double J = 1);
    /// sign[e] = -1 exactly on the edges of `chain`.
    static RbimInstance from_chain(const ToricLattice& lat, const ErrorChain& chain, double beta, double J = 1);
    void validate() const;
};

enum class RbimMethod { kAuto, kBruteForce, kTransferMatrix };

/// Z = sum_sigma exp(beta sum_e J_e sigma_i sigma_j). Brute force handles
/// L <= 5, the transfer matrix L <= 12; kAuto picks brute force when it can.
double rbim_partition(const RbimInstance& inst, RbimMethod method = RbimMethod::kAuto);

/// counts[k] = number of spin configurations with exactly k unsatisfied
/// bonds (J_e sigma_i sigma_j < 0). Brute force, L <= 5.
std::vector<uint64_t> rbim_unsatisfied_counts(const RbimInstance& inst);

/// Natural log of the partition function, without overflow.
double rbim_log_partition(const RbimInstance& inst, RbimMethod method = RbimMethod::kAuto);

}  // namespace stabkit

#endif  // STABKIT_RBIM_H
