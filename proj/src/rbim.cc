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

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace stabkit {

RbimInstance RbimInstance::uniform(size_t L, double beta, double J) {
    RbimInstance inst;
    inst.L = L;
    inst.sign.assign(2 * L * L, 1);
    inst.beta = beta;
    inst.J = J;
    return inst;
}

RbimInstance RbimInstance::from_chain(const ToricLattice& lat, const ErrorChain& chain, double beta, double J) {
    RbimInstance inst = uniform(lat.L(), beta, J);
    for (size_t e : chain.support()) {
        inst.sign[e] = -1;
    }
    return inst;
}

void RbimInstance::validate() const {
    if (L < 2) {
        throw std::invalid_argument("RBIM needs L >= 2");
    }
    if (sign.size() != 2 * L * L) {
        throw std::invalid_argument("RBIM bond count must be 2 L^2");
    }
    for (int8_t s : sign) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("RBIM bond signs must be +1 or -1");
        }
    }
    if (!std::isfinite(beta) || !std::isfinite(J)) {
        throw std::invalid_argument("RBIM beta and J must be finite");
    }
}

std::vector<uint64_t> rbim_unsatisfied_counts(const RbimInstance& inst) {
    inst.validate();
    if (inst.L > 5) {
        throw std::length_error("brute-force RBIM sum is capped at L = 5, got " + std::to_string(inst.L));
    }
    const ToricLattice lat(inst.L);
    const size_t nf = lat.num_faces();
    const size_t ne = lat.num_edges();
    std::vector<std::array<size_t, 2>> ends(ne);
    std::vector<uint8_t> bad(ne);
    size_t k = 0;
    for (size_t e = 0; e < ne; ++e) {
        ends[e] = lat.edge_faces(e);
        bad[e] = inst.sign[e] < 0;
        k += bad[e];
    }
    std::vector<uint64_t> counts(ne + 1, 0);
    counts[k] += 1;
    // Gray code: step i flips the face at the lowest set bit of i.
    const uint64_t total = uint64_t{1} << nf;
    for (uint64_t i = 1; i < total; ++i) {
        const size_t f = static_cast<size_t>(std::countr_zero(i));
        for (size_t e : lat.face_edges(f)) {
            bad[e] ^= 1u;
            k = bad[e] ? k + 1 : k - 1;
        }
        counts[k] += 1;
    }
    return counts;
}

namespace {

double log_partition_brute(const RbimInstance& inst) {
    const std::vector<uint64_t> counts = rbim_unsatisfied_counts(inst);
    const double n = static_cast<double>(counts.size() - 1);
    double top = -std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < counts.size(); ++k) {
        if (counts[k]) {
            top = std::max(top, inst.beta * inst.J * (n - 2.0 * static_cast<double>(k)));
        }
    }
    long double acc = 0;
    for (size_t k = 0; k < counts.size(); ++k) {
        if (counts[k]) {
            acc += static_cast<long double>(counts[k]) *
                   std::exp(static_cast<long double>(inst.beta * inst.J * (n - 2.0 * static_cast<double>(k)) - top));
        }
    }
    return top + static_cast<double>(std::log(acc));
}

// Rows are the faces with a fixed x; a row configuration is an L-bit mask
// over y, bit set meaning sigma = -1. Face (x, y) meets (x, y-1) across edge
// (x, y, 0) and (x-1, y) across edge (x, y, 1). For each fixed first row the
// remaining rows are swept in one spin at a time, and the last row is closed
// against the first.
double log_partition_transfer(const RbimInstance& inst) {
    const size_t L = inst.L;
    if (L > 12) {
        throw std::length_error("transfer-matrix RBIM is capped at L = 12, got " + std::to_string(L));
    }
    const ToricLattice lat(L);
    const size_t S = size_t{1} << L;
    const double bj = inst.beta * inst.J;
    auto bond = [&](size_t e, bool a, bool b) {
        const double s = inst.sign[e] * ((a != b) ? -1.0 : 1.0);
        return std::exp(bj * s);
    };
    auto bit = [](size_t m, size_t y) { return ((m >> y) & 1u) != 0; };

    std::vector<double> logs;
    std::vector<double> cur(S), nxt(S);
    for (size_t first = 0; first < S; ++first) {
        double log_scale = 0;
        double w = 1;
        for (size_t y = 0; y < L; ++y) {
            w *= bond(lat.edge(0, y, 0), bit(first, y), bit(first, (y + L - 1) % L));
        }
        std::fill(cur.begin(), cur.end(), 0.0);
        cur[first] = w;
        for (size_t x = 1; x < L; ++x) {
            for (size_t y = 0; y < L; ++y) {
                // Replace the spin of row x-1 at column y by the spin of row x.
                const size_t e_vert = lat.edge(x, y, 1);
                const size_t e_row = lat.edge(x, y, 0);
                const size_t m = size_t{1} << y;
                for (size_t c = 0; c < S; ++c) {
                    if (c & m) {
                        continue;
                    }
                    const double a0 = cur[c], a1 = cur[c | m];
                    for (int s = 0; s < 2; ++s) {
                        double v = a0 * bond(e_vert, false, s) + a1 * bond(e_vert, true, s);
                        if (y > 0) {
                            v *= bond(e_row, s, bit(c, y - 1));
                        }
                        nxt[s ? (c | m) : c] = v;
                    }
                }
                std::swap(cur, nxt);
            }
            double top = 0;
            for (size_t c = 0; c < S; ++c) {
                cur[c] *= bond(lat.edge(x, 0, 0), bit(c, 0), bit(c, L - 1));
                top = std::max(top, cur[c]);
            }
            if (top > 0) {
                for (double& v : cur) {
                    v /= top;
                }
                log_scale += std::log(top);
            }
        }
        long double total = 0;
        for (size_t c = 0; c < S; ++c) {
            double v = cur[c];
            for (size_t y = 0; y < L; ++y) {
                v *= bond(lat.edge(0, y, 1), bit(c, y), bit(first, y));
            }
            total += v;
        }
        logs.push_back(log_scale + static_cast<double>(std::log(total)));
    }
    const double top = *std::max_element(logs.begin(), logs.end());
    long double acc = 0;
    for (double l : logs) {
        acc += std::exp(static_cast<long double>(l - top));
    }
    return top + static_cast<double>(std::log(acc));
}

}  // namespace

double rbim_log_partition(const RbimInstance& inst, RbimMethod method) {
    inst.validate();
    if (method == RbimMethod::kAuto) {
        method = inst.L <= 5 ? RbimMethod::kBruteForce : RbimMethod::kTransferMatrix;
    }
    return method == RbimMethod::kBruteForce ? log_partition_brute(inst) : log_partition_transfer(inst);
}

double rbim_partition(const RbimInstance& inst, RbimMethod method) {
    return std::exp(rbim_log_partition(inst, method));
}

}  // namespace stabkit
