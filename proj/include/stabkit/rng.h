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

#ifndef STABKIT_RNG_H
#define STABKIT_RNG_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace stabkit {

/// Random engine used throughout. Callers own and seed it; nothing in the
/// library keeps global random state.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one draw, so the
/// stream is identical across standard library implementations.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Fair coin: true with probability 1/2.
inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

/// SplitMix64 finalizer.
inline uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Counter-based key derivation: the seed for a stream is a pure function of
/// the base seed and the coordinates, independent of scheduling order.
inline uint64_t derive_seed(uint64_t seed, std::initializer_list<uint64_t> coords) {
    uint64_t h = mix64(seed);
    for (uint64_t c : coords) {
        h = mix64(h ^ mix64(c + 0x632BE59BD9B4E019ull));
    }
    return h;
}

}  // namespace stabkit

#endif  // STABKIT_RNG_H
