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

#ifndef STABKIT_THRESHOLD_H
#define STABKIT_THRESHOLD_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace stabkit {

enum class Decoder { kMwpm, kMl };

struct McConfig {
    std::vector<size_t> sizes;
    std::vector<double> error_rates;  ///< actual rates p'
    size_t trials = 1000;
    uint64_t seed = 0;
    Decoder decoder = Decoder::kMwpm;
    /// Rate assumed by the ML decoder; defaults to the actual rate.
    std::optional<double> assumed_rate;
    /// 0 means: read STABKIT_THREADS, else use the hardware count.
    size_t threads = 0;
};

struct McPoint {
    size_t L = 0;
    size_t p_index = 0;
    double p = 0;
    size_t trials = 0;
    size_t failures = 0;
    double rate() const { return trials ? static_cast<double>(failures) / static_cast<double>(trials) : 0.0; }
    double stderr_rate() const;
};

struct Crossing {
    size_t L_small = 0;
    size_t L_large = 0;
    double p = 0;
};

struct McResult {
    std::vector<McPoint> points;  ///< sizes outer, rates inner
    size_t num_rates = 0;
    std::vector<Crossing> crossings;
    /// Mean of the adjacent-size crossings, if any were found.
    std::optional<double> crossing_estimate;
    const McPoint& at(size_t size_index, size_t p_index) const;
};

/// Evenly spaced grid from lo to hi inclusive.
std::vector<double> linear_grid(double lo, double hi, size_t steps);

/// Monte-Carlo logical failure rates. Trial t at (L, p index i) draws from
/// an engine seeded with derive_seed(seed, {L, i, t}), so results do not
/// depend on the thread count.
McResult run_threshold(const McConfig& cfg);

/// First sign change of rate(L_large) - rate(L_small) along the grid,
/// linearly interpolated.
std::vector<Crossing> find_crossings(const McResult& r, const std::vector<size_t>& sizes, size_t num_rates);

/// Header `L,p_actual,trials,failures,rate,stderr` and one row per point.
void write_csv(std::ostream& out, const McResult& r);

/// Thread count from STABKIT_THREADS, else std::thread::hardware_concurrency.
size_t default_threads();

}  // namespace stabkit

#endif  // STABKIT_THRESHOLD_H
