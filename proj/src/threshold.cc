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

#include "stabkit/threshold.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "stabkit/decode.h"
#include "stabkit/rng.h"
#include "stabkit/toric.h"

namespace stabkit {

double McPoint::stderr_rate() const {
    if (trials == 0) {
        return 0.0;
    }
    const double r = rate();
    return std::sqrt(r * (1.0 - r) / static_cast<double>(trials));
}

const McPoint& McResult::at(size_t size_index, size_t p_index) const {
    if (p_index >= num_rates || size_index * num_rates + p_index >= points.size()) {
        throw std::out_of_range("no such grid point");
    }
    return points[size_index * num_rates + p_index];
}

std::vector<double> linear_grid(double lo, double hi, size_t steps) {
    if (steps == 0) {
        throw std::invalid_argument("grid needs at least one step");
    }
    if (steps == 1) {
        return {lo};
    }
    std::vector<double> out(steps);
    for (size_t i = 0; i < steps; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    return out;
}

size_t default_threads() {
    if (const char* env = std::getenv("STABKIT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<size_t>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

bool trial_fails(const ToricLattice& lat, double p, const McConfig& cfg, uint64_t seed) {
    Rng rng(seed);
    const ErrorChain error = sample_errors(lat, p, rng);
    const Syndrome syn = syndrome_of(lat, error);
    DecodeResult r;
    if (cfg.decoder == Decoder::kMwpm) {
        r = decode_mwpm(lat, syn);
    } else {
        r = decode_ml(lat, syn, cfg.assumed_rate.value_or(p)).decode;
    }
    assess(lat, error, r);
    return !r.success;
}

}  // namespace

McResult run_threshold(const McConfig& cfg) {
    for (double p : cfg.error_rates) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::out_of_range("error rates must lie in [0, 1]");
        }
    }
    for (size_t L : cfg.sizes) {
        if (L < 2) {
            throw std::invalid_argument("lattice sizes must be at least 2");
        }
        if (cfg.decoder == Decoder::kMl && L > 4) {
            throw std::length_error("ML decoding is capped at L = 4; use the MWPM decoder for larger sizes");
        }
    }
    if (cfg.assumed_rate && !(*cfg.assumed_rate > 0.0 && *cfg.assumed_rate < 1.0)) {
        throw std::out_of_range("assumed rate must lie in (0, 1)");
    }

    McResult out;
    out.num_rates = cfg.error_rates.size();
    for (size_t L : cfg.sizes) {
        for (size_t i = 0; i < cfg.error_rates.size(); ++i) {
            out.points.push_back({L, i, cfg.error_rates[i], cfg.trials, 0});
        }
    }
    std::vector<ToricLattice> lattices;
    for (size_t L : cfg.sizes) {
        lattices.emplace_back(L);
    }

    // Work items are (point, block of trials); every trial has its own seed
    // so the totals are independent of scheduling.
    constexpr size_t kBlock = 256;
    const size_t blocks_per_point = (cfg.trials + kBlock - 1) / kBlock;
    const size_t num_items = out.points.size() * blocks_per_point;
    std::vector<std::atomic<size_t>> failures(out.points.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        try {
            while (!failed) {
                const size_t item = next.fetch_add(1);
                if (item >= num_items) {
                    return;
                }
                const size_t pt = item / blocks_per_point;
                const size_t block = item % blocks_per_point;
                const McPoint& point = out.points[pt];
                const ToricLattice& lat = lattices[pt / cfg.error_rates.size()];
                size_t count = 0;
                const size_t end = std::min(cfg.trials, (block + 1) * kBlock);
                for (size_t t = block * kBlock; t < end; ++t) {
                    count += trial_fails(lat, point.p, cfg, derive_seed(cfg.seed, {point.L, point.p_index, t}));
                }
                failures[pt] += count;
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
            failed = true;
        }
    };
    const size_t threads = std::max<size_t>(1, std::min(cfg.threads ? cfg.threads : default_threads(), num_items));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    for (size_t i = 0; i < out.points.size(); ++i) {
        out.points[i].failures = failures[i];
    }
    out.crossings = find_crossings(out, cfg.sizes, cfg.error_rates.size());
    if (!out.crossings.empty()) {
        double sum = 0;
        for (const auto& c : out.crossings) {
            sum += c.p;
        }
        out.crossing_estimate = sum / static_cast<double>(out.crossings.size());
    }
    return out;
}

std::vector<Crossing> find_crossings(const McResult& r, const std::vector<size_t>& sizes, size_t num_rates) {
    std::vector<Crossing> out;
    for (size_t s = 0; s + 1 < sizes.size(); ++s) {
        const McPoint* a = &r.points[s * num_rates];
        const McPoint* b = &r.points[(s + 1) * num_rates];
        for (size_t i = 0; i + 1 < num_rates; ++i) {
            const double d0 = b[i].rate() - a[i].rate();
            const double d1 = b[i + 1].rate() - a[i + 1].rate();
            if (d0 == 0.0) {
                if (i == 0 || d1 != 0.0) {
                    continue;
                }
            }
            if ((d0 < 0 && d1 >= 0) || (d0 > 0 && d1 <= 0)) {
                const double t = d0 / (d0 - d1);
                out.push_back({sizes[s], sizes[s + 1], a[i].p + t * (a[i + 1].p - a[i].p)});
                break;
            }
        }
    }
    return out;
}

void write_csv(std::ostream& out, const McResult& r) {
    out << "L,p_actual,trials,failures,rate,stderr\n";
    for (const auto& pt : r.points) {
        out << pt.L << ',' << std::setprecision(6) << std::fixed << pt.p << ',' << pt.trials << ','
            << pt.failures << ',' << std::setprecision(8) << pt.rate() << ',' << pt.stderr_rate() << '\n';
        out.unsetf(std::ios::floatfield);
    }
}

}  // namespace stabkit
