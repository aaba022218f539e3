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

#include "stabkit/matching.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace stabkit {

void WeightedGraph::set_weight(size_t i, size_t j, int64_t w) {
    if (i >= m_ || j >= m_ || i == j) {
        throw std::invalid_argument("bad node pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    if (w < 0) {
        throw std::invalid_argument("matching weights must be non-negative");
    }
    w_[i * m_ + j] = w;
    w_[j * m_ + i] = w;
}

namespace {

// Primal-dual blossom algorithm for maximum-weight matching, after
// Galil (1986) in the formulation popularized by J. van Rantwijk.
// Endpoints are numbered 2k and 2k+1 for edge k; labels: 0 free, 1 S,
// 2 T (bit 4 marks blossoms visited by scan_blossom). Weights are doubled
// internally so every dual update stays integral.
class Blossom {
   public:
    Blossom(size_t num_nodes, const std::vector<std::tuple<size_t, size_t, int64_t>>& edges, bool max_cardinality)
        : n_(static_cast<long>(num_nodes)), max_cardinality_(max_cardinality) {
        for (const auto& [i, j, w] : edges) {
            if (i >= num_nodes || j >= num_nodes || i == j) {
                throw std::invalid_argument("bad matching edge");
            }
            edges_.push_back({static_cast<long>(i), static_cast<long>(j), 2 * w});
        }
    }

    std::vector<int64_t> solve();

   private:
    struct Edge {
        long i, j;
        int64_t w;
    };

    int64_t slack(long k) const { return dual_[edges_[k].i] + dual_[edges_[k].j] - 2 * edges_[k].w; }

    void leaves(long b, std::vector<long>& out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (long t : childs_[b]) {
            leaves(t, out);
        }
    }
    std::vector<long> leaves(long b) const {
        std::vector<long> out;
        leaves(b, out);
        return out;
    }

    static long wrap(long j, long len) { return ((j % len) + len) % len; }

    void assign_label(long w, int t, long p);
    long scan_blossom(long v, long w);
    void add_blossom(long base, long k);
    void expand_blossom(long b, bool endstage);
    void augment_blossom(long b, long v);
    void augment_matching(long k);

    long n_;
    bool max_cardinality_;
    std::vector<Edge> edges_;
    std::vector<long> endpoint_;
    std::vector<std::vector<long>> neighbend_;
    std::vector<long> mate_;
    std::vector<int> label_;
    std::vector<long> labelend_;
    std::vector<long> inblossom_;
    std::vector<long> blossomparent_;
    std::vector<std::vector<long>> childs_;
    std::vector<long> blossombase_;
    std::vector<std::vector<long>> endps_;
    std::vector<long> bestedge_;
    std::vector<std::vector<long>> blossombestedges_;
    std::vector<bool> has_bestedges_;
    std::vector<long> unused_;
    std::vector<int64_t> dual_;
    std::vector<bool> allowedge_;
    std::vector<long> queue_;
};

void Blossom::assign_label(long w, int t, long p) {
    long b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
        leaves(b, queue_);
    } else if (t == 2) {
        long base = blossombase_[b];
        assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
}

long Blossom::scan_blossom(long v, long w) {
    std::vector<long> path;
    long base = -1;
    while (v != -1 || w != -1) {
        long b = inblossom_[v];
        if (label_[b] & 4) {
            base = blossombase_[b];
            break;
        }
        path.push_back(b);
        label_[b] = 5;
        if (labelend_[b] == -1) {
            v = -1;
        } else {
            v = endpoint_[labelend_[b]];
            b = inblossom_[v];
            v = endpoint_[labelend_[b]];
        }
        if (w != -1) {
            std::swap(v, w);
        }
    }
    for (long b : path) {
        label_[b] = 1;
    }
    return base;
}

void Blossom::add_blossom(long base, long k) {
    long v = edges_[k].i, w = edges_[k].j;
    long bb = inblossom_[base], bv = inblossom_[v], bw = inblossom_[w];
    long b = unused_.back();
    unused_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    std::vector<long> path, endps;
    while (bv != bb) {
        blossomparent_[bv] = b;
        path.push_back(bv);
        endps.push_back(labelend_[bv]);
        v = endpoint_[labelend_[bv]];
        bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
        blossomparent_[bw] = b;
        path.push_back(bw);
        endps.push_back(labelend_[bw] ^ 1);
        w = endpoint_[labelend_[bw]];
        bw = inblossom_[w];
    }
    childs_[b] = path;
    endps_[b] = endps;
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dual_[b] = 0;
    for (long leaf : leaves(b)) {
        if (label_[inblossom_[leaf]] == 2) {
            queue_.push_back(leaf);
        }
        inblossom_[leaf] = b;
    }
    std::vector<long> bestedgeto(2 * n_, -1);
    for (long sub : path) {
        std::vector<std::vector<long>> nblists;
        if (!has_bestedges_[sub]) {
            for (long leaf : leaves(sub)) {
                std::vector<long> list;
                for (long p : neighbend_[leaf]) {
                    list.push_back(p / 2);
                }
                nblists.push_back(std::move(list));
            }
        } else {
            nblists.push_back(blossombestedges_[sub]);
        }
        for (const auto& list : nblists) {
            for (long kk : list) {
                long i = edges_[kk].i, j = edges_[kk].j;
                if (inblossom_[j] == b) {
                    std::swap(i, j);
                }
                long bj = inblossom_[j];
                if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
                    bestedgeto[bj] = kk;
                }
            }
        }
        blossombestedges_[sub].clear();
        has_bestedges_[sub] = false;
        bestedge_[sub] = -1;
    }
    blossombestedges_[b].clear();
    for (long kk : bestedgeto) {
        if (kk != -1) {
            blossombestedges_[b].push_back(kk);
        }
    }
    has_bestedges_[b] = true;
    bestedge_[b] = -1;
    for (long kk : blossombestedges_[b]) {
        if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) {
            bestedge_[b] = kk;
        }
    }
}

void Blossom::expand_blossom(long b, bool endstage) {
    for (long s : childs_[b]) {
        blossomparent_[s] = -1;
        if (s < n_) {
            inblossom_[s] = s;
        } else if (endstage && dual_[s] == 0) {
            expand_blossom(s, endstage);
        } else {
            for (long leaf : leaves(s)) {
                inblossom_[leaf] = s;
            }
        }
    }
    if (!endstage && label_[b] == 2) {
        const auto& ch = childs_[b];
        const long len = static_cast<long>(ch.size());
        long entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
        long j = static_cast<long>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
        long jstep, endptrick;
        if (j & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        long p = labelend_[b];
        while (j != 0) {
            label_[endpoint_[p ^ 1]] = 0;
            label_[endpoint_[endps_[b][wrap(j - endptrick, len)] ^ endptrick ^ 1]] = 0;
            assign_label(endpoint_[p ^ 1], 2, p);
            allowedge_[endps_[b][wrap(j - endptrick, len)] / 2] = true;
            j += jstep;
            p = endps_[b][wrap(j - endptrick, len)] ^ endptrick;
            allowedge_[p / 2] = true;
            j += jstep;
        }
        long bv = ch[wrap(j, len)];
        label_[endpoint_[p ^ 1]] = label_[bv] = 2;
        labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
        bestedge_[bv] = -1;
        j += jstep;
        while (ch[wrap(j, len)] != entrychild) {
            bv = ch[wrap(j, len)];
            if (label_[bv] == 1) {
                j += jstep;
                continue;
            }
            long found = -1;
            for (long leaf : leaves(bv)) {
                if (label_[leaf] != 0) {
                    found = leaf;
                    break;
                }
            }
            if (found != -1) {
                label_[found] = 0;
                label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                assign_label(found, 2, labelend_[found]);
            }
            j += jstep;
        }
    }
    label_[b] = -1;
    labelend_[b] = -1;
    childs_[b].clear();
    endps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = false;
    bestedge_[b] = -1;
    unused_.push_back(b);
}

void Blossom::augment_blossom(long b, long v) {
    long t = v;
    while (blossomparent_[t] != b) {
        t = blossomparent_[t];
    }
    if (t >= n_) {
        augment_blossom(t, v);
    }
    auto& ch = childs_[b];
    auto& ep = endps_[b];
    const long len = static_cast<long>(ch.size());
    long i = static_cast<long>(std::find(ch.begin(), ch.end(), t) - ch.begin());
    long j = i;
    long jstep, endptrick;
    if (i & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
    } else {
        jstep = -1;
        endptrick = 1;
    }
    while (j != 0) {
        j += jstep;
        t = ch[wrap(j, len)];
        long p = ep[wrap(j - endptrick, len)] ^ endptrick;
        if (t >= n_) {
            augment_blossom(t, endpoint_[p]);
        }
        j += jstep;
        t = ch[wrap(j, len)];
        if (t >= n_) {
            augment_blossom(t, endpoint_[p ^ 1]);
        }
        mate_[endpoint_[p]] = p ^ 1;
        mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(ep.begin(), ep.begin() + i, ep.end());
    blossombase_[b] = blossombase_[ch[0]];
}

void Blossom::augment_matching(long k) {
    const long v = edges_[k].i, w = edges_[k].j;
    for (auto [s, p] : {std::pair<long, long>{v, 2 * k + 1}, std::pair<long, long>{w, 2 * k}}) {
        while (true) {
            long bs = inblossom_[s];
            if (bs >= n_) {
                augment_blossom(bs, s);
            }
            mate_[s] = p;
            if (labelend_[bs] == -1) {
                break;
            }
            long t = endpoint_[labelend_[bs]];
            long bt = inblossom_[t];
            s = endpoint_[labelend_[bt]];
            long j = endpoint_[labelend_[bt] ^ 1];
            if (bt >= n_) {
                augment_blossom(bt, j);
            }
            mate_[j] = labelend_[bt];
            p = labelend_[bt] ^ 1;
        }
    }
}

std::vector<int64_t> Blossom::solve() {
    const long n = n_;
    const long nedge = static_cast<long>(edges_.size());
    if (nedge == 0) {
        return std::vector<int64_t>(n, -1);
    }
    int64_t maxweight = 0;
    for (const auto& e : edges_) {
        maxweight = std::max(maxweight, e.w);
    }
    endpoint_.resize(2 * nedge);
    neighbend_.assign(n, {});
    for (long k = 0; k < nedge; ++k) {
        endpoint_[2 * k] = edges_[k].i;
        endpoint_[2 * k + 1] = edges_[k].j;
        neighbend_[edges_[k].i].push_back(2 * k + 1);
        neighbend_[edges_[k].j].push_back(2 * k);
    }
    mate_.assign(n, -1);
    label_.assign(2 * n, 0);
    labelend_.assign(2 * n, -1);
    inblossom_.resize(n);
    for (long v = 0; v < n; ++v) {
        inblossom_[v] = v;
    }
    blossomparent_.assign(2 * n, -1);
    childs_.assign(2 * n, {});
    blossombase_.assign(2 * n, -1);
    for (long v = 0; v < n; ++v) {
        blossombase_[v] = v;
    }
    endps_.assign(2 * n, {});
    bestedge_.assign(2 * n, -1);
    blossombestedges_.assign(2 * n, {});
    has_bestedges_.assign(2 * n, false);
    unused_.clear();
    for (long b = n; b < 2 * n; ++b) {
        unused_.push_back(b);
    }
    dual_.assign(2 * n, 0);
    for (long v = 0; v < n; ++v) {
        dual_[v] = maxweight;
    }
    allowedge_.assign(nedge, false);

    for (long stage = 0; stage < n; ++stage) {
        std::fill(label_.begin(), label_.end(), 0);
        std::fill(bestedge_.begin(), bestedge_.end(), -1);
        for (long b = n; b < 2 * n; ++b) {
            blossombestedges_[b].clear();
            has_bestedges_[b] = false;
        }
        std::fill(allowedge_.begin(), allowedge_.end(), false);
        queue_.clear();
        for (long v = 0; v < n; ++v) {
            if (mate_[v] == -1 && label_[inblossom_[v]] == 0) {
                assign_label(v, 1, -1);
            }
        }
        bool augmented = false;
        while (true) {
            while (!queue_.empty() && !augmented) {
                long v = queue_.back();
                queue_.pop_back();
                for (long p : neighbend_[v]) {
                    long k = p / 2;
                    long w = endpoint_[p];
                    if (inblossom_[v] == inblossom_[w]) {
                        continue;
                    }
                    int64_t kslack = 0;
                    if (!allowedge_[k]) {
                        kslack = slack(k);
                        if (kslack <= 0) {
                            allowedge_[k] = true;
                        }
                    }
                    if (allowedge_[k]) {
                        if (label_[inblossom_[w]] == 0) {
                            assign_label(w, 2, p ^ 1);
                        } else if (label_[inblossom_[w]] == 1) {
                            long base = scan_blossom(v, w);
                            if (base >= 0) {
                                add_blossom(base, k);
                            } else {
                                augment_matching(k);
                                augmented = true;
                                break;
                            }
                        } else if (label_[w] == 0) {
                            label_[w] = 2;
                            labelend_[w] = p ^ 1;
                        }
                    } else if (label_[inblossom_[w]] == 1) {
                        long b = inblossom_[v];
                        if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
                            bestedge_[b] = k;
                        }
                    } else if (label_[w] == 0) {
                        if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
                            bestedge_[w] = k;
                        }
                    }
                }
            }
            if (augmented) {
                break;
            }

            int deltatype = -1;
            int64_t delta = 0;
            long deltaedge = -1, deltablossom = -1;
            if (!max_cardinality_) {
                deltatype = 1;
                delta = *std::min_element(dual_.begin(), dual_.begin() + n);
            }
            for (long v = 0; v < n; ++v) {
                if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                    int64_t d = slack(bestedge_[v]);
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 2;
                        deltaedge = bestedge_[v];
                    }
                }
            }
            for (long b = 0; b < 2 * n; ++b) {
                if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                    int64_t d = slack(bestedge_[b]) / 2;
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 3;
                        deltaedge = bestedge_[b];
                    }
                }
            }
            for (long b = n; b < 2 * n; ++b) {
                if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                    (deltatype == -1 || dual_[b] < delta)) {
                    delta = dual_[b];
                    deltatype = 4;
                    deltablossom = b;
                }
            }
            if (deltatype == -1) {
                deltatype = 1;
                delta = std::max<int64_t>(0, *std::min_element(dual_.begin(), dual_.begin() + n));
            }
            for (long v = 0; v < n; ++v) {
                if (label_[inblossom_[v]] == 1) {
                    dual_[v] -= delta;
                } else if (label_[inblossom_[v]] == 2) {
                    dual_[v] += delta;
                }
            }
            for (long b = n; b < 2 * n; ++b) {
                if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                    if (label_[b] == 1) {
                        dual_[b] += delta;
                    } else if (label_[b] == 2) {
                        dual_[b] -= delta;
                    }
                }
            }
            if (deltatype == 1) {
                break;
            } else if (deltatype == 2) {
                allowedge_[deltaedge] = true;
                long i = edges_[deltaedge].i, j = edges_[deltaedge].j;
                if (label_[inblossom_[i]] == 0) {
                    std::swap(i, j);
                }
                queue_.push_back(i);
            } else if (deltatype == 3) {
                allowedge_[deltaedge] = true;
                queue_.push_back(edges_[deltaedge].i);
            } else {
                expand_blossom(deltablossom, false);
            }
        }
        if (!augmented) {
            break;
        }
        for (long b = n; b < 2 * n; ++b) {
            if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dual_[b] == 0) {
                expand_blossom(b, true);
            }
        }
    }
    std::vector<int64_t> result(n, -1);
    for (long v = 0; v < n; ++v) {
        if (mate_[v] >= 0) {
            result[v] = endpoint_[mate_[v]];
        }
    }
    return result;
}

void require_even(size_t m) {
    if (m % 2 != 0) {
        throw std::invalid_argument("perfect matching needs an even node count, got " + std::to_string(m));
    }
}

Matching finish(const WeightedGraph& g, std::vector<std::pair<size_t, size_t>> pairs) {
    Matching out;
    for (auto& [i, j] : pairs) {
        if (i > j) {
            std::swap(i, j);
        }
        out.total_weight += g.weight(i, j);
    }
    std::sort(pairs.begin(), pairs.end());
    out.pairs = std::move(pairs);
    return out;
}

}  // namespace

std::vector<int64_t> max_weight_matching(size_t num_nodes,
                                         const std::vector<std::tuple<size_t, size_t, int64_t>>& edges,
                                         bool max_cardinality) {
    return Blossom(num_nodes, edges, max_cardinality).solve();
}

Matching mwpm(const WeightedGraph& g) {
    const size_t m = g.num_nodes();
    require_even(m);
    int64_t maxw = 0;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            maxw = std::max(maxw, g.weight(i, j));
        }
    }
    // Heaviest maximum-cardinality matching of (maxw - w) is a lightest
    // perfect matching of w.
    std::vector<std::tuple<size_t, size_t, int64_t>> edges;
    edges.reserve(m * (m - 1) / 2);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            edges.emplace_back(i, j, maxw - g.weight(i, j));
        }
    }
    std::vector<int64_t> mate = max_weight_matching(m, edges, true);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < m; ++i) {
        if (mate[i] < 0) {
            throw std::logic_error("blossom returned an imperfect matching");
        }
        if (static_cast<size_t>(mate[i]) > i) {
            pairs.emplace_back(i, static_cast<size_t>(mate[i]));
        }
    }
    return finish(g, std::move(pairs));
}

Matching mwpm_oracle_dp(const WeightedGraph& g) {
    const size_t m = g.num_nodes();
    require_even(m);
    if (m > 16) {
        throw std::length_error("subset DP matching is capped at 16 nodes, got " + std::to_string(m));
    }
    const size_t full = (size_t{1} << m) - 1;
    constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
    std::vector<int64_t> best(full + 1, kInf);
    std::vector<uint8_t> partner(full + 1, 0);
    best[0] = 0;
    for (size_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) % 2 != 0) {
            continue;
        }
        const size_t i = static_cast<size_t>(std::countr_zero(mask));
        for (size_t j = i + 1; j < m; ++j) {
            if (!((mask >> j) & 1u)) {
                continue;
            }
            const size_t rest = mask & ~(size_t{1} << i) & ~(size_t{1} << j);
            if (best[rest] == kInf) {
                continue;
            }
            const int64_t cand = best[rest] + g.weight(i, j);
            if (cand < best[mask]) {
                best[mask] = cand;
                partner[mask] = static_cast<uint8_t>(j);
            }
        }
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t mask = full; mask != 0;) {
        const size_t i = static_cast<size_t>(std::countr_zero(mask));
        const size_t j = partner[mask];
        pairs.emplace_back(i, j);
        mask &= ~(size_t{1} << i) & ~(size_t{1} << j);
    }
    return finish(g, std::move(pairs));
}

}  // namespace stabkit
