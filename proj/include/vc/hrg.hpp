#pragma once

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "vc/connectivity.hpp"
#include "vc/graph.hpp"
#include "vc/rng.hpp"
#include "vc/sparsify.hpp"
#include "vc/timing.hpp"

namespace vc {

struct HrgConfig {
    int k_initial = 0;
    int fixed_seed_vertex = -1;  // -1: uniform random per stage
    double error_target = 0.002;
    int max_repeats = 8;
    uint64_t seed = 0;
};

/// One sink phase, recorded when a trace sink is attached.
struct HrgPhaseRecord {
    int stage_k = 0;
    int x = -1;
    int sink = -1;
    long long value = 0;
    bool aborted = false;
};

namespace detail {

// Preflow push over the split graph of one sparsified stage.  Computes a
// sequence of minimum {seed + previous sinks}-to-sink cuts while keeping a
// single monotone distance labeling.  Vertices that can no longer route
// excess to the current sink are frozen (removed from the awake set) and
// woken at the next phase; converted sinks become sources with their
// inbound flow refunded and their outbound arcs saturated, which keeps
// sources out of every residual-reachability argument.
class PreflowStage {
public:
    explicit PreflowStage(const Graph& fg) : base_(fg), n_(fg.vertex_count()), ns_(2 * n_) {
        big_ = ns_;  // exceeds any vertex cut; internal unit arcs bound real flow
        adj_.assign(ns_, {});
        ex_.assign(ns_, 0);
        d_.assign(ns_, 0);
        cur_.assign(ns_, 0);
        st_.assign(ns_, kAwake);
        arc_seen_.assign(n_ + fg.arc_count(), 0);
        node_seen_.assign(ns_, 0);
        for (int v = 0; v < n_; ++v) add_pair(in_node(v), out_node(v), 1);
        for (int v = 0; v < n_; ++v)
            for (int i = 0; i < fg.out_degree(v); ++i)
                add_pair(out_node(v), in_node(fg.head(v, i)), big_);
        bucket_.assign(1, {});
        act_.assign(1, {});
        pos_.assign(ns_, -1);
    }

    struct Outcome {
        std::optional<std::vector<int>> cut;  // best verified cut found
        int cut_size = 0;
        long long phases = 0;
        AccessCounters counters;
    };

    // g_orig is the unsparsified graph used to validate candidate cuts.
    Outcome run(int x, int k_cap, const Graph& g_orig, Rng& rng, int stage_k,
                std::vector<HrgPhaseRecord>* trace) {
        Outcome out;
        st_[in_node(x)] = kSource;
        st_[out_node(x)] = kSource;
        saturate(in_node(x));
        saturate(out_node(x));

        std::vector<char> adjacent(n_, 0);
        adjacent[x] = 1;
        for (int i = 0; i < base_.out_degree(x); ++i) adjacent[base_.head(x, i)] = 1;
        std::vector<int> sinks;
        for (int v = 0; v < n_; ++v)
            if (!adjacent[v]) sinks.push_back(v);
        std::shuffle(sinks.begin(), sinks.end(), rng);
        // Low-degree sinks first, ties in random order.  Once a sink on the
        // small side of an unbalanced cut has been processed, the cut value
        // is locked in; visiting separator vertices before that would merge
        // them into the source side and hide the cut.  Small-side vertices
        // have the lowest sparsified degrees, so they surface early.
        std::stable_sort(sinks.begin(), sinks.end(),
                         [&](int a, int b) { return base_.out_degree(a) < base_.out_degree(b); });

        for (int t_base : sinks) {
            t_in_ = in_node(t_base);
            bool aborted = false;
            if (ex_[t_in_] >= k_cap) {
                aborted = true;  // already flooded; skip the phase setup
            } else {
                begin_phase();
                while (true) {
                    if (ex_[t_in_] >= k_cap) {
                        aborted = true;
                        break;
                    }
                    int v = pop_active();
                    if (v < 0) break;
                    discharge(v);
                }
            }
            ++out.phases;
            long long value = ex_[t_in_];
            if (trace) trace->push_back({stage_k, x, t_base, value, aborted});
            if (!aborted && value < k_cap) {
                std::vector<int> cand = extract_cut();
                VC_CHECK(static_cast<long long>(cand.size()) == value,
                         "preflow: cut size disagrees with sink excess");
                if (!cand.empty() && static_cast<int>(cand.size()) < k_cap &&
                    is_vertex_cut(g_orig, cand)) {
                    k_cap = static_cast<int>(cand.size());
                    out.cut = std::move(cand);
                    out.cut_size = k_cap;
                }
            }
            convert_to_source(t_base);
        }
        out.counters = cnt_;
        return out;
    }

private:
    enum Status : uint8_t { kAwake, kDormant, kSource };

    static int in_node(int v) { return 2 * v; }
    static int out_node(int v) { return 2 * v + 1; }

    void add_pair(int u, int v, long long cap) {
        adj_[u].push_back(static_cast<int>(to_.size()));
        to_.push_back(v);
        res_.push_back(cap);
        adj_[v].push_back(static_cast<int>(to_.size()));
        to_.push_back(u);
        res_.push_back(0);
    }

    void touch_arc(int a) {
        ++cnt_.edge_accesses;
        uint32_t id = static_cast<uint32_t>(a >> 1);
        if (arc_seen_[id] != 1) {
            arc_seen_[id] = 1;
            ++cnt_.unique_edges;
        }
    }
    void touch_node(int v) {
        if (node_seen_[v] != 1) {
            node_seen_[v] = 1;
            ++cnt_.unique_vertices;
        }
    }

    void ensure_level(int d) {
        if (d >= static_cast<int>(bucket_.size())) {
            bucket_.resize(d + 1);
            act_.resize(d + 1);
        }
    }
    void binsert(int v) {
        ensure_level(d_[v]);
        pos_[v] = static_cast<int>(bucket_[d_[v]].size());
        bucket_[d_[v]].push_back(v);
        level_max_ = std::max(level_max_, d_[v]);
    }
    void bremove(int v) {
        auto& b = bucket_[d_[v]];
        int p = pos_[v];
        b[p] = b.back();
        pos_[b[p]] = p;
        b.pop_back();
        pos_[v] = -1;
    }
    void freeze(int v) {
        bremove(v);
        st_[v] = kDormant;
    }
    void gang_freeze(int level) {
        for (int l = level; l <= level_max_; ++l)
            while (!bucket_[l].empty()) freeze(bucket_[l].back());
    }

    void activate(int v) {
        ensure_level(d_[v]);
        act_[d_[v]].push_back(v);
        hmax_ = std::max(hmax_, d_[v]);
    }

    int pop_active() {
        while (hmax_ >= 0) {
            auto& s = act_[hmax_];
            while (!s.empty()) {
                int v = s.back();
                s.pop_back();
                if (st_[v] == kAwake && ex_[v] > 0 && v != t_in_ && d_[v] == hmax_) return v;
            }
            --hmax_;
        }
        return -1;
    }

    // Push all residual capacity out of a fresh source; heads that are
    // themselves sources are skipped.
    void saturate(int s) {
        for (int a : adj_[s]) {
            touch_arc(a);
            int w = to_[a];
            if (st_[w] == kSource) continue;
            long long f = res_[a];
            if (f <= 0) continue;
            res_[a] = 0;
            res_[a ^ 1] += f;
            touch_node(w);
            ex_[w] += f;
        }
    }

    // Labels carried over from earlier phases can violate d(u) <= d(w)+1 on
    // arcs into vertices that sat dormant while u relabeled past them, and a
    // gap freeze driven by such labels parks excess on vertices that still
    // reach the sink.  Re-anchoring every phase with exact reverse-residual
    // distances from the new sink makes all within-phase freezes sound;
    // vertices with no residual path to the sink hold their excess until a
    // later phase.
    void begin_phase() {
        for (int v = 0; v < ns_; ++v)
            if (st_[v] == kDormant) st_[v] = kAwake;
        for (int l = 0; l <= level_max_; ++l) {
            bucket_[l].clear();
            act_[l].clear();
        }
        level_max_ = 0;
        hmax_ = -1;
        std::vector<int> dist(ns_, -1);
        std::vector<int> queue;
        queue.reserve(ns_);
        dist[t_in_] = 0;
        queue.push_back(t_in_);
        for (size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            for (int a : adj_[v]) {
                int w = to_[a];
                if (dist[w] >= 0 || st_[w] != kAwake) continue;
                if (res_[a ^ 1] <= 0) continue;  // walk the arc w->v backwards
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
        for (int v = 0; v < ns_; ++v) {
            if (st_[v] != kAwake) continue;
            if (dist[v] < 0) {
                st_[v] = kDormant;
                continue;
            }
            d_[v] = dist[v];
            cur_[v] = 0;
            binsert(v);
            if (ex_[v] > 0 && v != t_in_) activate(v);
        }
    }

    void relabel_or_freeze(int v) {
        int nd = INT_MAX;
        for (int a : adj_[v]) {
            touch_arc(a);
            if (res_[a] > 0 && st_[to_[a]] == kAwake) nd = std::min(nd, d_[to_[a]] + 1);
        }
        if (nd == INT_MAX) {
            freeze(v);
            return;
        }
        // A relabel that would empty this level cuts every awake residual
        // path from higher vertices to the sink: freeze the whole range.
        if (static_cast<int>(bucket_[d_[v]].size()) == 1 && d_[v] > d_[t_in_]) {
            gang_freeze(d_[v]);
            return;
        }
        VC_CHECK(nd <= 4 * ns_ + 4, "preflow: runaway distance label");
        bremove(v);
        d_[v] = nd;
        binsert(v);
        cur_[v] = 0;
    }

    void discharge(int v) {
        touch_node(v);
        while (ex_[v] > 0) {
            if (cur_[v] == static_cast<int>(adj_[v].size())) {
                relabel_or_freeze(v);
                if (st_[v] != kAwake) return;  // excess parks with the frozen vertex
                continue;
            }
            int a = adj_[v][cur_[v]];
            touch_arc(a);
            int w = to_[a];
            if (res_[a] > 0 && st_[w] == kAwake && d_[v] == d_[w] + 1) {
                long long f = std::min(ex_[v], res_[a]);
                res_[a] -= f;
                res_[a ^ 1] += f;
                ex_[v] -= f;
                touch_node(w);
                bool was_zero = (ex_[w] == 0);
                ex_[w] += f;
                if (was_zero && w != t_in_) activate(w);
            } else {
                ++cur_[v];
            }
        }
    }

    // Reverse-residual reachability from the sink; crossing arcs are all
    // internal, so they name the cut vertices directly.
    std::vector<int> extract_cut() {
        std::vector<char> reach(ns_, 0);
        std::vector<int> stack{t_in_};
        reach[t_in_] = 1;
        while (!stack.empty()) {
            int z = stack.back();
            stack.pop_back();
            for (int a : adj_[z]) {
                touch_arc(a);
                int u = to_[a];
                if (!reach[u] && res_[a ^ 1] > 0) {
                    reach[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::vector<int> cut;
        for (int v = 0; v < n_; ++v)
            if (reach[out_node(v)] && !reach[in_node(v)]) cut.push_back(v);
        return cut;
    }

    // The finished sink joins the source side: refund all flow that entered
    // it, then push everything it can reach outward.  Afterwards no source
    // has a positive-residual arc, keeping them out of reachability sets.
    void convert_to_source(int t_base) {
        for (int node : {in_node(t_base), out_node(t_base)}) {
            if (st_[node] == kAwake) bremove(node);
            st_[node] = kSource;
        }
        for (int node : {in_node(t_base), out_node(t_base)}) {
            for (int a : adj_[node]) {
                if (!(a & 1)) continue;  // reverse arcs carry inbound flow
                touch_arc(a);
                long long f = res_[a];
                if (f <= 0) continue;
                res_[a] = 0;
                res_[a ^ 1] += f;
                int w = to_[a];
                if (st_[w] != kSource) ex_[w] += f;
            }
            saturate(node);
        }
    }

    const Graph& base_;
    int n_, ns_;
    long long big_;
    std::vector<int> to_;
    std::vector<long long> res_;
    std::vector<std::vector<int>> adj_;
    std::vector<long long> ex_;
    std::vector<int> d_, cur_, pos_;
    std::vector<uint8_t> st_;
    std::vector<std::vector<int>> bucket_, act_;
    int level_max_ = 0, hmax_ = -1, t_in_ = -1;
    AccessCounters cnt_;
    std::vector<uint32_t> arc_seen_, node_seen_;
};

}  // namespace detail

// Preflow-based vertex connectivity: k-doubling over sparsified stages, one
// PreflowStage per stage with a random seed vertex, plus the trivial degree
// cut.  The whole search repeats with fresh seed vertices until the chance
// that every repetition picked a seed inside a minimum cut is below
// error_target.
inline VcReport hrg_vertex_connectivity(const Graph& g, const HrgConfig& cfg = {},
                                        std::vector<HrgPhaseRecord>* trace = nullptr) {
    StopWatch total;
    VcReport report;
    report.seed = cfg.seed;
    const int n = g.vertex_count();
    Rng rng(derive_seed(cfg.seed, 0x48524764));

    if (n <= 1 || !is_connected(g)) {
        report.kappa = 0;
        if (n > 1) report.cut = std::vector<int>{};
        report.total_ms = total.ms();
        report.phase_times.other = report.total_ms;
        return report;
    }

    ForestLabeling fl = forest_decompose(g);
    total.restart();  // the one-off labeling is untimed; stage builds are timed
    int best = n - 1;
    std::optional<std::vector<int>> best_cut;
    auto consider = [&](const std::vector<int>& cand) {
        if (cand.empty() || static_cast<int>(cand.size()) >= best) return;
        if (!is_vertex_cut(g, cand)) return;
        best = static_cast<int>(cand.size());
        best_cut = cand;
    };

    int passes = 1;
    for (int pass = 0; pass < passes; ++pass) {
        long long k = cfg.k_initial > 0 ? cfg.k_initial : 2;
        while (true) {
            const int k_stage = static_cast<int>(std::min<long long>(k, n - 1));
            StopWatch sw;
            Graph fg = fg_k(fl, k_stage);
            report.phase_times.sparsify_build += sw.ms();

            sw.restart();
            auto [delta, trivial] = trivial_cut_sweep(fg);
            if (trivial) consider(*trivial);
            report.phase_times.trivial += sw.ms();
            (void)delta;

            int k_prime = std::min(k_stage, best);
            if (k_prime > 1) {
                int x = cfg.fixed_seed_vertex >= 0 ? cfg.fixed_seed_vertex
                                                   : static_cast<int>(uniform_ll(rng, 0, n - 1));
                detail::PreflowStage stage(fg);
                auto outcome = stage.run(x, k_prime, g, rng, k_stage, trace);
                report.flow_calls += outcome.phases;
                report.counters += outcome.counters;
                if (outcome.cut) consider(*outcome.cut);
            }
            if (best < k_stage || k_stage >= n - 1) break;
            k *= 2;
        }
        // Repeat until the chance that every pass seeded inside a minimum
        // cut is at or below the error target.
        double p = std::min(1.0 - 1e-9, static_cast<double>(best) / n);
        int want;
        if (p <= cfg.error_target)
            want = 1;
        else
            want = static_cast<int>(std::ceil(std::log(cfg.error_target) / std::log(p)));
        passes = std::min(std::max(want, 1), std::max(cfg.max_repeats, 1));
    }

    report.kappa = best;
    if (best_cut) report.cut = best_cut;
    report.total_ms = total.ms();
    const PhaseTimes& p = report.phase_times;
    report.phase_times.other =
        std::max(0.0, report.total_ms - p.sparsify_build - p.trivial - p.balanced_ff -
                          p.unbalanced_localec);
    return report;
}

}  // namespace vc
