#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "vc/graph.hpp"
#include "vc/rng.hpp"

namespace vc {

enum class LocalVariant { local1, local1_plus, local2, local2_plus };

inline const char* variant_name(LocalVariant v) {
    switch (v) {
        case LocalVariant::local1: return "LOCAL1";
        case LocalVariant::local1_plus: return "LOCAL1PLUS";
        case LocalVariant::local2: return "LOCAL2";
        case LocalVariant::local2_plus: return "LOCAL2PLUS";
    }
    return "?";
}

// The theoretically safe multiplier is 8; these defaults trade the proven
// failure bound for speed.  The capacity-counting variant needs a slightly
// higher factor in practice.
inline double default_budget_factor(LocalVariant v) {
    switch (v) {
        case LocalVariant::local1:
        case LocalVariant::local1_plus: return 2.0;
        case LocalVariant::local2:
        case LocalVariant::local2_plus: return 3.0;
    }
    return 2.0;
}

struct LocalEcParams {
    int x = 0;
    long long nu = 1;
    int k = 1;
    double budget_factor = 0;  // 0 = variant default
};

struct LocalResult {
    bool found = false;
    std::vector<int> cut_side;  // nonempty iff found
    AccessCounters counters;
    int iterations = 0;
};

/// One DFS round, recorded when a trace sink is attached.
struct LocalIterationStats {
    long long tau = 0;
    int y = -1;          // reversal target, -1 when the round ended normally
    bool aborted = false;
    long long edge_accesses = 0;
};

// Local edge-cut search: from seed x either return a set S ∋ x whose
// out-boundary is < k, or certify (with one-sided error) that no such set
// with vol_out ≤ nu exists.  Up to k DFS rounds; a round that exhausts its
// budget reverses the tree path from x to a sampled vertex y and retries.
// The four variants differ in how the budget is metered:
//   local1       stop at the tau-th accessed arc, tau uniform in [1, f·nu·k]
//   local1_plus  stop when the visited set's out-volume reaches tau
//   local2       stop after f·nu arcs never accessed earlier in this call
//   local2_plus  stop when accumulated per-vertex capacity reaches f·nu;
//                consumed capacity is zeroed so later rounds skip it
// All reversals are undone before returning; counters are per call.
class LocalEc {
public:
    LocalEc(Graph& g, LocalVariant variant) : g_(g), variant_(variant) {}

    LocalResult run(const LocalEcParams& params, Rng& rng) {
        const int n = g_.vertex_count();
        const int x = params.x;
        const int k = params.k;
        VC_CHECK(x >= 0 && x < n, "local_ec: seed out of range");
        VC_CHECK(params.nu >= 1 && k >= 1, "local_ec: bad params");
        double factor = params.budget_factor > 0 ? params.budget_factor
                                                 : default_budget_factor(variant_);
        const long long budget = std::llround(factor * static_cast<double>(params.nu));
        const long long arc_range = budget * k;  // local1/local1_plus tau range
        ensure_size(n);
        g_.reset_counters();
        if (trace) trace->clear();
        if (variant_ == LocalVariant::local2_plus) {
            cap_.resize(n);
            for (int v = 0; v < n; ++v) cap_[v] = g_.out_degree(v);
        }

        ReversalJournal journal;
        LocalResult result;
        for (int iter = 0; iter < k; ++iter) {
            ++result.iterations;
            const bool last = (iter == k - 1);
            long long tau;
            if (variant_ == LocalVariant::local1 || variant_ == LocalVariant::local1_plus)
                tau = last ? arc_range : uniform_ll(rng, 1, arc_range);
            else
                tau = uniform_ll(rng, 1, budget);

            long long t_before = g_.counters().edge_accesses;
            RoundOutcome out = dfs_round(x, tau, budget);
            if (trace)
                trace->push_back({tau, out.aborted ? out.y : -1, out.aborted,
                                  g_.counters().edge_accesses - t_before});

            if (!out.aborted) {
                // Normal termination: the visited set has no out-arc in the
                // current graph.  A set equal to the whole vertex set is no
                // cut, so fall back to the failure symbol.
                if (static_cast<int>(visited_.size()) < n) {
                    result.found = true;
                    result.cut_side = visited_;
                }
                break;
            }
            if (!last) reverse_to(x, out.y, journal);
        }
        g_.undo_all(journal);
        result.counters = g_.counters();
        return result;
    }

    /// Per-round records; set before run() to collect, owned by the caller.
    std::vector<LocalIterationStats>* trace = nullptr;

    /// Remaining per-vertex capacity after the last local2_plus run.
    const std::vector<long long>& capacities() const { return cap_; }

private:
    struct RoundOutcome {
        bool aborted = false;
        int y = -1;
    };

    void ensure_size(int n) {
        if (static_cast<int>(mark_.size()) < n) {
            mark_.assign(n, 0);
            parent_.assign(n, -1);
            parent_arc_.assign(n, -1);
            next_arc_.assign(n, 0);
        }
    }

    // Visit bookkeeping shared by all variants; returns true if the round
    // must stop at this vertex.
    bool on_visit(int v, long long tau, long long budget, RoundOutcome& out) {
        mark_[v] = round_stamp_;
        next_arc_[v] = 0;
        visited_.push_back(v);
        g_.touch_vertex(v);
        switch (variant_) {
            case LocalVariant::local1_plus:
                acc_ += g_.out_degree(v);
                if (acc_ >= tau) {
                    out.aborted = true;
                    out.y = v;
                    return true;
                }
                break;
            case LocalVariant::local2_plus:
                acc_ += cap_[v];
                if (out.y < 0 && acc_ >= tau) out.y = v;
                if (acc_ >= budget) {
                    out.aborted = true;
                    settle_capacities(v);
                    return true;
                }
                break;
            default:
                break;
        }
        return false;
    }

    // Budget exhausted: consumed capacity is cleared so later rounds pass
    // through these vertices for free; the stopping vertex keeps whatever
    // exceeds the budget.
    void settle_capacities(int stop_vertex) {
        long long overshoot = acc_ - budget_ref_;
        for (int v : visited_) cap_[v] = 0;
        cap_[stop_vertex] = overshoot;
    }

    RoundOutcome dfs_round(int x, long long tau, long long budget) {
        ++round_stamp_;
        visited_.clear();
        stack_.clear();
        acc_ = 0;
        budget_ref_ = budget;
        long long arcs = 0;      // local1: accessed, local2: new
        RoundOutcome out;

        if (on_visit(x, tau, budget, out)) return out;
        stack_.push_back(x);
        while (!stack_.empty()) {
            int v = stack_.back();
            if (next_arc_[v] == g_.out_degree(v)) {
                stack_.pop_back();
                continue;
            }
            int i = next_arc_[v]++;
            bool fresh = !g_.arc_seen(v, i);
            int w = g_.traverse(v, i);
            if (variant_ == LocalVariant::local1) {
                if (++arcs == tau) {
                    out.aborted = true;
                    out.y = v;
                    return out;
                }
            } else if (variant_ == LocalVariant::local2 && fresh) {
                ++arcs;
                if (arcs == tau) out.y = v;
                if (arcs == budget) {
                    out.aborted = true;
                    VC_CHECK(out.y >= 0, "local2: tau beyond budget");
                    return out;
                }
            }
            if (mark_[w] != round_stamp_) {
                parent_[w] = v;
                parent_arc_[w] = i;
                if (on_visit(w, tau, budget, out)) return out;
                stack_.push_back(w);
            }
        }
        return out;  // normal termination
    }

    // Reverse the DFS tree path x -> y.  Arc positions recorded during the
    // round stay valid: reversals only swap from and append to list tails,
    // and each path tail is distinct.
    void reverse_to(int x, int y, ReversalJournal& journal) {
        path_arcs_.clear();
        for (int v = y; v != x; v = parent_[v])
            path_arcs_.push_back({parent_[v], parent_arc_[v]});
        for (auto it = path_arcs_.rbegin(); it != path_arcs_.rend(); ++it)
            g_.reverse_arc(*it, journal);
    }

    Graph& g_;
    LocalVariant variant_;
    std::vector<uint32_t> mark_;
    uint32_t round_stamp_ = 0;
    std::vector<int> parent_, parent_arc_, next_arc_, visited_, stack_;
    std::vector<ArcRef> path_arcs_;
    std::vector<long long> cap_;
    long long acc_ = 0, budget_ref_ = 0;
};

inline LocalResult run_local_ec(Graph& g, LocalVariant variant, const LocalEcParams& params,
                                Rng& rng) {
    LocalEc engine(g, variant);
    return engine.run(params, rng);
}

inline LocalResult local1(Graph& g, const LocalEcParams& p, Rng& rng) {
    return run_local_ec(g, LocalVariant::local1, p, rng);
}
inline LocalResult local1_plus(Graph& g, const LocalEcParams& p, Rng& rng) {
    return run_local_ec(g, LocalVariant::local1_plus, p, rng);
}
inline LocalResult local2(Graph& g, const LocalEcParams& p, Rng& rng) {
    return run_local_ec(g, LocalVariant::local2, p, rng);
}
inline LocalResult local2_plus(Graph& g, const LocalEcParams& p, Rng& rng) {
    return run_local_ec(g, LocalVariant::local2_plus, p, rng);
}

}  // namespace vc
