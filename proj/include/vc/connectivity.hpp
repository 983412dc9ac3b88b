#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vc/graph.hpp"
#include "vc/local_ec.hpp"
#include "vc/max_flow.hpp"
#include "vc/rng.hpp"
#include "vc/sparsify.hpp"
#include "vc/split_graph.hpp"
#include "vc/timing.hpp"

namespace vc {

struct DriverConfig {
    LocalVariant variant = LocalVariant::local1;
    int k_initial = 0;             // 0: start doubling at 2
    int boost = 1;                 // independent repetitions per doubling stage
    double budget_factor = 0;      // 0: variant default
    double flow_sample_mult = 1.0;
    double local_sample_mult = 1.0;
    uint64_t seed = 0;
};

struct PhaseTimes {
    double sparsify_build = 0;
    double trivial = 0;
    double balanced_ff = 0;
    double unbalanced_localec = 0;
    double other = 0;
};

struct LocalCallRecord {
    long long nu = 0;
    int k = 0;
    long long edges = 0;
};

struct VcReport {
    int kappa = 0;
    std::optional<std::vector<int>> cut;
    PhaseTimes phase_times;
    double total_ms = 0;
    AccessCounters counters;
    std::vector<LocalCallRecord> localec_call_log;
    long long flow_calls = 0;
    long long localec_calls = 0;
    uint64_t seed = 0;
};

/// Minimum degree and, when one exists (n > delta + 1), the neighborhood of
/// a minimum-degree vertex as a cut candidate.
inline std::pair<int, std::optional<std::vector<int>>> trivial_cut_sweep(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {0, std::nullopt};
    int vmin = 0;
    for (int v = 1; v < n; ++v)
        if (g.out_degree(v) < g.out_degree(vmin)) vmin = v;
    int delta = g.out_degree(vmin);
    if (n <= delta + 1) return {delta, std::nullopt};
    std::vector<int> cut(g.out_degree(vmin));
    for (int i = 0; i < delta; ++i) cut[i] = g.head(vmin, i);
    return {delta, std::move(cut)};
}

namespace detail {

// Samples arc tails of a fixed graph, i.e. vertices proportional to
// out-degree.
class ArcTailSampler {
public:
    explicit ArcTailSampler(const Graph& g) : prefix_(g.vertex_count() + 1, 0) {
        for (int v = 0; v < g.vertex_count(); ++v)
            prefix_[v + 1] = prefix_[v] + g.out_degree(v);
    }
    long long total() const { return prefix_.back(); }
    int sample(Rng& rng) const {
        long long r = uniform_ll(rng, 0, prefix_.back() - 1);
        auto it = std::upper_bound(prefix_.begin(), prefix_.end(), r);
        return static_cast<int>(it - prefix_.begin()) - 1;
    }

private:
    std::vector<long long> prefix_;
};

}  // namespace detail

// Randomized minimum vertex cut driver: sparsify, then alternate a trivial
// degree sweep, balanced-cut sampling by bounded max flow, and
// unbalanced-cut sampling by local search over a doubling volume schedule,
// all inside an outer doubling of the cut-size bound k.  Every candidate is
// verified against the original graph before it is accepted, so reported
// cuts are always genuine; only minimality is probabilistic.
class VcDriver {
public:
    VcDriver(const Graph& g, DriverConfig cfg) : g_(g), cfg_(cfg) {}

    VcReport run() {
        StopWatch total;
        report_ = VcReport{};
        report_.seed = cfg_.seed;
        const int n = g_.vertex_count();
        Rng rng(derive_seed(cfg_.seed, 0x9e3779b97f4a7c15ULL));

        best_size_ = std::max(n - 1, 0);
        best_cut_.reset();
        if (n <= 1 || !is_connected(g_)) {
            report_.kappa = 0;
            if (n > 1) report_.cut = std::vector<int>{};  // already disconnected
            report_.total_ms = total.ms();
            report_.phase_times.other = report_.total_ms;
            return report_;
        }

        ForestLabeling fl = forest_decompose(g_);
        total.restart();  // the one-off labeling is untimed; stage builds are timed
        long long k = cfg_.k_initial > 0 ? cfg_.k_initial : 2;
        while (true) {
            const int k_stage = static_cast<int>(std::min<long long>(k, n - 1));
            StopWatch sw;
            Graph fg = fg_k(fl, k_stage);
            report_.phase_times.sparsify_build += sw.ms();
            for (int b = 0; b < cfg_.boost; ++b) solve_stage(fg, k_stage, rng);
            if (best_size_ < k_stage || k_stage >= n - 1) break;
            k *= 2;
        }

        report_.kappa = best_size_;
        if (best_cut_) report_.cut = best_cut_;
        report_.total_ms = total.ms();
        const PhaseTimes& p = report_.phase_times;
        report_.phase_times.other = std::max(
            0.0, report_.total_ms - p.sparsify_build - p.trivial - p.balanced_ff - p.unbalanced_localec);
        return report_;
    }

private:
    // Candidate must disconnect the original graph; k' only ever shrinks.
    bool consider(const std::vector<int>& cand, int& k_prime) {
        if (cand.empty() || static_cast<int>(cand.size()) >= k_prime) return false;
        if (!is_vertex_cut(g_, cand)) return false;
        k_prime = static_cast<int>(cand.size());
        best_size_ = k_prime;
        best_cut_ = cand;
        return true;
    }

    void solve_stage(const Graph& fg, int k_stage, Rng& rng) {
        int k_prime = std::min(k_stage, best_size_);

        StopWatch sw;
        auto [delta, trivial] = trivial_cut_sweep(fg);
        if (trivial) consider(*trivial, k_prime);
        report_.phase_times.trivial += sw.ms();
        if (k_prime <= 1) return;

        SplitGraph sg(fg);
        detail::ArcTailSampler tails(fg);
        const long long m_arcs = tails.total();
        const long long m = m_arcs / 2;  // undirected edge count

        // balanced candidates: bounded flow between tails of random arcs
        sw.restart();
        const long long flow_samples =
            std::llround(3.0 * k_stage * cfg_.flow_sample_mult);
        for (long long s = 0; s < flow_samples && k_prime > 1; ++s) {
            int x = -1, y = -1;
            for (int attempt = 0; attempt < 2; ++attempt) {
                int cx = tails.sample(rng), cy = tails.sample(rng);
                if (cx != cy && !fg.has_arc(cx, cy)) {
                    x = cx;
                    y = cy;
                    break;
                }
            }
            if (x < 0) continue;
            FlowResult fr = max_flow_vc(sg, x, y, k_prime);
            ++report_.flow_calls;
            report_.counters += sg.graph().counters();
            if (fr.cut) consider(*fr.cut, k_prime);
        }
        report_.phase_times.balanced_ff += sw.ms();

        // unbalanced candidates: local search around tails of random arcs,
        // volume schedule delta, 2*delta, ... below a = m/(3k)
        sw.restart();
        LocalEc engine(sg.graph(), cfg_.variant);
        const double a = static_cast<double>(m) / (3.0 * k_stage);
        for (long long nu = delta; nu < a && k_prime > 1; nu *= 2) {
            long long samples = std::llround(
                static_cast<double>(m / std::max<long long>(nu, 1)) * cfg_.local_sample_mult);
            for (long long s = 0; s < samples && k_prime > 1; ++s) {
                int x = tails.sample(rng);
                LocalEcParams params;
                params.x = SplitGraph::out_vertex(x);
                params.nu = nu;
                params.k = std::min(k_prime, delta);
                params.budget_factor = cfg_.budget_factor;
                LocalResult lr = engine.run(params, rng);
                ++report_.localec_calls;
                report_.counters += lr.counters;
                report_.localec_call_log.push_back(
                    {nu, params.k, lr.counters.edge_accesses});
                if (lr.found) {
                    std::vector<int> cand = map_split_cut_to_vertex_cut(sg, lr.cut_side);
                    consider(cand, k_prime);
                }
            }
        }
        report_.phase_times.unbalanced_localec += sw.ms();
    }

    const Graph& g_;
    DriverConfig cfg_;
    VcReport report_;
    int best_size_ = 0;
    std::optional<std::vector<int>> best_cut_;
};

inline VcReport vertex_connectivity(const Graph& g, const DriverConfig& cfg = {}) {
    return VcDriver(g, cfg).run();
}

}  // namespace vc
