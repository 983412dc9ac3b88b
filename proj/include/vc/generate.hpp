#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vc/graph.hpp"
#include "vc/rng.hpp"
#include "vc/sparsify.hpp"

namespace vc {

struct PlantedParams {
    int n = 0;
    int size_l = 1;
    int size_s = 1;
    int k_gen = 60;
};

struct PlantedInstance {
    Graph graph;
    SeparationTriple triple;
};

namespace detail {

// Pairs (u,v), 0 <= u < v < n, ranked lexicographically.
inline long long pair_rank_base(int u, long long n) { return u * n - (static_cast<long long>(u) * (u + 1)) / 2; }

inline std::pair<int, int> pair_from_rank(long long r, long long n) {
    int u = static_cast<int>(n - 0.5 - std::sqrt((n - 0.5) * (n - 0.5) - 2.0 * static_cast<double>(r)));
    if (u < 0) u = 0;
    while (u + 1 < n && pair_rank_base(u + 1, n) <= r) ++u;
    while (u > 0 && pair_rank_base(u, n) > r) --u;
    int v = static_cast<int>(r - pair_rank_base(u, n)) + u + 1;
    return {u, v};
}

// Lowest-index forests 1..k_gen of the randomized partition; edges rejected
// by all of them would get a higher label and are dropped.
class ForestPrefix {
public:
    ForestPrefix(int n, int k_gen) : n_(n) {
        forests_.reserve(k_gen);
        for (int i = 0; i < k_gen; ++i) forests_.emplace_back(n);
        components_.assign(k_gen, n);
    }
    // Returns true if the edge lands in a forest (label <= k_gen).
    bool offer(int u, int v) {
        for (std::size_t i = 0; i < forests_.size(); ++i) {
            if (forests_[i].unite(u, v)) {
                if (--components_[i] == 1) ++spanning_;
                return true;
            }
        }
        return false;
    }
    // Once every tracked forest spans, no further edge can be accepted.
    bool saturated() const { return spanning_ == static_cast<int>(forests_.size()); }

private:
    int n_;
    std::vector<UnionFind> forests_;
    std::vector<int> components_;
    int spanning_ = 0;
};

}  // namespace detail

// Instance with a known unique minimum vertex cut: the complete graph on n
// vertices minus all edges between L and R, sparsified by keeping the first
// k_gen forests of a randomized forest partition.  Since k_gen > |S|, the
// planted separator survives as the unique minimum cut of size |S|.
// The complete graph is never materialized: vertex pairs are processed in a
// uniform random order, either by shuffling all pair ranks (small n) or by
// de-duplicated uniform sampling (large n), stopping early once the tracked
// forests all span.
inline PlantedInstance generate_planted(const PlantedParams& p, Rng& rng) {
    const long long n = p.n;
    if (p.size_l < 1 || p.size_s < 1)
        throw std::invalid_argument("planted: L and S must be nonempty");
    if (p.size_l + p.size_s >= p.n)
        throw std::invalid_argument("planted: L + S must leave room for R");
    if (p.k_gen <= p.size_s)
        throw std::invalid_argument("planted: union bound needs more than |S| spanning structures");

    // random disjoint L, S; the rest is R
    std::vector<int> perm(p.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    enum : char { kL, kS, kR };
    std::vector<char> side(p.n, kR);
    SeparationTriple triple;
    for (int i = 0; i < p.size_l; ++i) side[perm[i]] = kL;
    for (int i = 0; i < p.size_s; ++i) side[perm[p.size_l + i]] = kS;
    for (int v = 0; v < p.n; ++v) {
        if (side[v] == kL) triple.left.push_back(v);
        else if (side[v] == kS) triple.separator.push_back(v);
        else triple.right.push_back(v);
    }

    const long long total_pairs = n * (n - 1) / 2;
    detail::ForestPrefix forests(p.n, p.k_gen);
    std::vector<std::pair<int, int>> kept;
    auto feed = [&](long long rank) {
        auto [u, v] = detail::pair_from_rank(rank, n);
        if ((side[u] == kL && side[v] == kR) || (side[u] == kR && side[v] == kL)) return;
        if (forests.offer(u, v)) kept.emplace_back(u, v);
    };

    constexpr long long kShuffleLimit = 250'000'000;  // ~1 GB of ranks
    if (total_pairs <= kShuffleLimit) {
        std::vector<uint32_t> ranks(total_pairs);
        std::iota(ranks.begin(), ranks.end(), 0u);
        std::shuffle(ranks.begin(), ranks.end(), rng);
        for (uint32_t r : ranks) {
            feed(r);
            if (forests.saturated()) break;
        }
    } else {
        // dedup bitset over all pair ranks; first occurrences of a uniform
        // i.i.d. stream form a uniform random order
        VC_CHECK(total_pairs / 8 <= 2'500'000'000LL, "planted: n too large");
        std::vector<uint64_t> seen(static_cast<std::size_t>(total_pairs / 64 + 1), 0);
        long long distinct = 0;
        while (distinct < total_pairs && !forests.saturated()) {
            long long r = uniform_ll(rng, 0, total_pairs - 1);
            uint64_t& word = seen[static_cast<std::size_t>(r >> 6)];
            uint64_t bit = 1ULL << (r & 63);
            if (word & bit) continue;
            word |= bit;
            ++distinct;
            feed(r);
        }
    }

    return {Graph::from_undirected_edges(p.n, kept), std::move(triple)};
}

// Edge-maximal subgraph of minimum degree >= k, restricted to its largest
// connected component.  Vertices are renumbered; original ids go to
// *orig_ids when provided.
inline Graph k_core(const Graph& g, int k, std::vector<int>* orig_ids = nullptr) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.out_degree(v);
    std::vector<char> dead(n, 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (deg[v] < k) {
            dead[v] = 1;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int i = 0; i < g.out_degree(v); ++i) {
            int w = g.head(v, i);
            if (!dead[w] && --deg[w] < k) {
                dead[w] = 1;
                queue.push_back(w);
            }
        }
    }

    // largest surviving component
    std::vector<int> comp(n, -1);
    int best_comp = -1, best_size = 0, comps = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (dead[s] || comp[s] >= 0) continue;
        int id = comps++, size = 0;
        stack.push_back(s);
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (int i = 0; i < g.out_degree(v); ++i) {
                int w = g.head(v, i);
                if (!dead[w] && comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        if (size > best_size) {
            best_size = size;
            best_comp = id;
        }
    }

    std::vector<int> remap(n, -1), ids;
    for (int v = 0; v < n; ++v)
        if (!dead[v] && comp[v] == best_comp) {
            remap[v] = static_cast<int>(ids.size());
            ids.push_back(v);
        }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        if (remap[v] < 0) continue;
        for (int i = 0; i < g.out_degree(v); ++i) {
            int w = g.head(v, i);
            if (remap[w] >= 0 && v < w) edges.emplace_back(remap[v], remap[w]);
        }
    }
    const int core_n = static_cast<int>(ids.size());
    if (orig_ids) *orig_ids = std::move(ids);
    return Graph::from_undirected_edges(core_n, edges);
}

}  // namespace vc
