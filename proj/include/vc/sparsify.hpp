#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "vc/graph.hpp"
#include "vc/rng.hpp"

namespace vc {

// Partition of an undirected edge set into forests E_1, E_2, ...  Edge i
// belongs to forest label[i].  The labeling has the connectivity-certificate
// property: the union of the first k forests preserves every vertex cut of
// size < k, and min(kappa, k) itself.
struct ForestLabeling {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> label;

    int max_label() const {
        int m = 0;
        for (int l : label) m = std::max(m, l);
        return m;
    }
};

inline std::vector<std::pair<int, int>> undirected_edges(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int i = 0; i < g.out_degree(u); ++i) {
            int v = g.head(u, i);
            if (u < v) edges.emplace_back(u, v);
        }
    return edges;
}

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

// Scan-based forest decomposition: repeatedly scan the unscanned vertex of
// maximum rank; each unscanned neighbour u gets the connecting edge labeled
// rank(u)+1 and its rank bumped.  Produces maximal spanning forests layer by
// layer in O(m + n) with a bucket queue.
inline ForestLabeling forest_decompose(const Graph& g) {
    int n = g.vertex_count();
    ForestLabeling fl;
    fl.n = n;
    fl.edges = undirected_edges(g);
    fl.label.assign(fl.edges.size(), 0);

    // adjacency with edge indices
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (std::size_t e = 0; e < fl.edges.size(); ++e) {
        auto [u, v] = fl.edges[e];
        adj[u].emplace_back(v, static_cast<int>(e));
        adj[v].emplace_back(u, static_cast<int>(e));
    }

    std::vector<int> rank(n, 0);
    std::vector<char> scanned(n, 0);
    std::vector<std::vector<int>> bucket(n + 1);
    for (int v = 0; v < n; ++v) bucket[0].push_back(v);
    int top = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        while (true) {
            while (top > 0 && bucket[top].empty()) --top;
            if (bucket[top].empty()) break;
            int cand = bucket[top].back();
            bucket[top].pop_back();
            if (!scanned[cand] && rank[cand] == top) {  // skip stale entries
                v = cand;
                break;
            }
        }
        if (v < 0) break;
        scanned[v] = 1;
        for (auto [u, e] : adj[v]) {
            if (scanned[u]) continue;
            fl.label[e] = rank[u] + 1;
            ++rank[u];
            bucket[rank[u]].push_back(u);
            if (rank[u] > top) top = rank[u];
        }
    }
    return fl;
}

// Randomized variant: edges are placed, in the given random order, into the
// lowest-index forest that stays acyclic.  If every forest below i rejected
// an edge, its endpoints are connected in each of them, so the certificate
// property holds for any edge order.
inline ForestLabeling randomized_forest_partition(const Graph& g, Rng& rng) {
    ForestLabeling fl;
    fl.n = g.vertex_count();
    fl.edges = undirected_edges(g);
    std::shuffle(fl.edges.begin(), fl.edges.end(), rng);
    fl.label.assign(fl.edges.size(), 0);
    std::vector<detail::UnionFind> forest;
    for (std::size_t e = 0; e < fl.edges.size(); ++e) {
        auto [u, v] = fl.edges[e];
        std::size_t i = 0;
        while (true) {
            if (i == forest.size()) forest.emplace_back(fl.n);
            if (forest[i].unite(u, v)) {
                fl.label[e] = static_cast<int>(i) + 1;
                break;
            }
            ++i;
        }
    }
    return fl;
}

// Union of the first k forests.
inline Graph fg_k(const ForestLabeling& fl, int k) {
    std::vector<std::pair<int, int>> kept;
    for (std::size_t e = 0; e < fl.edges.size(); ++e)
        if (fl.label[e] <= k) kept.push_back(fl.edges[e]);
    return Graph::from_undirected_edges(fl.n, kept);
}

}  // namespace vc
