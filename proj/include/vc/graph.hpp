#pragma once

#include <cassert>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <span>
#include <utility>
#include <vector>

namespace vc {

#define VC_CHECK(cond, msg)                                             \
    do {                                                                \
        if (!(cond)) {                                                  \
            std::fprintf(stderr, "internal invariant violated: %s (%s:%d)\n", \
                         msg, __FILE__, __LINE__);                      \
            std::abort();                                               \
        }                                                               \
    } while (0)

// Work counters for the instrumented traversal primitives.
//   edge_accesses    every arc traversal (repeats included)
//   unique_edges     arcs traversed at least once since the last reset
//   unique_vertices  vertices touched at least once since the last reset
struct AccessCounters {
    long long edge_accesses = 0;
    long long unique_edges = 0;
    long long unique_vertices = 0;

    AccessCounters& operator+=(const AccessCounters& o) {
        edge_accesses += o.edge_accesses;
        unique_edges += o.unique_edges;
        unique_vertices += o.unique_vertices;
        return *this;
    }
};

// Position of an arc: index into the tail's adjacency vector.
struct ArcRef {
    int tail = -1;
    int index = -1;
};

// Undo log for in-place arc reversals.  Entries are appended in the order
// reversals happen and must be undone newest-first; undo_all restores the
// adjacency vectors to their exact prior content and order.
struct ReversalJournal {
    struct Entry {
        int tail;
        int index;
        int head;
    };
    std::vector<Entry> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
    void clear() { entries.clear(); }
};

// Directed multigraph over vertices [0, n).  Adjacency lists are plain
// vectors so that reversing an arc is O(1): swap-remove at the tail, append
// at the head.  Traversal goes through instrumented accessors that maintain
// AccessCounters; seen-marks are epoch stamps, so reset_counters is O(1).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n), vertex_seen_(n, 0) {}

    // Each undirected edge {u, v} becomes the two arcs (u,v) and (v,u).
    static Graph from_undirected_edges(int n, std::span<const std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) {
            VC_CHECK(0 <= u && u < n && 0 <= v && v < n, "edge endpoint out of range");
            g.add_arc(u, v);
            g.add_arc(v, u);
        }
        return g;
    }

    void add_arc(int u, int v) {
        adj_[u].push_back(Arc{v, 0});
        ++arc_count_;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long arc_count() const { return arc_count_; }
    int out_degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Read an arc head without touching the counters.
    int head(int v, int i) const { return adj_[v][i].head; }

    // True if arc (v, i) was traversed in the current counter epoch.
    bool arc_seen(int v, int i) const { return adj_[v][i].seen == epoch_; }

    // Instrumented traversal of arc i out of v; returns the head.
    int traverse(int v, int i) {
        Arc& a = adj_[v][i];
        ++counters_.edge_accesses;
        if (a.seen != epoch_) {
            a.seen = epoch_;
            ++counters_.unique_edges;
        }
        return a.head;
    }

    // Instrumented vertex visit.
    void touch_vertex(int v) {
        if (vertex_seen_[v] != epoch_) {
            vertex_seen_[v] = epoch_;
            ++counters_.unique_vertices;
        }
    }

    bool vertex_seen(int v) const { return vertex_seen_[v] == epoch_; }

    const AccessCounters& counters() const { return counters_; }

    // Zero the counters and invalidate every seen-mark in O(1).
    void reset_counters() {
        counters_ = AccessCounters{};
        ++epoch_;
    }

    long long volume_out(std::span<const int> vertices) const {
        long long vol = 0;
        for (int v : vertices) vol += out_degree(v);
        return vol;
    }

    // Replace arc (tail, index) by its reverse.  The displaced arc object
    // keeps its seen-stamp, so a reversed arc stays "seen" if the original
    // traversal already stamped it.
    void reverse_arc(ArcRef r, ReversalJournal& journal) {
        auto& list = adj_[r.tail];
        VC_CHECK(r.index >= 0 && r.index < static_cast<int>(list.size()),
                 "reverse_arc: arc not present");
        Arc a = list[r.index];
        journal.entries.push_back({r.tail, r.index, a.head});
        list[r.index] = list.back();
        list.pop_back();
        adj_[a.head].push_back(Arc{r.tail, a.seen});
    }

    // Reverse the arcs of a directed path given as a vertex sequence.
    // Aborts if some consecutive pair has no arc.
    void reverse_path(std::span<const int> path, ReversalJournal& journal) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            int idx = find_arc(path[i], path[i + 1]);
            VC_CHECK(idx >= 0, "reverse_path: missing arc on path");
            reverse_arc(ArcRef{path[i], idx}, journal);
        }
    }

    // Undo every journalled reversal, newest first.
    void undo_all(ReversalJournal& journal) {
        for (auto it = journal.entries.rbegin(); it != journal.entries.rend(); ++it) {
            auto& from = adj_[it->head];
            VC_CHECK(!from.empty() && from.back().head == it->tail,
                     "undo_all: journal out of sync");
            Arc moved = from.back();
            from.pop_back();
            auto& list = adj_[it->tail];
            if (it->index == static_cast<int>(list.size())) {
                list.push_back(Arc{it->head, moved.seen});
            } else {
                list.push_back(list[it->index]);
                list[it->index] = Arc{it->head, moved.seen};
            }
        }
        journal.clear();
    }

    int find_arc(int u, int v) const {
        const auto& list = adj_[u];
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i].head == v) return static_cast<int>(i);
        return -1;
    }

    bool has_arc(int u, int v) const { return find_arc(u, v) >= 0; }

    // Heads-only copy of the adjacency lists, for restoration checks.
    std::vector<std::vector<int>> adjacency_snapshot() const {
        std::vector<std::vector<int>> snap(adj_.size());
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            snap[v].reserve(adj_[v].size());
            for (const Arc& a : adj_[v]) snap[v].push_back(a.head);
        }
        return snap;
    }

    int min_out_degree() const {
        int d = vertex_count() > 0 ? out_degree(0) : 0;
        for (int v = 1; v < vertex_count(); ++v) d = std::min(d, out_degree(v));
        return d;
    }

private:
    struct Arc {
        int head;
        std::uint32_t seen;
    };

    std::vector<std::vector<Arc>> adj_;
    std::vector<std::uint32_t> vertex_seen_;
    std::uint32_t epoch_ = 1;
    AccessCounters counters_;
    long long arc_count_ = 0;
};

// A vertex partition (L, S, R) describing a vertex cut: removing S
// disconnects L from R.
struct SeparationTriple {
    std::vector<int> left;
    std::vector<int> separator;
    std::vector<int> right;
};

// Is `cut` a vertex cut of g?  True iff g minus cut has at least two
// connected components (among the surviving vertices).
inline bool is_vertex_cut(const Graph& g, std::span<const int> cut) {
    int n = g.vertex_count();
    std::vector<char> removed(n, 0);
    for (int v : cut) {
        if (v < 0 || v >= n || removed[v]) return false;  // malformed cut
        removed[v] = 1;
    }
    int start = -1;
    int survivors = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            ++survivors;
            if (start < 0) start = v;
        }
    if (survivors < 2) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int i = 0; i < g.out_degree(v); ++i) {
            int w = g.head(v, i);
            if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached < survivors;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || !is_vertex_cut(g, std::span<const int>{});
}

}  // namespace vc
