#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vc/graph.hpp"
#include "vc/split_graph.hpp"

namespace vc {

struct FlowResult {
    int value = 0;
    // x-y vertex cut of size == value; absent when value reached the cap.
    std::optional<std::vector<int>> cut;
};

// Bounded unit-capacity max flow between x_out and y_in on a split graph.
// Each augmenting path is found by DFS and then reversed arc-by-arc via the
// journal, which is exactly the unit-capacity residual update.  All
// reversals are undone before returning.
class MaxFlow {
public:
    explicit MaxFlow(SplitGraph& sg)
        : sg_(sg),
          mark_(sg.graph().vertex_count(), 0),
          parent_(sg.graph().vertex_count()),
          parent_arc_(sg.graph().vertex_count()),
          next_arc_(sg.graph().vertex_count(), 0) {}

    // pre: x != y, y not adjacent to x in the base graph, cap >= 1.
    // Returns min(max_flow, cap); on value < cap also returns the cut.
    FlowResult run(int x, int y, int cap) {
        Graph& g = sg_.graph();
        g.reset_counters();
        int s = SplitGraph::out_vertex(x);
        int t = SplitGraph::in_vertex(y);
        VC_CHECK(s != t, "max flow endpoints coincide");
        ReversalJournal journal;
        FlowResult res;
        for (int round = 0; round < cap; ++round) {
            if (!augment(g, s, t, journal)) break;
            ++res.value;
        }
        if (res.value < cap) res.cut = extract_cut(g, s);
        g.undo_all(journal);
        return res;
    }

private:
    // DFS over the current orientation; on reaching t, reverse the tree path
    // s -> t.  Stops the search the moment t is seen.
    bool augment(Graph& g, int s, int t, ReversalJournal& journal) {
        ++epoch_;
        std::vector<int>& stack = stack_;
        stack.clear();
        mark_[s] = epoch_;
        next_arc_[s] = 0;
        g.touch_vertex(s);
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            if (next_arc_[v] >= g.out_degree(v)) {
                stack.pop_back();
                continue;
            }
            int i = next_arc_[v]++;
            int w = g.traverse(v, i);
            if (mark_[w] == epoch_) continue;
            if (w == t) {
                // reverse path arcs from s outward, then the final arc into t
                path_.clear();
                for (int u = v; u != s; u = parent_[u]) path_.push_back(u);
                std::vector<ArcRef> arcs;
                arcs.reserve(path_.size() + 1);
                for (auto it = path_.rbegin(); it != path_.rend(); ++it)
                    arcs.push_back(ArcRef{parent_[*it], parent_arc_[*it]});
                arcs.push_back(ArcRef{v, i});
                for (ArcRef a : arcs) g.reverse_arc(a, journal);
                return true;
            }
            mark_[w] = epoch_;
            parent_[w] = v;
            parent_arc_[w] = i;
            next_arc_[w] = 0;
            g.touch_vertex(w);
            stack.push_back(w);
        }
        return false;
    }

    // Vertices whose in-copy is residual-reachable from s while the out-copy
    // is not.  Saturated external arcs stay forward-traversable (they would
    // have unbounded capacity in the classical reduction), which is what the
    // ghost arcs reinstate: a reversed external u_out -> v_in currently sits
    // in v_in's list and is re-read here as a forward arc.
    std::vector<int> extract_cut(const Graph& g, int s) {
        int n2 = g.vertex_count();
        std::vector<std::vector<int>> ghost(n2);
        for (int v = 0; v < sg_.base_vertex_count(); ++v) {
            int iv = SplitGraph::in_vertex(v);
            for (int i = 0; i < g.out_degree(iv); ++i) {
                int w = g.head(iv, i);
                if (!SplitGraph::is_in_vertex(w) && SplitGraph::base_vertex(w) != v)
                    ghost[w].push_back(iv);
            }
        }
        std::vector<char> reach(n2, 0);
        std::vector<int> stack{s};
        reach[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto visit = [&](int w) {
                if (!reach[w]) {
                    reach[w] = 1;
                    stack.push_back(w);
                }
            };
            for (int i = 0; i < g.out_degree(v); ++i) visit(g.head(v, i));
            for (int w : ghost[v]) visit(w);
        }
        std::vector<int> cut;
        for (int v = 0; v < sg_.base_vertex_count(); ++v)
            if (reach[SplitGraph::in_vertex(v)] && !reach[SplitGraph::out_vertex(v)])
                cut.push_back(v);
        return cut;
    }

    SplitGraph& sg_;
    std::vector<std::uint32_t> mark_;
    std::vector<int> parent_;
    std::vector<int> parent_arc_;
    std::vector<int> next_arc_;
    std::vector<int> stack_;
    std::vector<int> path_;
    std::uint32_t epoch_ = 0;
};

inline FlowResult max_flow_vc(SplitGraph& sg, int x, int y, int cap) {
    MaxFlow mf(sg);
    return mf.run(x, y, cap);
}

}  // namespace vc
