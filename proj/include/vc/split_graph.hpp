#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vc/graph.hpp"

namespace vc {

// Vertex-splitting reduction: every vertex v becomes v_in -> v_out with a
// unit internal arc, and each arc (u, v) of the base graph becomes the
// external arc u_out -> v_in.  Edge-disjoint out->in paths in the split
// graph correspond to internally vertex-disjoint paths in the base graph.
class SplitGraph {
public:
    SplitGraph() = default;

    explicit SplitGraph(const Graph& base) : n_base_(base.vertex_count()) {
        graph_ = Graph(2 * n_base_);
        for (int v = 0; v < n_base_; ++v) graph_.add_arc(in_vertex(v), out_vertex(v));
        for (int u = 0; u < n_base_; ++u)
            for (int i = 0; i < base.out_degree(u); ++i)
                graph_.add_arc(out_vertex(u), in_vertex(base.head(u, i)));
    }

    static int in_vertex(int v) { return 2 * v; }
    static int out_vertex(int v) { return 2 * v + 1; }
    static int base_vertex(int w) { return w / 2; }
    static bool is_in_vertex(int w) { return (w & 1) == 0; }

    Graph& graph() { return graph_; }
    const Graph& graph() const { return graph_; }
    int base_vertex_count() const { return n_base_; }

private:
    int n_base_ = 0;
    Graph graph_;
};

inline SplitGraph build_split_graph(const Graph& base) { return SplitGraph(base); }

// Project one side of a split-graph edge cut back to a vertex cut of the
// base graph: v is cut iff its internal arc crosses the boundary.
inline std::vector<int> map_split_cut_to_vertex_cut(const SplitGraph& sg,
                                                    std::span<const int> split_side) {
    std::vector<char> in_side(sg.graph().vertex_count(), 0);
    for (int w : split_side) in_side[w] = 1;
    std::vector<int> cut;
    for (int v = 0; v < sg.base_vertex_count(); ++v)
        if (in_side[SplitGraph::in_vertex(v)] && !in_side[SplitGraph::out_vertex(v)])
            cut.push_back(v);
    return cut;
}

}  // namespace vc
