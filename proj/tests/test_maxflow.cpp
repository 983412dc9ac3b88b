#include <catch2/catch_amalgamated.hpp>

#include "vc/max_flow.hpp"
#include "vc/split_graph.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace vc;

namespace {

// independent check: does removing `cut` leave x and y in different components?
bool separates(const Graph& g, const std::vector<int>& cut, int x, int y) {
    std::vector<char> dead(g.vertex_count(), 0);
    for (int v : cut) {
        if (v == x || v == y) return false;
        dead[v] = 1;
    }
    std::vector<char> vis(g.vertex_count(), 0);
    std::vector<int> stack{x};
    vis[x] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int i = 0; i < g.out_degree(v); ++i) {
            int w = g.head(v, i);
            if (dead[w] || vis[w]) continue;
            vis[w] = 1;
            stack.push_back(w);
        }
    }
    return !vis[y];
}

}  // namespace

TEST_CASE("pairwise flow on fixed shapes", "[maxflow]") {
    SECTION("path ends") {
        auto g = fixtures::path_graph(5);
        SplitGraph sg(g);
        auto r = max_flow_vc(sg, 0, 4, 10);
        REQUIRE(r.value == 1);
        REQUIRE(r.cut.has_value());
        REQUIRE(r.cut->size() == 1);
        REQUIRE(separates(g, *r.cut, 0, 4));
    }
    SECTION("opposite corners of a cycle") {
        auto g = fixtures::cycle_graph(6);
        SplitGraph sg(g);
        auto r = max_flow_vc(sg, 0, 3, 10);
        REQUIRE(r.value == 2);
        REQUIRE(r.cut.has_value());
        REQUIRE(r.cut->size() == 2);
        REQUIRE(separates(g, *r.cut, 0, 3));
    }
    SECTION("complete graph minus one edge") {
        auto g = fixtures::complete_graph(5);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                if (!(u == 0 && v == 4)) edges.emplace_back(u, v);
        auto h = fixtures::make_graph(5, edges);
        SplitGraph sg(h);
        auto r = max_flow_vc(sg, 0, 4, 10);
        REQUIRE(r.value == 3);
        REQUIRE(r.cut.has_value());
        REQUIRE(separates(h, *r.cut, 0, 4));
    }
}

TEST_CASE("capped flow stops early without a cut", "[maxflow]") {
    auto g = fixtures::cycle_graph(6);
    SplitGraph sg(g);
    auto r = max_flow_vc(sg, 0, 3, 2);
    REQUIRE(r.value == 2);
    REQUIRE_FALSE(r.cut.has_value());
    auto r1 = max_flow_vc(sg, 0, 3, 1);
    REQUIRE(r1.value == 1);
    REQUIRE_FALSE(r1.cut.has_value());
}

TEST_CASE("flow value matches brute-force vertex connectivity", "[maxflow]") {
    Rng rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + (int)uniform_ll(rng, 0, 5);
        auto g = fixtures::random_connected_graph(n, 0.45, rng);
        SplitGraph sg(g);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y || g.find_arc(x, y) >= 0) continue;
                int want = oracle::brute_kappa_xy(g, x, y);
                auto r = max_flow_vc(sg, x, y, n);
                REQUIRE(r.value == want);
                REQUIRE(r.cut.has_value());
                REQUIRE((int)r.cut->size() == r.value);
                REQUIRE(separates(g, *r.cut, x, y));
                ++checked;
            }
    }
    REQUIRE(checked > 100);
}

TEST_CASE("flow leaves the split graph untouched", "[maxflow]") {
    Rng rng(31337);
    auto g = fixtures::random_connected_graph(8, 0.4, rng);
    SplitGraph sg(g);
    auto before = sg.graph().adjacency_snapshot();
    for (int rep = 0; rep < 10; ++rep) {
        int x = (int)uniform_ll(rng, 0, 7), y = (int)uniform_ll(rng, 0, 7);
        if (x == y || g.find_arc(x, y) >= 0) continue;
        max_flow_vc(sg, x, y, 3);
        REQUIRE(sg.graph().adjacency_snapshot() == before);
    }
}

TEST_CASE("flow run reports its own access counters", "[maxflow]") {
    auto g = fixtures::cycle_graph(6);
    SplitGraph sg(g);
    max_flow_vc(sg, 0, 3, 10);
    auto c = sg.graph().counters();
    REQUIRE(c.edge_accesses > 0);
    REQUIRE(c.edge_accesses >= c.unique_edges);
    REQUIRE(c.unique_edges + 1 >= c.unique_vertices);

    // each call resets: a cheap call after an expensive one reports less work
    max_flow_vc(sg, 0, 3, 1);
    auto c2 = sg.graph().counters();
    REQUIRE(c2.edge_accesses < c.edge_accesses);
}
