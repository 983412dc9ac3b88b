#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "vc/generate.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace vc;

namespace {

void check_planted_shape(const PlantedInstance& inst, const PlantedParams& p) {
    const Graph& g = inst.graph;
    REQUIRE(g.vertex_count() == p.n);
    REQUIRE((int)inst.triple.left.size() == p.size_l);
    REQUIRE((int)inst.triple.separator.size() == p.size_s);
    REQUIRE((int)inst.triple.right.size() == p.n - p.size_l - p.size_s);

    std::vector<char> side(p.n, 0);  // 0 = R, 1 = L, 2 = S
    for (int v : inst.triple.left) side[v] = 1;
    for (int v : inst.triple.separator) side[v] = 2;

    // no edge may join the hidden side to the rest directly
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int i = 0; i < g.out_degree(u); ++i) {
            int v = g.head(u, i);
            bool lr = (side[u] == 1 && side[v] == 0) || (side[u] == 0 && side[v] == 1);
            REQUIRE_FALSE(lr);
        }
    // union of bounded spanning forests
    REQUIRE(g.arc_count() <= 2LL * p.n * p.k_gen);
    REQUIRE(oracle::is_cut(g, inst.triple.separator));
}

}  // namespace

TEST_CASE("planted separator is the unique minimum cut", "[generate]") {
    PlantedParams p;
    p.n = 12;
    p.size_l = 3;
    p.size_s = 2;
    p.k_gen = 6;
    for (int seed = 0; seed < 10; ++seed) {
        Rng rng(derive_seed(42, seed));
        auto inst = generate_planted(p, rng);
        check_planted_shape(inst, p);
        REQUIRE(oracle::brute_kappa(inst.graph) == 2);
        REQUIRE(oracle::count_cuts_of_size(inst.graph, 2) == 1);
    }
}

TEST_CASE("bad planted parameters are refused", "[generate]") {
    Rng rng(1);
    PlantedParams p;
    p.n = 10;
    p.size_l = 2;
    p.size_s = 3;
    p.k_gen = 3;  // must exceed the separator size
    REQUIRE_THROWS_AS(generate_planted(p, rng), std::invalid_argument);
    p.k_gen = 8;
    p.size_l = 7;  // L + S fills the graph
    REQUIRE_THROWS_AS(generate_planted(p, rng), std::invalid_argument);
    p.size_l = 0;
    REQUIRE_THROWS_AS(generate_planted(p, rng), std::invalid_argument);
}

TEST_CASE("planted generation is seed-deterministic", "[generate]") {
    PlantedParams p;
    p.n = 40;
    p.size_l = 4;
    p.size_s = 3;
    p.k_gen = 8;
    Rng a(9), b(9);
    auto ia = generate_planted(p, a);
    auto ib = generate_planted(p, b);
    REQUIRE(ia.graph.adjacency_snapshot() == ib.graph.adjacency_snapshot());
    REQUIRE(ia.triple.separator == ib.triple.separator);
    REQUIRE(ia.triple.left == ib.triple.left);
}

TEST_CASE("hidden side keeps its full degree after sparsification", "[generate]") {
    PlantedParams p;
    p.n = 400;
    p.size_l = 5;
    p.size_s = 8;
    p.k_gen = 12;
    Rng rng(77);
    auto inst = generate_planted(p, rng);
    check_planted_shape(inst, p);
    // every hidden-side vertex sees all of L and S: 4 + 8 edges, all retained
    for (int v : inst.triple.left) REQUIRE(inst.graph.out_degree(v) == 12);
}

TEST_CASE("larger planted instance stays below the edge budget", "[generate]") {
    PlantedParams p;
    p.n = 2000;
    p.size_l = 5;
    p.size_s = 8;
    p.k_gen = 24;
    Rng rng(123);
    auto inst = generate_planted(p, rng);
    check_planted_shape(inst, p);
}

TEST_CASE("dense core extraction on fixed shapes", "[generate]") {
    SECTION("complete graph survives intact") {
        auto g = fixtures::complete_graph(5);
        std::vector<int> ids;
        auto core = k_core(g, 4, &ids);
        REQUIRE(core.vertex_count() == 5);
        REQUIRE(core.arc_count() == 20);
        REQUIRE(ids.size() == 5);
    }
    SECTION("star collapses entirely") {
        auto g = fixtures::star_graph(6);
        auto core = k_core(g, 2);
        REQUIRE(core.vertex_count() == 0);
    }
    SECTION("pendant vertices peel away recursively") {
        // triangle with a tail 3-4-5: the tail unravels under k=2
        auto g = fixtures::make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}});
        std::vector<int> ids;
        auto core = k_core(g, 2, &ids);
        REQUIRE(core.vertex_count() == 3);
        std::sort(ids.begin(), ids.end());
        REQUIRE(ids == std::vector<int>{0, 1, 2});
    }
}

TEST_CASE("dense core matches an independent peel", "[generate]") {
    Rng rng(31415);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 5 + (int)uniform_ll(rng, 0, 9);
        auto g = fixtures::random_graph(n, 0.35, rng);
        int k = 2 + (int)uniform_ll(rng, 0, 2);

        // reference: peel to a fixpoint on an adjacency matrix, then take the
        // biggest remaining component
        auto mg = oracle::mask_graph(g);
        std::uint64_t alive = (n == 64) ? ~0ull : ((1ull << n) - 1);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                if (!(alive >> v & 1)) continue;
                if (__builtin_popcountll(mg.adj[v] & alive) < k) {
                    alive &= ~(1ull << v);
                    changed = true;
                }
            }
        }
        std::uint64_t best_comp = 0;
        std::uint64_t rest = alive;
        while (rest) {
            int s = __builtin_ctzll(rest);
            std::uint64_t comp = 1ull << s, frontier = comp;
            while (frontier) {
                std::uint64_t next = 0;
                std::uint64_t f = frontier;
                while (f) {
                    int v = __builtin_ctzll(f);
                    f &= f - 1;
                    next |= mg.adj[v] & alive & ~comp;
                }
                comp |= next;
                frontier = next;
            }
            if (__builtin_popcountll(comp) > __builtin_popcountll(best_comp)) best_comp = comp;
            rest &= ~comp;
        }

        std::vector<int> ids;
        auto core = k_core(g, k, &ids);
        std::uint64_t got = 0;
        for (int v : ids) got |= 1ull << v;
        if (core.vertex_count() == 0) {
            REQUIRE(best_comp == 0);
            continue;
        }
        REQUIRE(__builtin_popcountll(got) == core.vertex_count());
        REQUIRE(__builtin_popcountll(best_comp) == core.vertex_count());
        // when several components tie, any largest one is acceptable
        if (got != best_comp) {
            REQUIRE(__builtin_popcountll(got & alive) == core.vertex_count());
        }
        // induced-subgraph audit against the original, both directions
        for (int v = 0; v < core.vertex_count(); ++v) {
            REQUIRE(core.out_degree(v) >= k);
            for (int i = 0; i < core.out_degree(v); ++i)
                REQUIRE(g.find_arc(ids[v], ids[core.head(v, i)]) >= 0);
        }
        for (int a = 0; a < core.vertex_count(); ++a)
            for (int b = a + 1; b < core.vertex_count(); ++b)
                if (g.find_arc(ids[a], ids[b]) >= 0) REQUIRE(core.find_arc(a, b) >= 0);
        REQUIRE(is_connected(core));
    }
}
