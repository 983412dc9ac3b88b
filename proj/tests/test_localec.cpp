#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "vc/local_ec.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace vc;

namespace {

const LocalVariant kAllVariants[] = {LocalVariant::local1, LocalVariant::local1_plus,
                                     LocalVariant::local2, LocalVariant::local2_plus};

// K5 joined to a much larger K25 by 2 bridges; seed in the small side.
// The imbalance matters: the sampling argument needs the stop threshold to
// stay below the total arc count, otherwise rounds exhaust the whole graph
// and trip the guard instead of aborting.
struct CliquePair {
    Graph g;
    std::vector<int> side_a;
    long long nu;
};

CliquePair clique_pair() {
    auto tc = fixtures::two_clique(5, 25, 2);
    CliquePair cp;
    cp.nu = tc.g.volume_out(tc.side_a);
    cp.g = std::move(tc.g);
    cp.side_a = std::move(tc.side_a);
    return cp;
}

}  // namespace

TEST_CASE("returned side always has small boundary, graph restored", "[localec]") {
    Rng rng(606);
    int found_count = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + (int)uniform_ll(rng, 0, 6);
        auto g = trial % 4 == 0 ? fixtures::random_graph(n, 0.4, rng)
                                : fixtures::random_connected_graph(n, 0.4, rng);
        auto before = g.adjacency_snapshot();
        LocalEcParams params;
        params.x = (int)uniform_ll(rng, 0, n - 1);
        params.nu = uniform_ll(rng, 1, 30);
        params.k = (int)uniform_ll(rng, 1, 4);
        for (auto variant : kAllVariants) {
            LocalEc engine(g, variant);
            auto res = engine.run(params, rng);
            REQUIRE(g.adjacency_snapshot() == before);
            REQUIRE(res.iterations >= 1);
            REQUIRE(res.iterations <= params.k);
            if (!res.found) {
                REQUIRE(res.cut_side.empty());
                continue;
            }
            ++found_count;
            REQUIRE_FALSE(res.cut_side.empty());
            REQUIRE((int)res.cut_side.size() < n);
            REQUIRE(std::find(res.cut_side.begin(), res.cut_side.end(), params.x) !=
                    res.cut_side.end());
            REQUIRE(oracle::edge_boundary(g, res.cut_side) < params.k);
        }
    }
    REQUIRE(found_count > 0);
}

TEST_CASE("complete graph yields no local cut", "[localec]") {
    auto g = fixtures::complete_graph(5);
    LocalEcParams params;
    params.nu = 20;
    params.k = 4;
    for (auto variant : kAllVariants) {
        for (int seed = 0; seed < 20; ++seed) {
            Rng rng(derive_seed(1000, seed));
            params.x = seed % 5;
            auto res = run_local_ec(g, variant, params, rng);
            REQUIRE_FALSE(res.found);
        }
    }
}

TEST_CASE("stranded component is returned via normal termination", "[localec]") {
    // triangle plus an unreachable vertex: the DFS can exhaust its component
    auto g = fixtures::make_graph(4, {{0, 1}, {1, 2}, {2, 0}});
    LocalEcParams params;
    params.x = 0;
    params.nu = 20;
    params.k = 3;
    std::vector<int> want{0, 1, 2};
    for (auto variant : kAllVariants) {
        int found = 0;
        for (int seed = 0; seed < 100; ++seed) {
            Rng rng(derive_seed(2000, seed));
            auto res = run_local_ec(g, variant, params, rng);
            if (res.found) {
                ++found;
                auto side = res.cut_side;
                std::sort(side.begin(), side.end());
                REQUIRE(side == want);
            }
        }
        // the deterministic final round cannot abort for the volume-stop variants
        if (variant == LocalVariant::local1 || variant == LocalVariant::local1_plus)
            REQUIRE(found == 100);
        else
            REQUIRE(found >= 90);
    }
}

TEST_CASE("clique pair side is recovered often enough", "[localec]") {
    auto cp = clique_pair();
    REQUIRE(cp.nu == 22);
    REQUIRE(oracle::edge_boundary(cp.g, cp.side_a) == 2);
    LocalEcParams params;
    params.x = 0;
    params.nu = cp.nu;
    params.k = 3;

    for (auto variant : kAllVariants) {
        SECTION(variant_name(variant)) {
            int found = 0;
            const int trials = 100;
            for (int seed = 0; seed < trials; ++seed) {
                Rng rng(derive_seed(3000 + (int)variant, seed));
                auto res = run_local_ec(cp.g, variant, params, rng);
                if (res.found) {
                    ++found;
                    REQUIRE(oracle::edge_boundary(cp.g, res.cut_side) < 3);
                }
            }
            // target: miss rate at most 1/2; allow a wide margin at 100 trials
            double sigma = std::sqrt(0.5 * 0.5 / trials);
            REQUIRE((double)(trials - found) / trials <= 0.5 + 4 * sigma);
        }
    }
}

TEST_CASE("budgets beyond the whole graph trip the guard, not a bogus cut", "[localec]") {
    // symmetric K5+K5: total volume 44 is below the new-arc budget 3*nu = 66,
    // so every local2/local2+ round exhausts the graph and must yield bottom
    auto tc = fixtures::two_clique(5, 5, 2);
    LocalEcParams params;
    params.x = 0;
    params.nu = tc.g.volume_out(tc.side_a);
    params.k = 3;
    REQUIRE(params.nu == 22);
    for (auto variant : {LocalVariant::local2, LocalVariant::local2_plus})
        for (int seed = 0; seed < 50; ++seed) {
            Rng rng(derive_seed(4500, seed));
            auto res = run_local_ec(tc.g, variant, params, rng);
            REQUIRE_FALSE(res.found);
        }
}

TEST_CASE("reversal target rarely lands in the hidden side at factor 8", "[localec]") {
    auto cp = clique_pair();
    LocalEcParams params;
    params.x = 0;
    params.nu = cp.nu;
    params.k = 3;
    params.budget_factor = 8;
    std::vector<char> in_a(cp.g.vertex_count(), 0);
    for (int v : cp.side_a) in_a[v] = 1;

    for (auto variant : kAllVariants) {
        SECTION(variant_name(variant)) {
            long long events = 0, hits = 0;
            std::vector<LocalIterationStats> trace;
            LocalEc engine(cp.g, variant);
            engine.trace = &trace;
            for (int seed = 0; seed < 400; ++seed) {
                Rng rng(derive_seed(4000 + (int)variant, seed));
                engine.run(params, rng);
                for (const auto& it : trace) {
                    ++events;  // every round draws a target position
                    if (it.aborted && in_a[it.y]) ++hits;
                }
            }
            REQUIRE(events > 0);
            double p = 1.0 / (8.0 * params.k);
            double sigma = std::sqrt(p * (1 - p) / (double)events);
            REQUIRE((double)hits / (double)events <= p + 3 * sigma);
        }
    }
}

TEST_CASE("new-arc budget bounds unique edge work", "[localec]") {
    Rng rng(808);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = fixtures::random_connected_graph(10, 0.5, rng);
        LocalEcParams params;
        params.x = (int)uniform_ll(rng, 0, 9);
        params.nu = uniform_ll(rng, 1, 12);
        params.k = (int)uniform_ll(rng, 1, 4);
        auto res = run_local_ec(g, LocalVariant::local2, params, rng);
        long long budget = std::llround(3.0 * params.nu);
        REQUIRE(res.counters.unique_edges <= (long long)params.k * budget + params.k);
    }
}

TEST_CASE("capacity table conserves work across iterations", "[localec]") {
    Rng rng(909);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = fixtures::random_connected_graph(10, 0.5, rng);
        LocalEcParams params;
        params.x = (int)uniform_ll(rng, 0, 9);
        params.nu = uniform_ll(rng, 1, 12);
        params.k = (int)uniform_ll(rng, 1, 4);
        LocalEc engine(g, LocalVariant::local2_plus);
        engine.run(params, rng);
        const auto& cap = engine.capacities();
        long long budget = std::llround(3.0 * params.nu);
        long long spent = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            REQUIRE(cap[v] >= 0);
            REQUIRE(cap[v] <= g.out_degree(v));
            spent += g.out_degree(v) - cap[v];
        }
        REQUIRE(spent <= (long long)params.k * budget);
    }
}

TEST_CASE("identical seed reproduces outcome, counters, and trace", "[localec]") {
    auto cp = clique_pair();
    LocalEcParams params;
    params.x = 1;
    params.nu = cp.nu;
    params.k = 3;
    for (auto variant : kAllVariants) {
        std::vector<LocalIterationStats> ta, tb;
        LocalEc ea(cp.g, variant), eb(cp.g, variant);
        ea.trace = &ta;
        eb.trace = &tb;
        Rng ra(111), rb(111);
        auto a = ea.run(params, ra);
        auto b = eb.run(params, rb);
        REQUIRE(a.found == b.found);
        REQUIRE(a.cut_side == b.cut_side);
        REQUIRE(a.iterations == b.iterations);
        REQUIRE(a.counters.edge_accesses == b.counters.edge_accesses);
        REQUIRE(a.counters.unique_edges == b.counters.unique_edges);
        REQUIRE(a.counters.unique_vertices == b.counters.unique_vertices);
        REQUIRE(ta.size() == tb.size());
        for (std::size_t i = 0; i < ta.size(); ++i) {
            REQUIRE(ta[i].tau == tb[i].tau);
            REQUIRE(ta[i].y == tb[i].y);
            REQUIRE(ta[i].aborted == tb[i].aborted);
            REQUIRE(ta[i].edge_accesses == tb[i].edge_accesses);
        }
    }
}

TEST_CASE("counter snapshot satisfies the access ordering", "[localec]") {
    auto cp = clique_pair();
    LocalEcParams params;
    params.x = 0;
    params.nu = cp.nu;
    params.k = 3;
    for (auto variant : kAllVariants) {
        Rng rng(515);
        auto res = run_local_ec(cp.g, variant, params, rng);
        REQUIRE(res.counters.edge_accesses >= res.counters.unique_edges);
        REQUIRE(res.counters.unique_edges + 1 >= res.counters.unique_vertices);
        REQUIRE(res.counters.unique_vertices >= 1);
    }
}
