#include "oracles.hpp"

#include <doctest.h>

#include <erogers/errors.hpp>
#include <erogers/search.hpp>
#include <erogers/subgraph.hpp>

#include <cmath>

using namespace erogers;

TEST_SUITE("independent_set")
{
    TEST_CASE("worked examples")
    {
        auto c5 = max_independent_set(graphs::cycle(5));
        CHECK(c5.size() == 2);
        CHECK(c5.status == Optimality::Optimal);
        CHECK(max_independent_set(graphs::petersen()).size() == 4);
        CHECK(max_independent_set(graphs::complete(7)).size() == 1);
        CHECK(max_independent_set(Graph(0)).size() == 0);
    }

    TEST_CASE("agrees with subset enumeration and meets the Turán floor")
    {
        SeededRng rng(1, "mis");
        for (int trial = 0; trial < 150; ++trial) {
            int n = 1 + static_cast<int>(rng.below(14));
            auto g = oracle::random_graph(n, rng.uniform01(), rng);
            auto r = max_independent_set(g);
            CHECK(r.status == Optimality::Optimal);
            CHECK(is_independent(g, r.set));
            CHECK(r.size() == oracle::independence_number(g));
            auto greedy = greedy_independent_set(g);
            CHECK(is_independent(g, greedy));
            CHECK(greedy.count() * (g.max_degree() + 1) >= n);
        }
    }

    TEST_CASE("tiny node budget gives a lower bound that is still independent")
    {
        auto g = graphs::blowup(graphs::cycle(7), 6);
        auto r = max_independent_set(g, Budget::nodes(3));
        CHECK(r.status == Optimality::LowerBound);
        CHECK(is_independent(g, r.set));
        CHECK(r.size() * (g.max_degree() + 1) >= g.order());
    }
}

TEST_SUITE("max_f_free_subset")
{
    TEST_CASE("worked examples")
    {
        auto r = max_f_free_subset(graphs::cycle(5), graphs::path(3));
        CHECK(r.size() == 3);
        CHECK(r.status == Optimality::Optimal);
        CHECK(max_f_free_subset(graphs::complete(4), graphs::complete(2)).size() == 1);
        CHECK_THROWS_AS(max_f_free_subset(graphs::cycle(5), graphs::empty(3)), InputError);
    }

    TEST_CASE("F = K2 matches the independence number without the shortcut")
    {
        SeededRng rng(2, "k2");
        FFreeOptions no_shortcut{false};
        for (int trial = 0; trial < 200; ++trial) {
            int n = 1 + static_cast<int>(rng.below(12));
            auto g = oracle::random_graph(n, rng.uniform01(), rng);
            auto a = max_f_free_subset(g, graphs::complete(2), {}, no_shortcut);
            auto b = max_independent_set(g);
            CHECK(a.size() == b.size());
            CHECK(a.status == Optimality::Optimal);
        }
    }

    TEST_CASE("agrees with subset enumeration for small patterns")
    {
        SeededRng rng(3, "ffree");
        std::vector<Graph> patterns{graphs::path(3), graphs::complete(3), graphs::cycle(4), graphs::complete_bipartite(1, 3),
            graphs::cycle(5)};
        for (int trial = 0; trial < 120; ++trial) {
            int n = 1 + static_cast<int>(rng.below(10));
            auto g = oracle::random_graph(n, 0.3 + 0.5 * rng.uniform01(), rng);
            auto & f = patterns[rng.below(patterns.size())];
            auto r = max_f_free_subset(g, f);
            CHECK(r.size() == oracle::max_f_free(g, f));
            CHECK(is_f_free_set(g, f, r.set));
        }
    }
}

TEST_SUITE("cycles")
{
    TEST_CASE("worked examples")
    {
        CHECK(count_k_cycles_through(graphs::complete(4), 0, 3) == 3);
        for (int v = 0; v < 10; ++v)
            CHECK(count_k_cycles_through(graphs::petersen(), v, 5) == 6);
        CHECK(count_k_cycles_through(graphs::cycle(6), 2, 6) == 1);
        CHECK_THROWS_AS(count_k_cycles_through(graphs::cycle(6), 0, 2), InputError);
        CHECK_THROWS_AS(count_k_cycles_through(graphs::cycle(6), 0, 13), InputError);
    }

    TEST_CASE("counts and orderings agree with walk enumeration")
    {
        SeededRng rng(4, "cycles");
        for (int trial = 0; trial < 80; ++trial) {
            int n = 3 + static_cast<int>(rng.below(7));
            auto g = oracle::random_graph(n, 0.5, rng);
            int k = 3 + static_cast<int>(rng.below(std::min(n, 7) - 2));
            long long total = 0;
            for (int v = 0; v < n; ++v) {
                long long c = count_k_cycles_through(g, v, k);
                CHECK(c == oracle::cycles_through(g, v, k));
                total += c;
                for (auto & cyc : list_k_cycles_through(g, v, k)) {
                    CHECK(cyc.front() == v);
                    CHECK(cyc[1] < cyc.back());
                    for (int i = 0; i < k; ++i)
                        CHECK(g.adjacent(cyc[i], cyc[(i + 1) % k]));
                }
            }
            CHECK(static_cast<long long>(list_k_cycles(g, k).size()) * k == total);
        }
    }

    TEST_CASE("cycle hypergraph of K4")
    {
        auto h = cycle_hypergraph(graphs::complete(4), 3);
        CHECK(h.size() == 4);
        CHECK(h.uniformity() == 3);
        // C4 on K4: three 4-cycles share the single vertex set.
        CHECK(cycle_hypergraph(graphs::complete(4), 4).size() == 1);
    }
}

TEST_SUITE("spencer")
{
    TEST_CASE("single edge")
    {
        auto r = spencer_independent_set(Hypergraph(4, {{0, 1, 2, 3}}, 4), SeededRng(1), 20);
        CHECK(r.set.count() == 3);
        CHECK(r.bound == doctest::Approx(3.0));
    }

    TEST_CASE("complete graph as a 2-uniform hypergraph")
    {
        std::vector<HyperEdge> edges;
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v)
                edges.push_back({u, v});
        auto r = spencer_independent_set(Hypergraph(8, edges, 2), SeededRng(2), 30);
        CHECK(r.set.count() == 1);
        CHECK(r.bound <= 1.0);
    }

    TEST_CASE("edgeless hypergraph returns every vertex")
    {
        auto r = spencer_independent_set(Hypergraph(5, {}, 3), SeededRng(3), 5);
        CHECK(r.set.count() == 5);
    }

    TEST_CASE("random 3-uniform n = 100, |E| = 200")
    {
        SeededRng rng(5, "spencer-input");
        std::set<HyperEdge> edges;
        while (edges.size() < 200)
            edges.insert(rng.sample_subset(100, 3));
        Hypergraph h(100, {edges.begin(), edges.end()}, 3);
        auto r = spencer_independent_set(h, SeededRng(6), 50);
        CHECK(is_hypergraph_independent(h, r.set));
        CHECK(r.average_degree == doctest::Approx(6.0));
        CHECK(r.bound == doctest::Approx(2.0 / 3.0 * 100 / std::sqrt(6.0)));
        CHECK(r.set.count() >= 27);
        CHECK(r.trial_sizes.size() == 50);
    }
}

namespace {

Graph bipartite(int m, const std::function<bool(int, int)> & keep)
{
    Graph g(2 * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (keep(a, b))
                g.add_edge(a, m + b);
    return g;
}

VertexSet range(int n, int from, int to)
{
    VertexSet s(n);
    for (int v = from; v < to; ++v)
        s.insert(v);
    return s;
}

} // namespace

TEST_SUITE("dependent_random_choice")
{
    TEST_CASE("complete bipartite: Z = Y")
    {
        int m = 20;
        auto g = bipartite(m, [](int, int) { return true; });
        auto x = range(2 * m, 0, m), y = range(2 * m, m, 2 * m);
        auto r = dependent_random_choice(g, x, y, 3, SeededRng(1), 5);
        CHECK(r.gamma == doctest::Approx(1.0));
        CHECK(r.z == y);
        CHECK(r.target_met);
        CHECK_FALSE(find_drc_violation(g, x, r.z, r.threshold));
    }

    TEST_CASE("complete minus one edge, s = 1")
    {
        int m = 10;
        auto g = bipartite(m, [](int a, int b) { return a != 0 || b != 0; });
        auto x = range(2 * m, 0, m), y = range(2 * m, m, 2 * m);
        auto r = dependent_random_choice(g, x, y, 1, SeededRng(2), 10);
        CHECK_FALSE(find_drc_violation(g, x, r.z, r.threshold));
        CHECK(r.z.count() >= m - 2);
        // Exhaustive pair audit, counted directly.
        auto zs = r.z.members();
        for (std::size_t i = 0; i < zs.size(); ++i)
            for (std::size_t j = i + 1; j < zs.size(); ++j) {
                int common = 0;
                for (int v = 0; v < m; ++v)
                    common += g.adjacent(v, zs[i]) && g.adjacent(v, zs[j]);
                CHECK(common >= r.threshold);
            }
    }

    TEST_CASE("random bipartite density 0.3")
    {
        SeededRng rng(3, "drc-input");
        int m = 200;
        auto g = bipartite(m, [&](int, int) { return rng.bernoulli(0.3); });
        auto x = range(2 * m, 0, m), y = range(2 * m, m, 2 * m);
        auto r = dependent_random_choice(g, x, y, 3, SeededRng(4), 10);
        CHECK(r.cross_edges == count_cross_edges(g, x, y));
        CHECK_FALSE(find_drc_violation(g, x, r.z, r.threshold));
        CHECK(r.to_json().contains("target_met"));
    }

    TEST_CASE("preconditions")
    {
        auto g = graphs::complete(4);
        CHECK_THROWS_AS(dependent_random_choice(g, VertexSet(4, {0, 1}), VertexSet(4, {1, 2}), 2, SeededRng(1), 1),
            InputError);
        CHECK_THROWS_AS(dependent_random_choice(Graph(4), VertexSet(4, {0, 1}), VertexSet(4, {2, 3}), 2, SeededRng(1), 1),
            InputError);
    }
}

TEST_SUITE("dense_pair")
{
    TEST_CASE("K4, k = 3")
    {
        auto p = ckprop_dense_pair(graphs::complete(4), 0, 3);
        CHECK(p.cross_edges > 0);
        CHECK(p.cross_edges == count_cross_edges(graphs::complete(4), p.x, p.y));
        auto nb = graphs::complete(4).neighbours(0);
        CHECK(p.x.is_subset_of(nb));
        CHECK(p.y.is_subset_of(nb));
    }

    TEST_CASE("K_{3,3,3}, k = 3")
    {
        auto g = graphs::complete_multipartite({3, 3, 3});
        auto p = ckprop_dense_pair(g, 0, 3);
        CHECK(p.density == doctest::Approx(1.0));
        CHECK(p.statement_density_ok);
        CHECK(p.proof_density_ok);
        CHECK_FALSE(p.x.intersects(p.y));
    }

    TEST_CASE("a single cycle through v0")
    {
        auto p = ckprop_dense_pair(graphs::cycle(6), 0, 6);
        CHECK(p.cycles == 1);
        CHECK(p.x.count() == 1);
        CHECK(p.y.count() == 1);
        CHECK(p.cross_edges == 1);
    }

    TEST_CASE("no cycle is an input error")
    {
        CHECK_THROWS_AS(ckprop_dense_pair(graphs::path(5), 0, 3), InputError);
    }

    TEST_CASE("recount on random graphs")
    {
        SeededRng rng(6, "dense");
        for (int trial = 0; trial < 30; ++trial) {
            auto g = oracle::random_graph(14, 0.45, rng);
            for (int k : {4, 5}) {
                int v0 = static_cast<int>(rng.below(14));
                if (count_k_cycles_through(g, v0, k) == 0)
                    continue;
                auto p = ckprop_dense_pair(g, v0, k);
                CHECK(p.cross_edges == count_cross_edges(g, p.x, p.y));
                CHECK(p.cross_edges > 0);
                CHECK(p.density >= 0.0);
                CHECK(p.density <= 1.0);
                for (auto & lvl : p.trace)
                    CHECK(lvl.cycles_after <= lvl.cycles_before);
            }
        }
    }
}

TEST_SUITE("sunflower")
{
    TEST_CASE("worked examples")
    {
        auto a = erdos_rado_sunflower({{1, 2}, {3, 4}, {5, 6}}, 3);
        REQUIRE(a.sunflower);
        CHECK(a.sunflower->core.empty());
        CHECK(a.sunflower->petals.size() == 3);
        auto b = erdos_rado_sunflower({{1, 2}, {1, 3}, {1, 4}}, 3);
        REQUIRE(b.sunflower);
        CHECK(b.sunflower->core == std::vector<int>{1});
        CHECK_FALSE(erdos_rado_sunflower({{1, 2}, {2, 3}}, 3).sunflower);
    }

    TEST_CASE("unequal sizes are rejected")
    {
        CHECK_THROWS_AS(erdos_rado_sunflower({{1, 2}, {1, 2, 3}}, 2), InputError);
    }

    TEST_CASE("families above t!(m-1)^t always yield a sunflower")
    {
        SeededRng rng(7, "sunflower");
        for (int trial = 0; trial < 300; ++trial) {
            std::set<std::vector<int>> fam;
            while (fam.size() < 9)
                fam.insert(rng.sample_subset(8, 2));
            std::vector<std::vector<int>> family(fam.begin(), fam.end());
            auto r = erdos_rado_sunflower(family, 3);
            REQUIRE(r.sunflower);
            CHECK(oracle::is_sunflower(r.sunflower->petals));
            CHECK(r.sunflower->petals.size() == 3);
            for (auto & p : r.sunflower->petals)
                CHECK(fam.count(p) == 1);
        }
    }

    TEST_CASE("found sunflowers exist according to the exhaustive search")
    {
        SeededRng rng(8, "sunflower-small");
        for (int trial = 0; trial < 200; ++trial) {
            std::set<std::vector<int>> fam;
            int size = 2 + static_cast<int>(rng.below(7));
            while (static_cast<int>(fam.size()) < size)
                fam.insert(rng.sample_subset(7, 3));
            std::vector<std::vector<int>> family(fam.begin(), fam.end());
            auto r = erdos_rado_sunflower(family, 3);
            if (r.sunflower)
                CHECK(oracle::has_sunflower(family, 3));
        }
    }
}
