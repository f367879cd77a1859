#include "oracles.hpp"

#include <doctest.h>

#include <erogers/enumerate.hpp>
#include <erogers/errors.hpp>
#include <erogers/pipelines.hpp>
#include <erogers/subgraph.hpp>

#include <cmath>
#include <deque>

using namespace erogers;

namespace {

bool has_cycle_of_length(const Graph & g, const VertexSet & s, int k)
{
    return oracle::embeds(g, graphs::cycle(k), s.members());
}

// Shortest cycle length by BFS from every vertex; 0 if acyclic.
int girth(const Graph & g)
{
    int best = 0;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (! q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : g.neighbours(x).members()) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                } else if (parent[x] != y) {
                    int len = dist[x] + dist[y] + 1;
                    if (best == 0 || len < best)
                        best = len;
                }
            }
        }
    }
    return best;
}

} // namespace

TEST_SUITE("theorem1")
{
    TEST_CASE("EFR(2,5,3) with K2 and C5")
    {
        auto a = theorem1_build(2, 5, 3, graphs::complete(2), SeededRng(7));
        CHECK(a.graph.order() == 50);
        CHECK(a.certificate.verdict("triangle_free") == Verdict::Pass);
        CHECK_FALSE(find_triangle(a.graph));
        auto mfs = a.certificate.measures()["max_f_free_subset"];
        CHECK(mfs["status"] == "optimal");
        CHECK(mfs["size"].get<int>() == max_independent_set(a.graph).size());

        auto b = theorem1_build(2, 5, 3, graphs::cycle(5), SeededRng(7));
        CHECK(b.certificate.verdict("triangle_free") == Verdict::Pass);
        CHECK(b.certificate.verdict("cover_edge_disjoint") == Verdict::Pass);
    }

    TEST_CASE("EFR(2,25,5) with K2 has 2500 vertices")
    {
        auto r = theorem1_build(2, 25, 5, graphs::complete(2), SeededRng(7));
        CHECK(r.graph.order() == 2500);
        CHECK(r.efr.directions.points.size() == 4);
        CHECK(r.certificate.verdict("triangle_free") == Verdict::Pass);
        CHECK(r.certificate.measures()["max_f_free_subset"]["status"] == "skipped");
    }

    TEST_CASE("certificates replay byte for byte")
    {
        auto a = theorem1_build(2, 5, 3, graphs::cycle(5), SeededRng(11));
        auto b = theorem1_build(2, 5, 3, graphs::cycle(5), SeededRng(11));
        auto c = theorem1_build(2, 5, 3, graphs::cycle(5), SeededRng(12));
        CHECK(a.certificate.dump() == b.certificate.dump());
        CHECK(a.certificate.dump() != c.certificate.dump());
    }

    TEST_CASE("F with a triangle is rejected")
    {
        CHECK_THROWS_AS(theorem1_build(2, 5, 3, graphs::complete(3), SeededRng(1)), InputError);
    }
}

TEST_SUITE("ckfree")
{
    TEST_CASE("C7 with k = 3 keeps every vertex")
    {
        auto r = ckfree_subset(graphs::cycle(7), 3, SeededRng(1));
        CHECK(r.set.count() == 7);
        CHECK(r.source == "whole-graph");
    }

    TEST_CASE("Petersen with k = 5")
    {
        auto g = graphs::petersen();
        auto r = ckfree_subset(g, 5, SeededRng(1));
        CHECK(r.set.count() >= 3);
        CHECK_FALSE(has_cycle_of_length(g, r.set, 5));
        CHECK(r.certificate.to_json()["measures"].contains("branch"));
    }

    TEST_CASE("K_{20,20} with k = 4")
    {
        auto g = graphs::complete_bipartite(20, 20);
        auto r = ckfree_subset(g, 4, SeededRng(1));
        CHECK_FALSE(has_cycle_of_length(g, r.set, 4));
        CHECK(r.set.count() >= 20);
    }

    TEST_CASE("forced middle branch runs both bounds")
    {
        auto g = graphs::blowup(graphs::cycle(5), 3);
        CkFreeOptions opt;
        opt.force_branch = "middle";
        opt.respect_delta_cutoff = false;
        for (int k : {4, 5}) {
            auto r = ckfree_subset(g, k, SeededRng(3), opt);
            auto sizes = r.certificate.measures()["candidate_sizes"];
            CHECK(sizes.contains("spencer"));
            CHECK(r.certificate.measures()["log"].contains("drc"));
            CHECK_FALSE(has_cycle_of_length(g, r.set, k));
            CHECK(r.set.count() * (g.max_degree() + 1) >= g.order());
        }
    }

    TEST_CASE("K4 is rejected with a witness")
    {
        try {
            ckfree_subset(graphs::complete(4), 3, SeededRng(1));
            FAIL("expected an input error");
        } catch (const InputError & e) {
            CHECK(e.witness()["clique"].size() == 4);
        }
    }

    TEST_CASE("random K4-free graphs meet the floor and avoid C_k")
    {
        SeededRng rng(9, "ckfree");
        for (int trial = 0; trial < 20; ++trial) {
            auto g = oracle::random_graph(13, 0.35, rng);
            if (find_clique(g, 4))
                continue;
            int k = 3 + static_cast<int>(rng.below(3));
            auto r = ckfree_subset(g, k, SeededRng(trial));
            CHECK_FALSE(has_cycle_of_length(g, r.set, k));
            CHECK(r.set.count() * (g.max_degree() + 1) >= g.order());
        }
    }

    TEST_CASE("epsilon and alpha recursion")
    {
        CHECK(epsilon_k(3) == doctest::Approx(1.0 / 200));
        double a4 = 1.0 / 3 + 1.0 / 200;
        CHECK(alpha_k(3, 4) == doctest::Approx(a4));
        CHECK(alpha_k(3, 5) == doctest::Approx(1 - 1 / (1 + a4)));
        CHECK_THROWS_AS(alpha_k(3, 3), InputError);
    }
}

TEST_SUITE("ksfree")
{
    TEST_CASE("K4-free input delegates immediately")
    {
        auto r = ksfree_recursion(graphs::petersen(), 5, 5, SeededRng(1));
        REQUIRE(r.trace.size() == 1);
        CHECK(r.trace[0]["action"] == "ckfree");
    }

    TEST_CASE("K_{5,5,5,5} with k = 3")
    {
        auto g = graphs::complete_multipartite({5, 5, 5, 5});
        auto r = ksfree_recursion(g, 5, 3, SeededRng(2));
        CHECK_FALSE(has_cycle_of_length(g, r.set, 3));
        CHECK(r.set.count() >= 5);
        CHECK(r.certificate.measures().contains("alpha_k"));
    }

    TEST_CASE("C5 blown up by 4 with s = 6, k = 4")
    {
        auto g = graphs::blowup(graphs::cycle(5), 4);
        auto r = ksfree_recursion(g, 6, 4, SeededRng(3));
        CHECK_FALSE(has_cycle_of_length(g, r.set, 4));
    }

    TEST_CASE("K_s is rejected")
    {
        CHECK_THROWS_AS(ksfree_recursion(graphs::complete(5), 5, 3, SeededRng(1)), InputError);
    }
}

TEST_SUITE("gplus")
{
    TEST_CASE("C5 with v = 0, w = 2")
    {
        auto fam = gplus_family(graphs::cycle(5), 0, 2);
        CHECK(fam.gplus.adjacent(0, 3));
        CHECK(fam.gplus.adjacent(2, 4));
        CHECK(fam.gplus.size() == 7);
        for (int x : {1, 3, 4}) {
            CHECK(fam.gplus.adjacent(0, x));
            CHECK(fam.gplus.adjacent(2, x));
        }
        CHECK(fam.gstar_labels == std::vector<int>{0, 1, 3, 4});
        std::set<std::pair<int, int>> star;
        for (auto [a, b] : fam.gstar.edges())
            star.insert(std::minmax(fam.gstar_labels[a], fam.gstar_labels[b]));
        CHECK(star == std::set<std::pair<int, int>>{{0, 1}, {0, 4}, {0, 3}, {3, 4}});
        CHECK(fam.gstarstar_labels == std::vector<int>{1, 3, 4});
        CHECK(fam.gstarstar.edges() == std::vector<Edge>{{1, 2}});
        CHECK(fam.v_in_gstar == 0);
    }

    TEST_CASE("empty graph on two vertices")
    {
        auto fam = gplus_family(Graph(2), 0, 1);
        CHECK(fam.gplus == Graph(2));
        CHECK(fam.gstar.order() == 1);
        CHECK(fam.gstarstar.order() == 0);
    }

    TEST_CASE("P4 with v = 0, w = 3")
    {
        auto fam = gplus_family(graphs::path(4), 0, 3);
        auto expected = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}});
        CHECK(fam.gplus == expected);
    }

    TEST_CASE("clone rows are identical off the pair")
    {
        SeededRng rng(10, "gplus");
        for (int trial = 0; trial < 50; ++trial) {
            auto g = oracle::random_graph(8, 0.4, rng);
            auto pair = first_nonadjacent_pair(g);
            if (! pair)
                continue;
            auto fam = gplus_family(g, pair->first, pair->second);
            for (int x = 0; x < 8; ++x)
                if (x != pair->first && x != pair->second)
                    CHECK(fam.gplus.adjacent(pair->first, x) == fam.gplus.adjacent(pair->second, x));
            CHECK_FALSE(fam.gplus.adjacent(pair->first, pair->second));
            CHECK(fam.gstar.order() == 7);
            CHECK(fam.gstarstar.order() == 6);
        }
    }

    TEST_CASE("adjacent pair is rejected")
    {
        CHECK_THROWS_AS(gplus_family(graphs::cycle(5), 0, 1), InputError);
    }
}

TEST_SUITE("girth_hypergraph")
{
    TEST_CASE("t = 40, r = 3")
    {
        auto res = random_girth_hypergraph(40, 3, SeededRng(1));
        CHECK(hypergraph_girth_at_least(res.hypergraph, 5).pass);
        CHECK(res.params.p > 0);
        CHECK(res.params.p <= 1);
        for (auto & rec : res.params.pruning) {
            std::set<int> used;
            for (auto & c : rec.cycles)
                for (int e : c)
                    CHECK(used.insert(e).second);
        }
    }

    TEST_CASE("t = 30, r = 2 is a triangle-free graph")
    {
        auto res = random_girth_hypergraph(30, 2, SeededRng(2));
        Graph g(30);
        for (auto & e : res.hypergraph.edges())
            CHECK(g.add_edge(e[0], e[1]));
        CHECK_FALSE(find_triangle(g));
    }

    TEST_CASE("preconditions")
    {
        CHECK_THROWS_AS(random_girth_hypergraph(10, 1, SeededRng(1)), InputError);
        CHECK_THROWS_AS(random_girth_hypergraph(2, 3, SeededRng(1)), InputError);
    }
}

TEST_SUITE("sprop")
{
    TEST_CASE("no edges")
    {
        auto rep = sprop_statistics(Hypergraph(12, {}, 2), 2, 10, SeededRng(1));
        CHECK(rep.exhaustive);
        CHECK(rep.evaluated > 0);
        for (auto & [s, agg] : rep.per_size.items())
            CHECK(agg["min_count"] == 0);
    }

    TEST_CASE("complete 3-uniform at t = 10, |S| = 9")
    {
        std::vector<HyperEdge> edges;
        for (int a = 0; a < 10; ++a)
            for (int b = a + 1; b < 10; ++b)
                for (int c = b + 1; c < 10; ++c)
                    edges.push_back({a, b, c});
        Hypergraph h(10, edges, 3);
        for (int out = 0; out < 10; ++out) {
            VertexSet s = VertexSet::full(10);
            s.erase(out);
            CHECK(count_s_edges(h, s) == 36);
        }
    }

    TEST_CASE("sampled report is deterministic and recounts")
    {
        auto fstar = random_girth_hypergraph(60, 3, SeededRng(4)).hypergraph;
        auto a = sprop_statistics(fstar, 3, 200, SeededRng(5));
        auto b = sprop_statistics(fstar, 3, 200, SeededRng(5));
        CHECK(a.to_json() == b.to_json());
        CHECK_FALSE(a.exhaustive);
        CHECK(a.evaluated == 200);
        for (std::size_t i = 0; i < a.samples.size(); i += 17) {
            auto members = a.samples[i]["members"].get<std::vector<int>>();
            std::set<int> s(members.begin(), members.end());
            long long count = 0;
            for (auto & e : fstar.edges()) {
                int outside = 0;
                for (int v : e)
                    outside += s.count(v) == 0;
                count += outside == 1;
            }
            CHECK(a.samples[i]["count"] == count);
        }
    }
}

TEST_SUITE("theorem4_part2")
{
    TEST_CASE("C5 at t = 40 and C4 at t = 30")
    {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto a = theorem4_part2_build(graphs::cycle(5), 40, SeededRng(seed));
            CHECK(a.certificate.verdict("g_free") == Verdict::Pass);
            CHECK(a.certificate.verdict("edges_inside_hyperedges") == Verdict::Pass);
            CHECK_FALSE(oracle::embeds(a.f, graphs::cycle(5)));
            auto b = theorem4_part2_build(graphs::cycle(4), 30, SeededRng(seed));
            CHECK(b.certificate.verdict("g_free") == Verdict::Pass);
            CHECK(b.f.order() == 30);
        }
    }

    TEST_CASE("each hyperedge carries a copy of G*")
    {
        auto res = theorem4_part2_build(graphs::cycle(4), 30, SeededRng(6));
        for (auto & pl : res.placements) {
            auto e = res.fstar.hypergraph.edge(pl.hyperedge);
            auto img = pl.image;
            std::sort(img.begin(), img.end());
            CHECK(img == e);
            for (auto [a, b] : res.family.gstar.edges())
                CHECK(res.f.adjacent(pl.image[a], pl.image[b]));
        }
    }

    TEST_CASE("empty F* gives the empty graph")
    {
        auto res = theorem4_part2_build(graphs::cycle(5), Hypergraph(12, {}, 4), SeededRng(1));
        CHECK(res.f.size() == 0);
        CHECK(res.certificate.verdict("g_free") == Verdict::Pass);
    }

    TEST_CASE("special edge detection")
    {
        auto fam = gplus_family(graphs::cycle(4), 0, 2);
        Hypergraph fstar(6, {{0, 1, 2}}, 3);
        auto [f, placements] = place_gstar(fam, fstar, SeededRng(3));
        int v_image = placements[0].image[fam.v_in_gstar];
        VertexSet s = VertexSet::full(6);
        s.erase(v_image);
        CHECK(special_edge(fam, fstar, placements, s) == 0);
        VertexSet all = VertexSet::full(6);
        CHECK_FALSE(special_edge(fam, fstar, placements, all));
    }

    TEST_CASE("all pairs and explicit pair")
    {
        Theorem4Part2Options opt;
        opt.try_all_pairs = true;
        auto res = theorem4_part2_build(graphs::cycle(5), 40, SeededRng(2), opt);
        CHECK(res.certificate.measures()["other_pairs"].size() == 4);
        opt = {};
        opt.pair = std::pair{1, 3};
        auto alt = theorem4_part2_build(graphs::cycle(5), 40, SeededRng(2), opt);
        CHECK(alt.family.v == 1);
        CHECK(alt.certificate.verdict("g_free") == Verdict::Pass);
    }

    TEST_CASE("sunflower threshold calculator")
    {
        auto st = sunflower_threshold(40, 3);
        CHECK(st.R == 7);
        double expected = std::lgamma(41.0) + 40 * std::log(7.0 * 741 - 1); // C(39,2) = 741
        CHECK(st.log_T == doctest::Approx(expected));
        CHECK(st.b == doctest::Approx(std::pow(40.0, 1 - 1.0 / 45)));
    }

    TEST_CASE("preconditions")
    {
        CHECK_THROWS_AS(theorem4_part2_build(graphs::complete(4), 30, SeededRng(1)), InputError);
        CHECK_THROWS_AS(theorem4_part2_build(graphs::path(4), 30, SeededRng(1)), InputError);
    }
}

TEST_SUITE("theorem4_part1")
{
    TEST_CASE("high-girth bipartite generator")
    {
        auto hg = high_girth_bipartite(64, 3, 12, SeededRng(1));
        int gg = girth(hg.graph);
        CHECK((gg == 0 || gg > 12));
        CHECK(hg.max_degree <= 3);
        CHECK(bipartition(hg.graph));
        for (auto [u, v] : hg.graph.edges())
            CHECK(hg.left.contains(u) != hg.left.contains(v));
    }

    TEST_CASE("C5 with F = K2")
    {
        auto res = theorem4_part1_build(graphs::cycle(5), graphs::complete(2), 64, 3, 12, SeededRng(1));
        CHECK(res.graph.order() == 64);
        CHECK(res.certificate.verdict("g_free") == Verdict::Pass);
        CHECK_FALSE(oracle::embeds(res.graph, graphs::cycle(5)));
        CHECK(res.certificate.measures()["max_f_free_subset"]["status"] == "optimal");
    }

    TEST_CASE("C5 with F = C4")
    {
        CHECK(is_hom_free(graphs::cycle(4), graphs::cycle(5)).hom_free);
        auto res = theorem4_part1_build(graphs::cycle(5), graphs::cycle(4), 64, 3, 12, SeededRng(2));
        CHECK(res.certificate.verdict("g_free") == Verdict::Pass);
    }

    TEST_CASE("degenerate instance is flagged")
    {
        auto res = theorem4_part1_build(graphs::cycle(5), graphs::complete(2), 1, 1, 12, SeededRng(1));
        CHECK(res.graph.size() == 0);
        CHECK(res.certificate.measures()["degenerate"] == true);
        CHECK(res.certificate.verdict("g_free") == Verdict::Pass);
    }

    TEST_CASE("F not hom(G)-free is rejected with the homomorphism")
    {
        try {
            theorem4_part1_build(graphs::cycle(5), graphs::complete(3), 16, 3, 12, SeededRng(1));
            FAIL("expected an input error");
        } catch (const InputError & e) {
            auto h = e.witness()["homomorphism"].get<std::vector<int>>();
            CHECK(is_homomorphism(graphs::cycle(5), graphs::complete(3), h));
        }
        CHECK_THROWS_AS(theorem4_part1_build(graphs::path(4), graphs::complete(2), 16, 3, 12, SeededRng(1)),
            InputError);
    }
}

TEST_SUITE("ramsey_witness")
{
    TEST_CASE("C5 witnesses r(K2, 3) = 3 against K3")
    {
        auto cert = ramsey_witness_check(graphs::cycle(5), graphs::complete(2), graphs::complete(3), 3, 3);
        CHECK(cert.verdict("G_free") == Verdict::Pass);
        CHECK(cert.verdict("independence_below_t") == Verdict::Pass);
        CHECK(cert.verdict("F_free_below_rFt") == Verdict::Pass);
    }

    TEST_CASE("t = 2 fails the independence hypothesis")
    {
        auto cert = ramsey_witness_check(graphs::cycle(5), graphs::complete(2), graphs::complete(3), 2, 3);
        CHECK(cert.verdict("independence_below_t") == Verdict::Fail);
    }

    TEST_CASE("8-vertex triangle-free graph with independence 3")
    {
        auto w = graphs::wagner();
        auto cert = ramsey_witness_check(w, graphs::complete(2), graphs::complete(3), 4, 4);
        CHECK(cert.verdict("G_free") == Verdict::Pass);
        CHECK(cert.verdict("independence_below_t") == Verdict::Pass);
        CHECK(cert.verdict("F_free_below_rFt") == Verdict::Pass);
    }
}

TEST_SUITE("enumeration")
{
    TEST_CASE("canonical form is invariant under relabelling")
    {
        SeededRng rng(12, "canon");
        for (int trial = 0; trial < 100; ++trial) {
            int n = 1 + static_cast<int>(rng.below(8));
            auto g = oracle::random_graph(n, 0.5, rng);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            rng.shuffle(perm);
            Graph h(n);
            for (auto [u, v] : g.edges())
                h.add_edge(perm[u], perm[v]);
            CHECK(canonical_form(g) == canonical_form(h));
        }
        CHECK(canonical_form(graphs::cycle(6)) != canonical_form(graphs::complete_bipartite(3, 3)));
        CHECK(canonical_form(graphs::petersen()) != canonical_form(graphs::blowup(graphs::cycle(5), 2)));
    }

    TEST_CASE("G-free classes match labelled enumeration up to isomorphism")
    {
        for (auto g : {graphs::complete(3), graphs::cycle(4), graphs::path(3)}) {
            for (int n = 1; n <= 5; ++n) {
                std::set<std::string> classes;
                int pairs = n * (n - 1) / 2;
                for (unsigned mask = 0; mask < (1U << pairs); ++mask) {
                    Graph h(n);
                    int bit = 0;
                    for (int u = 0; u < n; ++u)
                        for (int v = u + 1; v < n; ++v, ++bit)
                            if (mask >> bit & 1U)
                                h.add_edge(u, v);
                    if (! oracle::embeds(h, g))
                        classes.insert(oracle::canonical(h));
                }
                auto listed = enumerate_g_free_graphs(g, n);
                CHECK(listed.size() == classes.size());
                for (auto & h : listed)
                    CHECK_FALSE(oracle::embeds(h, g));
            }
        }
    }
}

TEST_SUITE("brute_force_f")
{
    TEST_CASE("small values of f_{K2,K3}")
    {
        CHECK(brute_force_f(graphs::complete(2), graphs::complete(3), 2).value == 1);
        auto five = brute_force_f(graphs::complete(2), graphs::complete(3), 5);
        CHECK(five.value == 2);
        CHECK(five.exact);
        CHECK(oracle::independence_number(five.witness) == 2);
        CHECK(brute_force_f(graphs::complete(2), graphs::complete(3), 6).value == 3);
    }

    TEST_CASE("monotone in n and dominated by F = K2")
    {
        for (auto g : {graphs::complete(3), graphs::cycle(4)}) {
            int prev = 0;
            for (int n = 1; n <= 6; ++n) {
                int k2 = brute_force_f(graphs::complete(2), g, n).value;
                int p3 = brute_force_f(graphs::path(3), g, n).value;
                CHECK(k2 >= prev);
                CHECK(p3 >= k2);
                prev = k2;
            }
        }
    }

    TEST_CASE("preconditions")
    {
        CHECK_THROWS_AS(brute_force_f(Graph(2), graphs::complete(3), 4), InputError);
        CHECK_THROWS_AS(brute_force_f(graphs::complete(2), graphs::complete(3), 9), InputError);
    }
}
