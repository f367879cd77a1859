#include <erogers/errors.hpp>
#include <erogers/pipelines.hpp>
#include <erogers/subgraph.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace erogers {

std::optional<std::pair<int, int>> first_nonadjacent_pair(const Graph & g)
{
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (! g.adjacent(u, v))
                return std::pair{u, v};
    return std::nullopt;
}

GPlusFamily gplus_family(const Graph & g, int v, int w)
{
    int n = g.order();
    if (v < 0 || w < 0 || v >= n || w >= n || v == w)
        throw InputError("v and w must be distinct vertices", {{"v", v}, {"w", w}, {"n", n}});
    if (g.adjacent(v, w))
        throw InputError("v and w are adjacent", {{"edge", {v, w}}});

    GPlusFamily fam;
    fam.base = g;
    fam.v = v;
    fam.w = w;
    fam.gplus = g;
    auto joined = g.neighbours(v) | g.neighbours(w);
    joined.for_each([&](int x) {
        fam.gplus.add_edge(v, x);
        fam.gplus.add_edge(w, x);
    });
    for (int x = 0; x < n; ++x)
        if (x != v && x != w && fam.gplus.adjacent(v, x) != fam.gplus.adjacent(w, x))
            throw ValidationFault("v and w are not clones in G+");

    fam.gstar = delete_vertices(fam.gplus, {w});
    fam.gstarstar = delete_vertices(fam.gplus, {v, w});
    for (int x = 0; x < n; ++x) {
        if (x == w)
            continue;
        if (x == v)
            fam.v_in_gstar = static_cast<int>(fam.gstar_labels.size());
        fam.gstar_labels.push_back(x);
        if (x != v)
            fam.gstarstar_labels.push_back(x);
    }
    return fam;
}

nlohmann::json SunflowerThreshold::to_json() const
{
    return {{"t", t}, {"r", r}, {"sunflower.R", R}, {"log_T", log_T}, {"b", b}};
}

SunflowerThreshold sunflower_threshold(int t, int r)
{
    SunflowerThreshold st;
    st.t = t;
    st.r = r;
    st.R = 1;
    for (int i = 2; i <= r; ++i)
        st.R *= i;
    st.R += 1;
    double binom = std::exp(std::lgamma(t) - std::lgamma(r) - std::lgamma(t - r + 1.0));
    st.log_T = std::lgamma(t + 1.0) + t * std::log(static_cast<double>(st.R) * std::round(binom) - 1.0);
    st.b = std::pow(static_cast<double>(t), 1.0 - 1.0 / (5.0 * r * r));
    return st;
}

std::pair<Graph, std::vector<Placement>> place_gstar(const GPlusFamily & family, const Hypergraph & fstar,
    const SeededRng & rng)
{
    const int r = family.gstar.order();
    Graph f(fstar.order());
    std::vector<Placement> placements;
    placements.reserve(fstar.size());
    for (int i = 0; i < fstar.size(); ++i) {
        auto & e = fstar.edge(i);
        if (static_cast<int>(e.size()) != r)
            throw InputError("hyperedge size differs from |V(G*)|", {{"edge", e}, {"r", r}});
        std::vector<int> perm(r);
        std::iota(perm.begin(), perm.end(), 0);
        auto sub = rng.substream("placement", static_cast<std::uint64_t>(i));
        sub.shuffle(perm);
        Placement pl{i, std::vector<int>(r)};
        for (int j = 0; j < r; ++j)
            pl.image[j] = e[perm[j]];
        for (auto [a, b] : family.gstar.edges())
            f.add_edge(pl.image[a], pl.image[b]);
        placements.push_back(std::move(pl));
    }
    return {std::move(f), std::move(placements)};
}

std::optional<int> special_edge(const GPlusFamily & family, const Hypergraph & fstar,
    const std::vector<Placement> & placements, const VertexSet & s)
{
    for (auto & pl : placements) {
        int outside = -1, count = 0;
        for (int x : fstar.edge(pl.hyperedge))
            if (! s.contains(x)) {
                outside = x;
                ++count;
            }
        if (count == 1 && pl.image[family.v_in_gstar] == outside)
            return pl.hyperedge;
    }
    return std::nullopt;
}

namespace {

void require_part2_pattern(const Graph & g)
{
    if (g.order() < 3 || ! is_biconnected(g))
        throw InputError("G must be 2-connected");
    if (is_complete(g))
        throw InputError("G must not be a clique");
}

nlohmann::json placements_json(const std::vector<Placement> & placements)
{
    nlohmann::json out = nlohmann::json::array();
    for (auto & pl : placements)
        out.push_back({{"hyperedge", pl.hyperedge}, {"image", pl.image}});
    return out;
}

// Places G* for one pair and audits the result.
Theorem4Part2Result build_for_pair(const Graph & g, std::pair<int, int> pair, const Hypergraph & fstar,
    const SeededRng & rng, const Budget & budget)
{
    Theorem4Part2Result out;
    out.family = gplus_family(g, pair.first, pair.second);
    auto placed = place_gstar(out.family, fstar, rng.substream("placements"));
    out.f = std::move(placed.first);
    out.placements = std::move(placed.second);

    auto & cert = out.certificate;
    const int r = g.order() - 1;
    cert.param("G.edges", g.edges());
    cert.param("t", fstar.order());
    cert.param("r", r);
    cert.param("pair", {pair.first, pair.second});
    cert.seed(rng.label() + "/placements", rng.seed());
    cert.measure("gplus_edges", out.family.gplus.edges());
    cert.measure("gstar_labels", out.family.gstar_labels);
    cert.measure("gstarstar_labels", out.family.gstarstar_labels);
    cert.measure("hyperedges", fstar.size());
    cert.measure("edges", out.f.size());
    cert.measure("placements", placements_json(out.placements));
    cert.measure("sunflower", sunflower_threshold(fstar.order(), r).to_json());

    auto girth = hypergraph_girth_at_least(fstar, r + 2);
    cert.check("girth_at_least_r_plus_2", girth.pass, girth.pass ? nlohmann::json() : girth.witness(fstar));

    std::optional<Edge> stray;
    for (auto [a, b] : out.f.edges()) {
        auto & ia = fstar.incident(a);
        auto & ib = fstar.incident(b);
        std::vector<int> both;
        std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(both));
        if (both.empty()) {
            stray = Edge{a, b};
            break;
        }
    }
    cert.check("edges_inside_hyperedges", ! stray, stray ? nlohmann::json(*stray) : nlohmann::json());

    auto search = contains_subgraph(out.f, g, budget);
    Verdict v = search.absent() ? Verdict::Pass : search.found() ? Verdict::Fail : Verdict::Unknown;
    cert.check("g_free", v, search.found() ? nlohmann::json(search.embedding) : nlohmann::json());
    cert.measure("g_free_search_nodes", search.nodes);
    return out;
}

} // namespace

Theorem4Part2Result theorem4_part2_build(const Graph & g, const Hypergraph & fstar, const SeededRng & rng,
    const Theorem4Part2Options & options)
{
    require_part2_pattern(g);
    const int r = g.order() - 1;
    if (fstar.size() > 0 && fstar.common_edge_size() != r)
        throw InputError("F* must be (|V(G)| - 1)-uniform", {{"r", r}});

    auto pair = options.pair ? *options.pair : *first_nonadjacent_pair(g);
    auto out = build_for_pair(g, pair, fstar, rng, options.verify_budget);
    if (options.try_all_pairs) {
        nlohmann::json others = nlohmann::json::array();
        for (int u = 0; u < g.order(); ++u)
            for (int w = u + 1; w < g.order(); ++w) {
                if (g.adjacent(u, w) || std::pair{u, w} == pair)
                    continue;
                auto alt = build_for_pair(g, {u, w}, fstar, rng, options.verify_budget);
                others.push_back({{"pair", {u, w}}, {"g_free", to_string(alt.certificate.verdict("g_free"))},
                    {"edges", alt.f.size()}});
            }
        out.certificate.measure("other_pairs", others);
    }
    return out;
}

Theorem4Part2Result theorem4_part2_build(const Graph & g, int t, const SeededRng & rng,
    const Theorem4Part2Options & options)
{
    require_part2_pattern(g);
    auto fstar = random_girth_hypergraph(t, g.order() - 1, rng.substream("fstar"));
    auto out = theorem4_part2_build(g, fstar.hypergraph, rng, options);
    out.certificate.attach("fstar", fstar.certificate);
    out.fstar = std::move(fstar);
    return out;
}

nlohmann::json HighGirthBipartite::to_json() const
{
    return {{"n", left.count()}, {"target_degree", target_degree}, {"girth_target", girth_target},
        {"min_degree", min_degree}, {"max_degree", max_degree}, {"edges", graph.size()},
        {"parallel_removed", parallel_removed}, {"short_cycle_removed", short_cycle_removed}};
}

namespace {

// Length of a shortest u-v path avoiding the edge uv, if at most `limit`.
bool has_short_detour(const Graph & g, int u, int v, int limit)
{
    std::vector<int> dist(g.order(), -1);
    std::deque<int> queue{u};
    dist[u] = 0;
    while (! queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (dist[x] >= limit)
            continue;
        bool hit = false;
        g.neighbours(x).for_each([&](int y) {
            if (hit || dist[y] >= 0 || (x == u && y == v))
                return;
            dist[y] = dist[x] + 1;
            if (y == v)
                hit = true;
            queue.push_back(y);
        });
        if (hit)
            return true;
    }
    return false;
}

} // namespace

HighGirthBipartite high_girth_bipartite(int n, int d, int girth_target, const SeededRng & rng)
{
    if (n < 1 || d < 1 || d > n)
        throw InputError("need 1 <= d <= n", {{"n", n}, {"d", d}});
    if (girth_target < 4)
        throw InputError("girth target must be at least 4");

    HighGirthBipartite out;
    out.graph = Graph(2 * n);
    out.left = VertexSet(2 * n);
    for (int i = 0; i < n; ++i)
        out.left.insert(i);
    out.target_degree = d;
    out.girth_target = girth_target;

    std::vector<int> right_stubs;
    right_stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j)
            right_stubs.push_back(n + i);
    auto pairing = rng.substream("pairing");
    pairing.shuffle(right_stubs);
    for (std::size_t s = 0; s < right_stubs.size(); ++s)
        if (! out.graph.add_edge(static_cast<int>(s) / d, right_stubs[s]))
            ++out.parallel_removed;

    // One pass suffices: an edge left on a short cycle would have seen that
    // cycle intact when it was examined.
    auto order = out.graph.edges();
    auto pruning = rng.substream("pruning");
    pruning.shuffle(order);
    for (auto [u, v] : order)
        if (has_short_detour(out.graph, u, v, girth_target - 1)) {
            out.graph.remove_edge(u, v);
            ++out.short_cycle_removed;
        }
    out.min_degree = out.graph.min_degree();
    out.max_degree = out.graph.max_degree();
    return out;
}

Theorem4Part1Result theorem4_part1_build(const Graph & g, const Graph & f, int n, int d, int girth_target,
    const SeededRng & rng, const Theorem4Part1Options & options)
{
    if (f.size() < 1)
        throw InputError("F must have at least one edge");
    if (is_acyclic(g))
        throw InputError("G must contain a cycle");
    auto hom = is_hom_free(f, g);
    if (! hom.hom_free)
        throw InputError("F is not hom(G)-free", {{"homomorphism", hom.witness}});

    Theorem4Part1Result out;
    out.bipartite = high_girth_bipartite(n, d, girth_target, rng.substream("bipartite"));
    out.cover = square_clique_cover(out.bipartite.graph, out.bipartite.left);
    auto blown = random_blowup(out.cover, f, rng.substream("blowup"));
    out.graph = std::move(blown.first);
    out.colouring = std::move(blown.second);

    auto & cert = out.certificate;
    cert.param("G.edges", g.edges());
    cert.param("G.order", g.order());
    cert.param("F.edges", f.edges());
    cert.param("F.order", f.order());
    cert.param("n", n);
    cert.param("d", d);
    cert.param("girth_target", girth_target);
    cert.seed(rng.label() + "/bipartite", rng.seed());
    cert.seed(rng.label() + "/blowup", rng.seed());
    cert.measure("bipartite", out.bipartite.to_json());
    cert.measure("cliques", out.cover.cliques.size());
    cert.measure("edges", out.graph.size());
    cert.measure("degenerate", out.graph.size() == 0);

    auto violation = find_cover_violation(out.cover);
    cert.check("cover_edge_disjoint", ! violation, violation ? *violation : nlohmann::json());
    auto search = contains_subgraph(out.graph, g, options.verify_budget);
    Verdict v = search.absent() ? Verdict::Pass : search.found() ? Verdict::Fail : Verdict::Unknown;
    cert.check("g_free", v, search.found() ? nlohmann::json(search.embedding) : nlohmann::json());

    double t = f.order();
    double bound = 2.0 * n * t * std::log(t) / d;
    cert.measure("ffree_bound", bound);
    if (options.measure) {
        auto best = max_f_free_subset(out.graph, f, options.measure_budget);
        cert.measure("max_f_free_subset", {{"size", best.size()}, {"status", to_string(best.status)}});
    }
    return out;
}

} // namespace erogers
