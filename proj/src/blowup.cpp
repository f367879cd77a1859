#include <erogers/blowup.hpp>
#include <erogers/errors.hpp>

#include <algorithm>
#include <cmath>

namespace erogers {

nlohmann::json BlowupColoring::to_json() const
{
    return {{"pattern_order", pattern.order()}, {"pattern_edges", pattern.edges()}, {"colours", colours},
        {"seed", seed}, {"label", label}};
}

std::pair<Graph, BlowupColoring> random_blowup(const CliqueCover & cover, const Graph & pattern, const SeededRng & rng)
{
    if (pattern.size() < 1)
        throw InputError("blowup pattern must have at least one edge");
    if (auto bad = find_cover_violation(cover))
        throw InputError("clique cover is not edge-disjoint", *bad);

    BlowupColoring col;
    col.pattern = pattern;
    col.seed = rng.seed();
    col.label = rng.label();
    col.colours.resize(cover.cliques.size());
    auto t = static_cast<std::uint64_t>(pattern.order());
    for (std::size_t c = 0; c < cover.cliques.size(); ++c) {
        auto sub = rng.substream("clique", c);
        auto & colours = col.colours[c];
        colours.reserve(cover.cliques[c].size());
        for (std::size_t i = 0; i < cover.cliques[c].size(); ++i)
            colours.push_back(static_cast<int>(sub.below(t)));
    }
    return {apply_coloring(cover, col), col};
}

Graph apply_coloring(const CliqueCover & cover, const BlowupColoring & col)
{
    if (col.colours.size() != cover.cliques.size())
        throw InputError("colouring does not match the cover");
    Graph out(cover.host.order());
    for (std::size_t c = 0; c < cover.cliques.size(); ++c) {
        auto & k = cover.cliques[c];
        auto & colour = col.colours[c];
        if (colour.size() != k.size())
            throw InputError("colouring of clique " + std::to_string(c) + " has the wrong domain");
        for (std::size_t a = 0; a < k.size(); ++a)
            for (std::size_t b = a + 1; b < k.size(); ++b)
                if (col.pattern.adjacent(colour[a], colour[b]))
                    out.add_edge(k[a], k[b]);
    }
    return out;
}

nlohmann::json FailureBound::to_json() const
{
    return {{"t", t}, {"R", R}, {"N", N}, {"log_set_count", log_set_count}, {"log_probability", log_probability},
        {"log_probability_exp", log_probability_exp}, {"log_target", log_target}, {"log_expected", log_expected},
        {"chain_holds", chain_holds}, {"guaranteed", guaranteed}};
}

FailureBound theorem1_failure_bound(int t, long long R, long long N)
{
    if (t < 2 || R < 0 || N < 2)
        throw InputError("theorem1_failure_bound needs t >= 2, R >= 0, N >= 2");
    FailureBound b;
    b.t = t;
    b.R = R;
    b.N = N;
    double n = static_cast<double>(N), n2 = n * n;
    b.log_set_count = std::lgamma(n2 + 1) - std::lgamma(n + 1) - std::lgamma(n2 - n + 1);
    double logt = std::log(static_cast<double>(t));
    b.log_probability = n * logt + static_cast<double>(R) * n * std::log1p(-1.0 / t);
    b.log_probability_exp = n * logt - static_cast<double>(R) * n / t;
    b.log_target = -2 * n * std::log(n);
    b.log_expected = b.log_set_count + b.log_probability;
    b.chain_holds = b.log_probability_exp < b.log_target;
    b.guaranteed = b.log_expected < 0;
    return b;
}

CliqueCover square_clique_cover(const Graph & bip, const VertexSet & left)
{
    if (left.universe() != bip.order())
        throw InputError("left part does not match graph order");
    for (auto [u, v] : bip.edges())
        if (left.contains(u) == left.contains(v))
            throw InputError("graph is not bipartite along the given parts", {u, v});

    auto lefts = left.members();
    std::vector<int> index(bip.order(), -1);
    for (std::size_t i = 0; i < lefts.size(); ++i)
        index[lefts[i]] = static_cast<int>(i);

    CliqueCover cover;
    cover.host = Graph(static_cast<int>(lefts.size()));
    // Two right vertices with two common left neighbours form a 4-cycle.
    for (int y = 0; y < bip.order(); ++y) {
        if (left.contains(y))
            continue;
        std::vector<int> clique;
        bip.neighbours(y).for_each([&](int x) { clique.push_back(index[x]); });
        if (clique.size() < 2)
            continue;
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b) {
                int u = clique[a], w = clique[b];
                if (! cover.host.add_edge(u, w)) {
                    // Find the earlier right vertex sharing u and w.
                    int other = -1;
                    for (int z = 0; z < y && other < 0; ++z)
                        if (! left.contains(z) && bip.adjacent(z, lefts[u]) && bip.adjacent(z, lefts[w]))
                            other = z;
                    throw InputError("bipartite graph has a 4-cycle; the squared cliques would share an edge",
                        nlohmann::json::array({lefts[u], y, lefts[w], other}));
                }
            }
        cover.cliques.push_back(std::move(clique));
        cover.labels.push_back(y);
    }
    return cover;
}

bool is_homomorphism(const Graph & g, const Graph & f, const std::vector<int> & map)
{
    if (static_cast<int>(map.size()) != g.order())
        return false;
    for (int v : map)
        if (v < 0 || v >= f.order())
            return false;
    for (auto [a, b] : g.edges())
        if (! f.adjacent(map[a], map[b]))
            return false;
    return true;
}

namespace {
    bool extend_hom(const Graph & g, const Graph & f, const std::vector<int> & order, std::size_t depth,
        std::vector<int> & map)
    {
        if (depth == order.size())
            return true;
        int v = order[depth];
        VertexSet cand = VertexSet::full(f.order());
        g.neighbours(v).for_each([&](int w) {
            if (map[w] >= 0)
                cand &= f.neighbours(map[w]);
        });
        for (int c = cand.first(); c != -1; c = cand.next(c + 1)) {
            map[v] = c;
            if (extend_hom(g, f, order, depth + 1, map))
                return true;
        }
        map[v] = -1;
        return false;
    }
}

std::optional<std::vector<int>> find_homomorphism(const Graph & g, const Graph & f)
{
    if (g.order() == 0)
        return std::vector<int>{};
    if (f.order() == 0)
        return std::nullopt;
    // Breadth-first order so that each vertex after the first in a component
    // has an assigned neighbour.
    std::vector<int> order;
    std::vector<bool> queued(g.order(), false);
    while (static_cast<int>(order.size()) < g.order()) {
        int best = -1;
        for (int v = 0; v < g.order(); ++v)
            if (! queued[v] && (best < 0 || g.degree(v) > g.degree(best)))
                best = v;
        queued[best] = true;
        std::size_t head = order.size();
        order.push_back(best);
        while (head < order.size()) {
            int u = order[head++];
            g.neighbours(u).for_each([&](int w) {
                if (! queued[w]) {
                    queued[w] = true;
                    order.push_back(w);
                }
            });
        }
    }
    std::vector<int> map(g.order(), -1);
    if (extend_hom(g, f, order, 0, map)) {
        if (! is_homomorphism(g, f, map))
            throw ValidationFault("homomorphism search produced an invalid map");
        return map;
    }
    return std::nullopt;
}

HomFreeResult is_hom_free(const Graph & f, const Graph & g)
{
    HomFreeResult r;
    if (auto h = find_homomorphism(g, f)) {
        r.hom_free = false;
        r.witness = *h;
    }
    return r;
}

PatternPair::PatternPair(Graph f, Graph g) : f_(std::move(f)), g_(std::move(g))
{
    if (f_.order() < 1)
        throw InputError("pattern F must be nonempty");
    f_triangle_free_ = ! find_triangle(f_).has_value();
    f_hom_free_ = is_hom_free(f_, g_).hom_free;
    g_biconnected_ = is_biconnected(g_);
    g_clique_ = is_complete(g_);
}

nlohmann::json PatternPair::to_json() const
{
    return {{"F_order", f_.order()}, {"F_edges", f_.edges()}, {"G_order", g_.order()}, {"G_edges", g_.edges()},
        {"F_triangle_free", f_triangle_free_}, {"F_hom_G_free", f_hom_free_}, {"G_2_connected", g_biconnected_},
        {"G_clique", g_clique_}};
}

} // namespace erogers
