#include <erogers/clique_cover.hpp>
#include <erogers/errors.hpp>

#include <unordered_map>

namespace erogers {

namespace {
    std::uint64_t pair_key(int u, int v)
    {
        if (u > v)
            std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }
}

std::optional<nlohmann::json> find_cover_violation(const CliqueCover & cover)
{
    std::unordered_map<std::uint64_t, int> owner;
    for (std::size_t c = 0; c < cover.cliques.size(); ++c) {
        auto & k = cover.cliques[c];
        for (std::size_t a = 0; a < k.size(); ++a)
            for (std::size_t b = a + 1; b < k.size(); ++b) {
                int u = k[a], v = k[b];
                if (u < 0 || v < 0 || u >= cover.host.order() || v >= cover.host.order() || u == v
                    || ! cover.host.adjacent(u, v))
                    return nlohmann::json{{"kind", "not-a-clique"}, {"clique", c}, {"pair", {u, v}}};
                auto [it, fresh] = owner.emplace(pair_key(u, v), static_cast<int>(c));
                if (! fresh)
                    return nlohmann::json{{"kind", "shared-edge"}, {"cliques", {it->second, c}}, {"pair", {u, v}}};
            }
    }
    return std::nullopt;
}

std::optional<Edge> find_uncovered_edge(const CliqueCover & cover)
{
    Graph covered(cover.host.order());
    for (auto & k : cover.cliques)
        for (std::size_t a = 0; a < k.size(); ++a)
            for (std::size_t b = a + 1; b < k.size(); ++b)
                covered.add_edge(k[a], k[b]);
    for (auto e : cover.host.edges())
        if (! covered.adjacent(e.first, e.second))
            return e;
    return std::nullopt;
}

std::pair<Graph, CliqueCover> line_intersection_graph(const Hypergraph & h)
{
    if (h.size() == 0)
        throw InputError("line_intersection_graph needs a nonempty hypergraph");
    Graph g(h.size());
    CliqueCover cover;
    for (int v = 0; v < h.order(); ++v) {
        auto & inc = h.incident(v);
        if (inc.empty())
            continue;
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                g.add_edge(inc[a], inc[b]);
        cover.cliques.push_back(inc);
        cover.labels.push_back(v);
    }
    cover.host = g;
    return {g, cover};
}

} // namespace erogers
