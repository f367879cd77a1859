#include <erogers/enumerate.hpp>
#include <erogers/errors.hpp>
#include <erogers/subgraph.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace erogers {

namespace {
    using Colouring = std::vector<int>;

    // Colour of v = number of vertices in strictly smaller cells.
    Colouring refine(const Graph & g, Colouring c)
    {
        int n = g.order();
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> keys(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> key{c[v]};
                std::vector<int> nb;
                g.neighbours(v).for_each([&](int w) { nb.push_back(c[w]); });
                std::sort(nb.begin(), nb.end());
                key.insert(key.end(), nb.begin(), nb.end());
                keys[v] = {std::move(key), v};
            }
            auto sorted = keys;
            std::sort(sorted.begin(), sorted.end());
            Colouring next(n);
            int cells_before = static_cast<int>(std::set<int>(c.begin(), c.end()).size());
            for (int i = 0; i < n; ++i) {
                int rank = (i > 0 && sorted[i].first == sorted[i - 1].first) ? next[sorted[i - 1].second] : i;
                next[sorted[i].second] = rank;
            }
            int cells_after = static_cast<int>(std::set<int>(next.begin(), next.end()).size());
            c = std::move(next);
            if (cells_after == cells_before)
                return c;
        }
    }

    std::string leaf_string(const Graph & g, const Colouring & c)
    {
        int n = g.order();
        std::vector<int> at(n);
        for (int v = 0; v < n; ++v)
            at[c[v]] = v;
        std::string s;
        s.reserve(n * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s.push_back(g.adjacent(at[i], at[j]) ? '1' : '0');
        return s;
    }

    void search(const Graph & g, const Colouring & c, std::string & best)
    {
        int n = g.order();
        std::map<int, std::vector<int>> cells;
        for (int v = 0; v < n; ++v)
            cells[c[v]].push_back(v);
        // First smallest non-singleton cell.
        const std::vector<int> * target = nullptr;
        int target_colour = -1;
        for (auto & [colour, members] : cells)
            if (members.size() > 1 && (! target || members.size() < target->size())) {
                target = &members;
                target_colour = colour;
            }
        if (! target) {
            auto s = leaf_string(g, c);
            if (s > best)
                best = std::move(s);
            return;
        }
        for (int v : *target) {
            Colouring next = c;
            for (int u : *target)
                if (u != v)
                    next[u] = target_colour + 1;
            search(g, refine(g, std::move(next)), best);
        }
    }
}

std::string canonical_form(const Graph & g)
{
    int n = g.order();
    std::string best;
    if (n == 0)
        return best;
    search(g, refine(g, Colouring(n, 0)), best);
    return std::to_string(n) + ":" + best;
}

std::vector<Graph> enumerate_g_free_graphs(const Graph & g, int n)
{
    if (n < 0)
        throw InputError("vertex count must be non-negative");
    if (g.order() < 1)
        throw InputError("forbidden graph must have a vertex");
    std::map<std::string, Graph> level;
    level.emplace(canonical_form(Graph(0)), Graph(0));
    for (int k = 0; k < n; ++k) {
        std::map<std::string, Graph> next;
        for (auto & [form, h] : level) {
            for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
                Graph ext(k + 1);
                for (auto [a, b] : h.edges())
                    ext.add_edge(a, b);
                for (int u = 0; u < k; ++u)
                    if (mask >> u & 1U)
                        ext.add_edge(u, k);
                if (contains_subgraph(ext, g, Budget::unlimited(), {nullptr, k}).found())
                    continue;
                auto key = canonical_form(ext);
                next.try_emplace(std::move(key), std::move(ext));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (auto & [form, h] : level)
        out.push_back(h);
    return out;
}

} // namespace erogers
