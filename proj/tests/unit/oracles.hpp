#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the Graph/Hypergraph containers.

#include <erogers/graph.hpp>
#include <erogers/hypergraph.hpp>
#include <erogers/rng.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using erogers::Graph;

inline bool embeds(const Graph & host, const Graph & pattern, const std::vector<int> & allowed)
{
    int p = pattern.order();
    std::vector<int> map(p, -1);
    std::vector<char> used(host.order(), 0);
    std::function<bool(int)> go = [&](int i) {
        if (i == p)
            return true;
        for (int h : allowed) {
            if (used[h])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (pattern.adjacent(i, j) && ! host.adjacent(h, map[j]))
                    ok = false;
            if (! ok)
                continue;
            used[h] = 1;
            map[i] = h;
            if (go(i + 1))
                return true;
            used[h] = 0;
        }
        return false;
    };
    return go(0);
}

inline bool embeds(const Graph & host, const Graph & pattern)
{
    std::vector<int> all(host.order());
    std::iota(all.begin(), all.end(), 0);
    return embeds(host, pattern, all);
}

inline std::vector<int> bits(unsigned mask, int n)
{
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1U)
            out.push_back(v);
    return out;
}

inline int independence_number(const Graph & g)
{
    int n = g.order(), best = 0;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        auto s = bits(mask, n);
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i)
            for (std::size_t j = i + 1; j < s.size() && ok; ++j)
                ok = ! g.adjacent(s[i], s[j]);
        if (ok)
            best = std::max(best, static_cast<int>(s.size()));
    }
    return best;
}

inline int max_f_free(const Graph & g, const Graph & f)
{
    int n = g.order(), best = 0;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        auto s = bits(mask, n);
        if (static_cast<int>(s.size()) <= best)
            continue;
        if (! embeds(g, f, s))
            best = static_cast<int>(s.size());
    }
    return best;
}

// Closed walks v0 -> ... -> v0 on k distinct vertices, divided by the two directions.
inline long long cycles_through(const Graph & g, int v0, int k)
{
    long long count = 0;
    std::vector<int> path{v0};
    std::vector<char> used(g.order(), 0);
    used[v0] = 1;
    std::function<void()> go = [&]() {
        int last = path.back();
        if (static_cast<int>(path.size()) == k) {
            count += g.adjacent(last, v0);
            return;
        }
        for (int u = 0; u < g.order(); ++u)
            if (! used[u] && g.adjacent(last, u)) {
                used[u] = 1;
                path.push_back(u);
                go();
                path.pop_back();
                used[u] = 0;
            }
    };
    go();
    return count / 2;
}

inline bool has_homomorphism(const Graph & g, const Graph & f)
{
    int n = g.order(), m = f.order();
    if (m == 0)
        return n == 0;
    std::vector<int> map(n, 0);
    while (true) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (! f.adjacent(map[u], map[v])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
        int i = 0;
        while (i < n && ++map[i] == m)
            map[i++] = 0;
        if (i == n)
            return false;
    }
}

// Minimum adjacency string over all vertex permutations.
inline std::string canonical(const Graph & g)
{
    int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s += g.adjacent(perm[i], perm[j]) ? '1' : '0';
        if (best.empty() || s < best)
            best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Graph random_graph(int n, double p, erogers::SeededRng & rng)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                g.add_edge(u, v);
    return g;
}

inline bool is_sunflower(const std::vector<std::vector<int>> & petals)
{
    if (petals.size() < 2)
        return true;
    auto meet = [](const std::vector<int> & a, const std::vector<int> & b) {
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };
    auto core = meet(petals[0], petals[1]);
    for (std::size_t i = 0; i < petals.size(); ++i)
        for (std::size_t j = i + 1; j < petals.size(); ++j)
            if (meet(petals[i], petals[j]) != core)
                return false;
    return true;
}

// Does some m-subfamily form a sunflower?
inline bool has_sunflower(const std::vector<std::vector<int>> & family, int m)
{
    std::vector<std::vector<int>> chosen;
    std::function<bool(std::size_t)> go = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == m)
            return true;
        for (std::size_t i = from; i < family.size(); ++i) {
            chosen.push_back(family[i]);
            if (is_sunflower(chosen) && go(i + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    return go(0);
}

} // namespace oracle
